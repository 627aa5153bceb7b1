// Copyright 2026 The entnorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entnorm/cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "entnorm/cli/operator_file.hpp"
#include "entnorm/cli/report.hpp"
#include "entnorm/criteria.hpp"
#include "entnorm/dualnorms.hpp"
#include "entnorm/error.hpp"
#include "entnorm/invariance.hpp"
#include "entnorm/kyfan.hpp"
#include "entnorm/lp.hpp"
#include "entnorm/schmidt.hpp"
#include "entnorm/sknorm.hpp"
#include "entnorm/states.hpp"

namespace entnorm::cli {

using nlohmann::json;

namespace {

struct Globals {
  std::optional<double> tol;
  Index restarts = 32;
  Index max_iter = 500;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  bool require_decision = false;
  bool inject_svd_failure = false;
};

struct Args {
  std::string file;
  Index k = 1;
  std::string which;
  bool filter = false;
  bool weak = false;
  Index budget = 2000;
  std::string kind;
  Index m = 3;
  Index n = 3;
  std::optional<Index> gen_k;
  std::optional<double> p;
  std::optional<Index> terms;
  std::string gen_out;
  Index trials = 20;
};

// Outcome of a command besides its report.
struct Outcome {
  bool decided = true;
  bool failed = false;  // a property check did not hold
};

SeeSawOptions seesaw_options(const Globals& g) {
  SeeSawOptions opts;
  opts.restarts = g.restarts;
  opts.max_iter = g.max_iter;
  opts.seed = g.seed;
  return opts;
}

json seesaw_tolerances(const Globals& g) {
  const SeeSawOptions opts = seesaw_options(g);
  return json{{"seesaw_tol", opts.tol}, {"restarts", opts.restarts}, {"max_iter", opts.max_iter}};
}

NormInterval exact_interval(double value, const char* method) {
  NormInterval out{value, value, method, method, true};
  return out;
}

OperatorFile load_input(const Args& a, Report& report) {
  OperatorFile file = load_operator(a.file);
  report.file = a.file;
  report.digest = file.digest;
  report.warnings = file.warnings;
  return file;
}

Outcome cmd_schmidt(const Args& a, const Globals&, Report& report) {
  const OperatorFile file = load_input(a, report);
  const SchmidtDecomposition dec = schmidt_decompose(file.pure());
  std::vector<double> coeffs(dec.coeffs.data(), dec.coeffs.data() + dec.coeffs.size());
  report.result = json{{"type", "schmidt"}, {"coefficients", coeffs}, {"rank", dec.rank()}};
  report.tolerances = json{{"schmidt_tol", dec.tol}};
  return {};
}

Outcome cmd_norm(const Args& a, const Globals& g, Report& report) {
  const OperatorFile file = load_input(a, report);
  report.k = a.k;
  report.tolerances = seesaw_tolerances(g);
  const SeeSawOptions opts = seesaw_options(g);
  const Index k = a.k;

  if (a.which == "sk" || a.which == "radius") {
    // On |v><v| both norms reduce to the pure-state formula.
    NormInterval iv;
    if (file.is_pure()) iv = exact_interval(sk_pure(file.pure(), k), "pure_formula");
    else if (a.which == "sk") iv = sk_bounds(file.op(), k, opts);
    else iv = prod_radius_bounds(file.op(), k, opts);
    report.result = interval_json(iv);
  } else if (a.which == "gamma") {
    NormInterval iv;
    if (file.is_pure()) iv = exact_interval(gamma_pure(file.pure(), k), "pure_formula");
    else iv = gamma_bounds(file.op(), k, DualOptions{opts, 0});
    report.result = interval_json(iv);
  } else if (a.which == "k2") {
    report.result = scalar_json(file.is_pure() ? s_k_norm(file.pure(), k) : k2_norm(file.op().mat(), k));
  } else if (a.which == "k2dual") {
    report.result = scalar_json(file.is_pure() ? s_k_dual(file.pure(), k) : k2_dual(file.op().mat(), k));
  } else if (a.which == "sk-dual-vec") {
    const PureState& v = file.pure();
    json terms = json::array();
    for (const WeightedState& t : s_k_dual_decomposition(v, k)) {
      terms.push_back({{"weight", t.weight}, {"amplitudes", vector_json(t.state.amplitudes())}});
    }
    report.result = json{{"type", "vector"},
                         {"value", s_k_dual(v, k)},
                         {"amplitudes", vector_json(s_k_dual_vector(v, k).amplitudes())},
                         {"decomposition", std::move(terms)}};
  } else {
    fail(ErrorCode::parameter, "--which: unknown norm \"" + a.which + "\"");
  }
  return {};
}

json detection_json(const DetectionReport& d) {
  return json{{"criterion", to_string(d.criterion)},
              {"detected", d.detected},
              {"value", d.value},
              {"threshold", d.threshold},
              {"filtered", d.filtered},
              {"unfiltered_value", d.unfiltered_value},
              {"filtered_value", d.filtered_value ? json(*d.filtered_value) : json(nullptr)},
              {"filter_converged", d.filter_converged ? json(*d.filter_converged) : json(nullptr)}};
}

Outcome cmd_detect(const Args& a, const Globals& g, Report& report) {
  const OperatorFile file = load_input(a, report);
  report.k = a.k;
  const BipartiteOperator rho = file.as_operator();
  const double detect_tol = g.tol.value_or(kDetectTol);
  const DetectionReport d = detect_schmidt_number(rho, a.k, a.filter, detect_tol);

  CertifyOptions copts;
  copts.dual.seesaw = seesaw_options(g);
  copts.tol = g.tol.value_or(copts.tol);
  copts.use_filter = a.filter;
  const SchmidtNumberCertificate cert = sn_certify(rho, a.k, copts);

  json result = detection_json(d);
  result["type"] = "verdict";
  result["weak"] = a.weak ? detection_json(weak_realignment(rho, a.k, detect_tol)) : json(nullptr);
  if (file.is_pure()) {
    const PureStateTest t = pure_state_sr_test(file.pure(), a.k, detect_tol);
    result["pure_test"] = json{{"verdict", to_string(t.verdict)}, {"value", t.value}};
  } else {
    result["pure_test"] = nullptr;
  }
  result["certificate"] = json{{"verdict", to_string(cert.verdict)},
                               {"gamma", interval_json(cert.gamma)},
                               {"realignment", cert.realignment},
                               {"evidence", cert.evidence}};
  report.result = std::move(result);
  report.tolerances = seesaw_tolerances(g);
  report.tolerances["detect_tol"] = detect_tol;
  report.tolerances["certify_tol"] = copts.tol;
  // A pure input is always decided by the exact Schmidt-rank test.
  return {file.is_pure() || cert.verdict != SchmidtNumberVerdict::undecided, false};
}

Outcome cmd_blockpos(const Args& a, const Globals& g, Report& report) {
  const OperatorFile file = load_input(a, report);
  report.k = a.k;
  const BlockPositivityResult r = block_positivity_check(file.as_operator(), a.k, seesaw_options(g));
  report.result = json{{"type", "verdict"},
                       {"verdict", to_string(r.verdict)},
                       {"shift", r.shift},
                       {"sk_of_gap", interval_json(r.sk_of_gap)},
                       {"violation", r.violating ? json(r.violation) : json(nullptr)},
                       {"violating", r.violating ? vector_json(r.violating->amplitudes()) : json(nullptr)}};
  report.tolerances = seesaw_tolerances(g);
  report.tolerances["blockpos_tol"] = kBlockPosTol;
  return {r.verdict != BlockPositivity::undecided, false};
}

Outcome cmd_witness(const Args& a, const Globals& g, Report& report) {
  const OperatorFile file = load_input(a, report);
  report.k = a.k;
  const GammaEstimate est = gamma_estimate(file.as_operator(), a.k, DualOptions{seesaw_options(g), 0});
  json witness = nullptr;
  if (est.witness) {
    const Witness& w = *est.witness;
    witness = json{{"kind", w.kind},
                   {"value", w.value()},
                   {"pairing", w.pairing},
                   {"norm_upper", w.norm_upper},
                   {"matrix", matrix_json(w.w)}};
  }
  report.result = json{{"type", "witness"}, {"gamma", interval_json(est.interval)}, {"witness", witness}};
  report.tolerances = seesaw_tolerances(g);
  return {};
}

Outcome cmd_oracle(const Args& a, const Globals& g, Report& report) {
  const OperatorFile file = load_input(a, report);
  report.k = a.k;
  if (a.budget < 0) fail(ErrorCode::parameter, "--budget must be nonnegative");
  const OracleResult r = decomposition_oracle(file.as_operator(), a.k, a.budget, g.seed);
  json result = decomposition_json(r.decomposition);
  result["type"] = "decomposition";
  result["upper"] = r.upper;
  result["budget"] = a.budget;
  result["generators_tried"] = r.generators_tried;
  result["lp_iterations"] = r.lp_iterations;
  report.result = std::move(result);
  report.tolerances = json{{"lp", {{"pivot_tol", lp::Options{}.pivot_tol},
                                   {"feasibility_tol", lp::Options{}.feasibility_tol}}}};
  return {};
}

Outcome cmd_probe(const Args& a, const Globals& g, Report& report) {
  const OperatorFile file = load_input(a, report);
  report.k = a.k;
  const ConjectureReport c = conjecture_probe(file.pure(), a.k, DualOptions{seesaw_options(g), 0});
  report.result = json{{"type", "conjecture"},
                       {"open_regime", c.open_regime},
                       {"candidate", c.candidate},
                       {"robustness", interval_json(c.robustness)},
                       {"candidate_inside", c.candidate_inside},
                       {"gap", c.gap}};
  report.tolerances = seesaw_tolerances(g);
  return {};
}

Outcome cmd_gen(const Args& a, const Globals& g, Report& report) {
  EnsembleSpec spec;
  spec.kind = ensemble_kind_from_string(a.kind);
  spec.dim_a = a.m;
  spec.dim_b = a.n;
  spec.k = a.gen_k;
  spec.p = a.p;
  spec.terms = a.terms;
  spec.seed = g.seed;
  const Generated gen = generate(spec);

  const std::map<std::string, std::string> meta{{"ensemble", to_string(spec.kind)},
                                                {"seed", std::to_string(spec.seed)}};
  const json doc = gen.is_pure() ? to_json(gen.pure(), meta)
                                 : to_json(gen.op(), OperatorKind::density, meta);
  const std::string text = dump(doc);
  save_file(a.gen_out, text);
  report.k = a.gen_k;
  report.result = json{{"type", "generated"},
                       {"file", a.gen_out},
                       {"kind", doc["kind"]},
                       {"ensemble", to_string(spec.kind)},
                       {"dims", {spec.dim_a, spec.dim_b}},
                       {"digest", sha256_hex(text)},
                       {"mixture_terms", gen.mixture.size()}};
  report.tolerances = json::object();
  return {};
}

Outcome cmd_invariance(const Args& a, const Globals& g, Report& report) {
  InvarianceConfig config;
  config.dim_a = a.m;
  config.dim_b = a.n;
  config.k = a.k;
  config.trials = a.trials;
  config.seed = g.seed;
  const InvarianceReport r = run_invariance_suite(config);
  json checks = json::array();
  json tolerances = json::object();
  for (const InvarianceCheck& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"max_deviation", c.max_deviation},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed()}});
    tolerances[c.name] = c.tolerance;
  }
  report.k = a.k;
  report.result = json{{"type", "invariance"},
                       {"dims", {config.dim_a, config.dim_b}},
                       {"trials", config.trials},
                       {"passed", r.passed()},
                       {"checks", std::move(checks)}};
  report.tolerances = std::move(tolerances);
  return {true, !r.passed()};
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::numerical:
    case ErrorCode::infeasible:
      return kExitNumerical;
    default:
      return kExitInput;
  }
}

// Clears the injected SVD failure however run() exits.
struct InjectionGuard {
  ~InjectionGuard() { testing::inject_svd_failure(false); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  Args a;
  CLI::App app{"Schmidt-number norms, bounds and entanglement criteria", "entnorm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", g.tol, "decision tolerance (command default when omitted)");
  app.add_option("--restarts", g.restarts, "see-saw restarts")->check(CLI::NonNegativeNumber);
  app.add_option("--max-iter", g.max_iter, "see-saw iterations per restart")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for every randomized step");
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_flag("--require-decision", g.require_decision, "exit 3 when the verdict is undecided");
  app.add_flag("--inject-svd-failure", g.inject_svd_failure)->group("");

  std::function<Outcome(const Args&, const Globals&, Report&)> handler;
  std::string command;
  auto sub = [&](const char* name, const char* help, auto fn) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&, name, fn] {
      command = name;
      handler = fn;
    });
    return s;
  };
  auto add_file = [&](CLI::App* s) { s->add_option("FILE", a.file, "operator file")->required(); };
  auto add_k = [&](CLI::App* s) { s->add_option("--k", a.k, "Schmidt-rank bound")->required(); };

  add_file(sub("schmidt", "Schmidt decomposition of a state vector", cmd_schmidt));
  {
    CLI::App* s = sub("norm", "evaluate or bound a norm", cmd_norm);
    s->add_option("--which", a.which, "norm to evaluate")
        ->required()
        ->check(CLI::IsMember({"sk", "gamma", "radius", "k2", "k2dual", "sk-dual-vec"}));
    add_k(s);
    add_file(s);
  }
  {
    CLI::App* s = sub("detect", "Schmidt-number detection and certification", cmd_detect);
    add_k(s);
    s->add_flag("--filter", a.filter, "apply the local filter first");
    s->add_flag("--weak", a.weak, "also report the weak realignment bound");
    add_file(s);
  }
  {
    CLI::App* s = sub("blockpos", "k-block positivity check", cmd_blockpos);
    add_k(s);
    add_file(s);
  }
  {
    CLI::App* s = sub("witness", "best dual-norm witness", cmd_witness);
    add_k(s);
    add_file(s);
  }
  {
    CLI::App* s = sub("oracle", "decomposition linear program", cmd_oracle);
    add_k(s);
    s->add_option("--budget", a.budget, "random generators added to the pool");
    add_file(s);
  }
  {
    CLI::App* s = sub("probe-conjecture", "compare 2 gamma_k - 1 with the robustness interval", cmd_probe);
    add_k(s);
    add_file(s);
  }
  {
    CLI::App* s = sub("gen", "write a random state or density file", cmd_gen);
    s->add_option("--kind", a.kind, "ensemble")->required();
    s->add_option("--m", a.m, "dimension of factor A")->required();
    s->add_option("--n", a.n, "dimension of factor B")->required();
    s->add_option("--k", a.gen_k, "Schmidt rank or number bound");
    s->add_option("--p", a.p, "isotropic weight");
    s->add_option("--terms", a.terms, "mixture terms");
    s->add_option("--out", a.gen_out, "operator file to write")->required();
  }
  {
    CLI::App* s = sub("invariance", "run the symmetry property suite", cmd_invariance);
    add_k(s);
    s->add_option("--trials", a.trials, "random trials per check");
    s->add_option("--m", a.m, "dimension of factor A (default 3)");
    s->add_option("--n", a.n, "dimension of factor B (default 3)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  InjectionGuard guard;
  if (g.inject_svd_failure) testing::inject_svd_failure(true);

  Report report;
  report.command = command;
  report.seed = g.seed;
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    outcome = handler(a, g, report);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  for (const std::string& w : report.warnings) err << "warning: " << w << "\n";
  const std::string text = render(report, g.format == "text" ? Format::text : Format::json);
  if (g.out.empty()) {
    out << text;
  } else {
    try {
      save_file(g.out, text);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    }
  }
  if (outcome.failed) return kExitNumerical;
  if (g.require_decision && !outcome.decided) {
    err << "verdict undecided\n";
    return kExitUndecided;
  }
  return kExitOk;
}

}  // namespace entnorm::cli
