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

#include "entnorm/sknorm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entnorm/error.hpp"
#include "entnorm/random.hpp"

namespace entnorm {

namespace {

using Norm = PureState::Normalization;

void check_k(Index k, Index min_dim, const char* what) {
  if (k < 1 || k > min_dim) {
    fail(ErrorCode::parameter, std::string(what) + ": k=" + std::to_string(k) +
                                   " outside [1, " + std::to_string(min_dim) + "]");
  }
}

void require_hermitian(const BipartiteOperator& y, const char* what) {
  if (!y.hermitian() && !is_hermitian(y.mat())) {
    fail(ErrorCode::precondition, std::string(what) + ": operator is not Hermitian");
  }
}

PureState as_state(const ComplexVector& v, Index m, Index n) { return {v, m, n, Norm::any}; }

PureState truncated(const ComplexVector& v, Index m, Index n, Index k) {
  return schmidt_truncate(as_state(v, m, n), k);
}

double pairing(const BipartiteOperator& x, const PureState& v, const PureState& w) {
  return std::abs(v.amplitudes().dot(x.mat() * w.amplitudes()));
}

double expectation(const ComplexMatrix& y, const ComplexVector& v) {
  return v.dot(y * v).real();
}

// Truncated singular pairs are feasible points, often good ones.
std::optional<SeeSawResult> best_truncated_pair(const BipartiteOperator& x, Index k,
                                                const SvdResult& s) {
  std::optional<SeeSawResult> best;
  const Index m = x.dim_a();
  const Index n = x.dim_b();
  const Index count = std::min<Index>(4, s.sigma.size());
  for (Index i = 0; i < count; ++i) {
    if (s.sigma(i) <= 0.0) break;
    PureState v = truncated(s.left.col(i), m, n, k);
    PureState w = truncated(s.right.col(i), m, n, k);
    const double val = pairing(x, v, w);
    if (!best || val > best->value) {
      best = SeeSawResult{std::move(v), std::move(w), val, 0, true, 0, {}};
    }
  }
  return best;
}

NormInterval interval_of(double lower, std::string lower_method, double upper,
                         std::string upper_method) {
  NormInterval out{lower, upper, std::move(lower_method), std::move(upper_method), false};
  finalize(out);
  return out;
}

}  // namespace

void finalize(NormInterval& interval) {
  interval.exact = interval.width() <= kExactWidth * std::max(1.0, std::abs(interval.upper));
}

const char* to_string(BlockPositivity verdict) noexcept {
  switch (verdict) {
    case BlockPositivity::certified_positive: return "certified_positive";
    case BlockPositivity::certified_negative: return "certified_negative";
    case BlockPositivity::undecided: return "undecided";
  }
  return "undecided";
}

double sk_pure(const PureState& v, Index k) {
  const double s = s_k_norm(v, k);
  return s * s;
}

double sk_elementary(const PureState& v, const PureState& w, Index k) {
  return s_k_norm(v, k) * s_k_norm(w, k);
}

SeeSawResult seesaw_lower(const BipartiteOperator& x, Index k, const SeeSawOptions& opts) {
  check_k(k, x.min_dim(), "seesaw_lower");
  if (opts.restarts < 1) fail(ErrorCode::parameter, "seesaw_lower: restarts must be >= 1");
  const Index m = x.dim_a();
  const Index n = x.dim_b();
  const ComplexMatrix& mat = x.mat();
  const ComplexMatrix adj = mat.adjoint();
  const double scale = mat.cwiseAbs().maxCoeff();

  if (scale == 0.0) {
    ComplexVector e = ComplexVector::Zero(m * n);
    e(0) = 1.0;
    PureState basis(e, m, n);
    return {basis, basis, 0.0, 0, true, opts.seed, {}};
  }

  std::optional<SeeSawResult> best;
  std::vector<std::vector<double>> traces;
  for (Index restart = 0; restart < opts.restarts; ++restart) {
    Rng rng = make_rng(opts.seed, static_cast<std::uint64_t>(restart));
    PureState w = truncated(gaussian_vector(m * n, rng), m, n, k);
    PureState v = w;
    std::vector<double> trace;
    double prev = -1.0;
    bool converged = false;
    Index it = 0;
    for (it = 1; it <= opts.max_iter; ++it) {
      const ComplexVector y = mat * w.amplitudes();
      if (y.norm() <= 1e-14 * scale) {
        converged = true;
        break;
      }
      v = truncated(y, m, n, k);
      const ComplexVector z = adj * v.amplitudes();
      if (z.norm() <= 1e-14 * scale) {
        converged = true;
        break;
      }
      w = truncated(z, m, n, k);
      const double val = pairing(x, v, w);
      trace.push_back(val);
      if (prev >= 0.0 && val - prev <= opts.tol * std::max(val, 1e-300)) {
        converged = true;
        break;
      }
      prev = val;
    }
    const double val = pairing(x, v, w);
    if (!best || val > best->value) {
      best = SeeSawResult{v, w, val, std::min(it, opts.max_iter), converged, opts.seed, {}};
    }
    traces.push_back(std::move(trace));
  }
  best->traces = std::move(traces);
  return std::move(*best);
}

double sk_upper_bound(const BipartiteOperator& x, Index k) {
  check_k(k, x.min_dim(), "sk_upper_bound");
  const SvdResult s = svd(x.mat());
  const double op = s.sigma.size() ? s.sigma(0) : 0.0;
  if (k == x.min_dim() || op == 0.0) return op;
  double triangle = 0.0;
  for (Index i = 0; i < s.sigma.size(); ++i) {
    if (s.sigma(i) <= 0.0) break;
    triangle += s.sigma(i) * s_k_norm(as_state(s.left.col(i), x.dim_a(), x.dim_b()), k) *
                s_k_norm(as_state(s.right.col(i), x.dim_a(), x.dim_b()), k);
  }
  return std::min(op, triangle);
}

SkEstimate sk_estimate(const BipartiteOperator& x, Index k, const SeeSawOptions& opts) {
  check_k(k, x.min_dim(), "sk_bounds");
  const SvdResult s = svd(x.mat());
  const double op = s.sigma.size() ? s.sigma(0) : 0.0;
  if (op == 0.0) return {interval_of(0.0, "zero_operator", 0.0, "zero_operator"), std::nullopt};

  const double upper = sk_upper_bound(x, k);
  const std::string upper_method =
      (k == x.min_dim() || upper >= op) ? "operator_norm" : "svd_triangle";

  std::optional<SeeSawResult> best = best_truncated_pair(x, k, s);
  std::string lower_method = "truncated_singular_pair";
  const bool settled =
      best && upper - best->value <= kExactWidth * std::max(1.0, upper);
  if (!settled) {
    SeeSawResult found = seesaw_lower(x, k, opts);
    if (!best || found.value > best->value) {
      best = std::move(found);
      lower_method = "seesaw";
    }
  }
  const double lower = std::min(best->value, upper);
  return {interval_of(lower, lower_method, upper, upper_method), std::move(best)};
}

NormInterval sk_bounds(const BipartiteOperator& x, Index k, const SeeSawOptions& opts) {
  return sk_estimate(x, k, opts).interval;
}

double prod_radius_upper_bound(const BipartiteOperator& y, Index k) {
  check_k(k, y.min_dim(), "prod_radius_upper_bound");
  require_hermitian(y, "prod_radius_upper_bound");
  const EigResult e = eig_hermitian(y.mat());
  // |<v|Y|v>| <= max(<v|P|v>, <v|N|v>) for Y = P - N.
  double pos_top = 0.0, pos_sum = 0.0, neg_top = 0.0, neg_sum = 0.0;
  for (Index i = 0; i < e.values.size(); ++i) {
    const double lam = e.values(i);
    if (lam == 0.0) continue;
    const double s = sk_pure(as_state(e.vectors.col(i), y.dim_a(), y.dim_b()), k);
    if (lam > 0.0) {
      pos_top = std::max(pos_top, lam);
      pos_sum += lam * s;
    } else {
      neg_top = std::max(neg_top, -lam);
      neg_sum += -lam * s;
    }
  }
  return std::max(std::min(pos_top, pos_sum), std::min(neg_top, neg_sum));
}

NormInterval prod_radius_bounds(const BipartiteOperator& y, Index k, const SeeSawOptions& opts) {
  check_k(k, y.min_dim(), "prod_radius_bounds");
  require_hermitian(y, "prod_radius_bounds");
  const Index m = y.dim_a();
  const Index n = y.dim_b();
  const EigResult e = eig_hermitian(y.mat());
  const double norm = std::max(std::abs(e.values(0)), std::abs(e.values(e.values.size() - 1)));
  if (norm == 0.0) return interval_of(0.0, "zero_operator", 0.0, "zero_operator");

  const double upper = prod_radius_upper_bound(y, k);
  const std::string upper_method = upper >= norm ? "operator_norm" : "spectral_split";

  if (e.values(e.values.size() - 1) >= -1e-12 * norm) {
    // Positive semidefinite: r_k coincides with the S(k)-norm.
    BipartiteOperator psd(y.mat(), m, n, BipartiteOperator::Hermiticity::symmetrize);
    NormInterval out = sk_bounds(psd, k, opts);
    if (upper < out.upper) {
      out.upper = upper;
      out.upper_method = upper_method;
    }
    out.lower = std::min(out.lower, out.upper);
    finalize(out);
    return out;
  }

  double lower = 0.0;
  std::string lower_method = "eigvec_truncation";
  for (Index i = 0; i < e.values.size(); ++i) {
    if (i >= 3 && i < e.values.size() - 3) continue;
    const PureState t = truncated(e.vectors.col(i), m, n, k);
    lower = std::max(lower, std::abs(expectation(y.mat(), t.amplitudes())));
  }
  // sup <v|(+-Y)|v> = sup <v|(+-Y + norm I)|v> - norm on unit vectors; the
  // shifted operator is PSD, where the bilinear see-saw pair bounds the
  // quadratic form from below through either of its vectors.
  const ComplexMatrix id = ComplexMatrix::Identity(m * n, m * n);
  for (const double sign : {1.0, -1.0}) {
    if (upper - lower <= kExactWidth * std::max(1.0, upper)) break;
    BipartiteOperator shifted(sign * y.mat() + norm * id, m, n,
                              BipartiteOperator::Hermiticity::symmetrize);
    const SeeSawResult r = seesaw_lower(shifted, k, opts);
    for (const PureState* t : {&r.v, &r.w}) {
      const double val = std::abs(expectation(y.mat(), t->amplitudes()));
      if (val > lower) {
        lower = val;
        lower_method = "symmetric_seesaw";
      }
    }
  }
  return interval_of(std::min(lower, upper), lower_method, upper, upper_method);
}

BlockPositivityResult block_positivity_check(const BipartiteOperator& y, Index k,
                                             const SeeSawOptions& opts) {
  check_k(k, y.min_dim(), "block_positivity_check");
  require_hermitian(y, "block_positivity_check");
  const Index side = y.side();
  const EigResult e = eig_hermitian(y.mat());
  const double c = e.values(0);
  BipartiteOperator gap(c * ComplexMatrix::Identity(side, side) - y.mat(), y.dim_a(), y.dim_b(),
                        BipartiteOperator::Hermiticity::symmetrize);
  SkEstimate est = sk_estimate(gap, k, opts);
  const double tol = kBlockPosTol * std::max(1.0, std::abs(c));

  BlockPositivityResult out{BlockPositivity::undecided, c, est.interval, std::nullopt, 0.0};
  if (c >= est.interval.upper - tol) {
    out.verdict = BlockPositivity::certified_positive;
    return out;
  }
  // Candidates for a violating SR <= k vector. For PSD X,
  // max(<v|X|v>, <w|X|w>) >= |<v|X|w>| > c, so one of the see-saw pair
  // violates <u|Y|u> >= 0 whenever c < lower. Truncated eigenvectors of Y
  // cover the case c < 0 where X may vanish.
  std::vector<PureState> candidates;
  if (est.argmax) {
    candidates.push_back(est.argmax->v);
    candidates.push_back(est.argmax->w);
  }
  for (Index i = side - 1; i >= 0 && e.values(i) < 0.0; --i) {
    candidates.push_back(truncated(e.vectors.col(i), y.dim_a(), y.dim_b(), k));
  }
  for (const PureState& u : candidates) {
    const double val = expectation(y.mat(), u.amplitudes());
    if (val < -tol && val < out.violation) {
      out.verdict = BlockPositivity::certified_negative;
      out.violating = u;
      out.violation = val;
    }
  }
  return out;
}

NormInterval prod_radius_bisect(const BipartiteOperator& x, Index k, Index depth,
                                const SeeSawOptions& opts) {
  check_k(k, x.min_dim(), "prod_radius_bisect");
  require_hermitian(x, "prod_radius_bisect");
  if (depth < 0) fail(ErrorCode::parameter, "prod_radius_bisect: depth must be >= 0");
  const Index side = x.side();
  const double norm = operator_norm(x.mat());
  const ComplexMatrix id = ComplexMatrix::Identity(side, side);

  // positive: s I +- X both certified k-block positive (r_k <= s);
  // negative: one of them certified not k-block positive (r_k > s).
  auto verdict = [&](double s) {
    BlockPositivity out = BlockPositivity::certified_positive;
    for (const double sign : {1.0, -1.0}) {
      BipartiteOperator shifted(s * id + sign * x.mat(), x.dim_a(), x.dim_b(),
                                BipartiteOperator::Hermiticity::symmetrize);
      const BlockPositivity v = block_positivity_check(shifted, k, opts).verdict;
      if (v == BlockPositivity::certified_negative) return v;
      if (v == BlockPositivity::undecided) out = v;
    }
    return out;
  };

  double lo = 0.0;
  double hi = norm;
  Index step = 0;
  std::optional<double> split;
  for (; step < depth; ++step) {
    const double mid = 0.5 * (lo + hi);
    const BlockPositivity v = verdict(mid);
    if (v == BlockPositivity::certified_positive) {
      hi = mid;
    } else if (v == BlockPositivity::certified_negative) {
      lo = mid;
    } else {
      split = mid;
      ++step;
      break;
    }
  }
  if (split) {
    // Undecided band: search its two edges separately with the remaining depth.
    double neg_lo = lo, neg_hi = *split;
    double pos_lo = *split, pos_hi = hi;
    for (Index s = step; s < depth; ++s) {
      const double a = 0.5 * (neg_lo + neg_hi);
      (verdict(a) == BlockPositivity::certified_negative ? neg_lo : neg_hi) = a;
      const double b = 0.5 * (pos_lo + pos_hi);
      (verdict(b) == BlockPositivity::certified_positive ? pos_hi : pos_lo) = b;
    }
    lo = neg_lo;
    hi = pos_hi;
  }
  return interval_of(lo, "bisection_negative", hi, "bisection_positive");
}

}  // namespace entnorm
