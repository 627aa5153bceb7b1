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

#include "entnorm/cli/operator_file.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/sha.h>

#include "entnorm/error.hpp"

namespace entnorm::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  fail(ErrorCode::parse, (path.empty() ? std::string("/") : path) + ": " + what);
}

Index read_dim(const json& doc, std::size_t i) {
  const std::string path = "/dims/" + std::to_string(i);
  const json& d = doc.at("dims").at(i);
  if (!d.is_number_integer() || d.get<long long>() < 1) parse_fail(path, "expected a positive integer");
  return static_cast<Index>(d.get<long long>());
}

Complex read_pair(const json& node, const std::string& path) {
  if (!node.is_array() || node.size() != 2) parse_fail(path, "expected a [re, im] pair");
  for (std::size_t i = 0; i < 2; ++i) {
    if (!node[i].is_number()) parse_fail(path + "/" + std::to_string(i), "expected a number");
  }
  const Complex z(node[0].get<double>(), node[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) parse_fail(path, "non-finite entry");
  return z;
}

json pair(Complex z) { return json::array({z.real(), z.imag()}); }

json meta_json(const std::map<std::string, std::string>& meta) {
  json out = json::object();
  for (const auto& [key, value] : meta) out[key] = value;
  return out;
}

void check_density(const ComplexMatrix& mat, std::vector<std::string>& warnings) {
  const double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kDensityTol) {
    std::ostringstream msg;
    msg << "density is not Hermitian (max deviation " << herm << ")";
    warnings.push_back(msg.str());
    return;
  }
  const double trace = mat.trace().real();
  if (std::abs(trace - 1.0) >= kDensityTol) {
    std::ostringstream msg;
    msg << std::setprecision(17) << "density trace is " << trace << ", not 1";
    warnings.push_back(msg.str());
  }
  const ComplexMatrix h = 0.5 * (mat + mat.adjoint());
  const double lambda_min = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(h).eigenvalues().minCoeff();
  if (lambda_min < -kDensityTol) {
    std::ostringstream msg;
    msg << "density is not positive semidefinite (min eigenvalue " << lambda_min << ")";
    warnings.push_back(msg.str());
  }
}

}  // namespace

const char* to_string(OperatorKind kind) noexcept {
  switch (kind) {
    case OperatorKind::state_vector: return "state_vector";
    case OperatorKind::operator_matrix: return "operator";
    case OperatorKind::density: return "density";
  }
  return "?";
}

const PureState& OperatorFile::pure() const {
  if (!is_pure()) fail(ErrorCode::parameter, "expected a state_vector file, got " + std::string(to_string(kind)));
  return std::get<PureState>(value);
}

const BipartiteOperator& OperatorFile::op() const {
  if (is_pure()) fail(ErrorCode::parameter, "expected an operator or density file, got state_vector");
  return std::get<BipartiteOperator>(value);
}

Index OperatorFile::dim_a() const { return is_pure() ? pure().dim_a() : op().dim_a(); }
Index OperatorFile::dim_b() const { return is_pure() ? pure().dim_b() : op().dim_b(); }

BipartiteOperator OperatorFile::as_operator() const {
  return is_pure() ? pure().projector() : op();
}

OperatorFile parse_operator(const json& doc) {
  if (!doc.is_object()) parse_fail("", "expected an object");
  for (const char* key : {"dims", "kind", "data"}) {
    if (!doc.contains(key)) parse_fail("", std::string("missing key \"") + key + "\"");
  }
  if (!doc["dims"].is_array() || doc["dims"].size() != 2) parse_fail("/dims", "expected [m, n]");
  const Index m = read_dim(doc, 0);
  const Index n = read_dim(doc, 1);
  if (m * n > kMaxSide) parse_fail("/dims", "total dimension exceeds " + std::to_string(kMaxSide));
  const Index side = m * n;

  if (!doc["kind"].is_string()) parse_fail("/kind", "expected a string");
  const std::string kind_name = doc["kind"].get<std::string>();
  OperatorKind kind;
  if (kind_name == "state_vector") kind = OperatorKind::state_vector;
  else if (kind_name == "operator") kind = OperatorKind::operator_matrix;
  else if (kind_name == "density") kind = OperatorKind::density;
  else parse_fail("/kind", "unknown kind \"" + kind_name + "\"");

  std::map<std::string, std::string> meta;
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) parse_fail("/meta", "expected an object of strings");
    for (const auto& [key, value] : doc["meta"].items()) {
      if (!value.is_string()) parse_fail("/meta/" + key, "expected a string");
      meta[key] = value.get<std::string>();
    }
  }

  const json& data = doc["data"];
  if (!data.is_array()) parse_fail("/data", "expected an array");
  std::vector<std::string> warnings;

  if (kind == OperatorKind::state_vector) {
    if (static_cast<Index>(data.size()) != side) {
      parse_fail("/data", "expected " + std::to_string(side) + " entries, got " + std::to_string(data.size()));
    }
    ComplexVector amps(side);
    for (Index i = 0; i < side; ++i) amps(i) = read_pair(data[i], "/data/" + std::to_string(i));
    const double norm = amps.norm();
    if (norm == 0.0) parse_fail("/data", "zero state vector");
    if (std::abs(norm - 1.0) > 1e-10) {
      std::ostringstream msg;
      msg << std::setprecision(17) << "state vector norm is " << norm << "; normalized on load";
      warnings.push_back(msg.str());
    }
    // Unit vectors are kept verbatim so a written file reloads bit for bit.
    const auto mode = warnings.empty() ? PureState::Normalization::require : PureState::Normalization::normalize;
    PureState v(std::move(amps), m, n, mode);
    return OperatorFile{kind, std::move(v), std::move(meta), std::move(warnings), {}};
  }

  if (static_cast<Index>(data.size()) != side) {
    parse_fail("/data", "expected " + std::to_string(side) + " rows, got " + std::to_string(data.size()));
  }
  ComplexMatrix mat(side, side);
  for (Index i = 0; i < side; ++i) {
    const std::string row_path = "/data/" + std::to_string(i);
    const json& row = data[i];
    if (!row.is_array()) parse_fail(row_path, "expected a row array");
    if (static_cast<Index>(row.size()) != side) {
      parse_fail(row_path, "expected " + std::to_string(side) + " entries, got " + std::to_string(row.size()));
    }
    for (Index j = 0; j < side; ++j) mat(i, j) = read_pair(row[j], row_path + "/" + std::to_string(j));
  }
  if (kind == OperatorKind::density) check_density(mat, warnings);
  BipartiteOperator op(std::move(mat), m, n);
  return OperatorFile{kind, std::move(op), std::move(meta), std::move(warnings), {}};
}

OperatorFile load_operator(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::parse, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::parse, path + ": " + e.what());
  }
  try {
    OperatorFile file = parse_operator(doc);
    file.digest = sha256_hex(bytes);
    return file;
  } catch (const Error& e) {
    fail(e.code(), path + ":" + e.what());
  }
}

json to_json(const PureState& v, const std::map<std::string, std::string>& meta) {
  json data = json::array();
  for (Index i = 0; i < v.amplitudes().size(); ++i) data.push_back(pair(v.amplitudes()(i)));
  return json{{"dims", {v.dim_a(), v.dim_b()}},
              {"kind", to_string(OperatorKind::state_vector)},
              {"data", std::move(data)},
              {"meta", meta_json(meta)}};
}

json to_json(const BipartiteOperator& x, OperatorKind kind,
             const std::map<std::string, std::string>& meta) {
  if (kind == OperatorKind::state_vector) fail(ErrorCode::parameter, "to_json: operator cannot be a state_vector");
  json data = json::array();
  for (Index i = 0; i < x.side(); ++i) {
    json row = json::array();
    for (Index j = 0; j < x.side(); ++j) row.push_back(pair(x.mat()(i, j)));
    data.push_back(std::move(row));
  }
  return json{{"dims", {x.dim_a(), x.dim_b()}},
              {"kind", to_string(kind)},
              {"data", std::move(data)},
              {"meta", meta_json(meta)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void save_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::parameter, path + ": cannot open for writing");
  out << contents;
  if (!out) fail(ErrorCode::parameter, path + ": write failed");
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), digest);
  std::ostringstream out;
  for (unsigned char c : digest) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(c);
  return out.str();
}

}  // namespace entnorm::cli
