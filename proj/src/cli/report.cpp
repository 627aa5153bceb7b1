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

#include "entnorm/cli/report.hpp"

#include <sstream>

namespace entnorm::cli {

using nlohmann::json;

namespace {

json optional_json(const auto& value) {
  if (value) return json(*value);
  return nullptr;
}

void flatten(const json& node, const std::string& prefix, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, child] : node.items()) {
      flatten(child, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (node.is_array() && !node.empty() && node[0].is_structured()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << node.dump() << "\n";
  }
}

}  // namespace

json Report::to_json() const {
  return json{{"command", command},
              {"inputs", {{"file", optional_json(file)}, {"digest", optional_json(digest)}}},
              {"k", optional_json(k)},
              {"result", result},
              {"tolerances", tolerances},
              {"seed", seed},
              {"warnings", warnings},
              {"wall_time_ms", wall_time_ms}};
}

std::string render(const Report& report, Format format) {
  const json doc = report.to_json();
  if (format == Format::json) return doc.dump(2) + "\n";
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

json scalar_json(double value) { return json{{"type", "scalar"}, {"value", value}}; }

json interval_json(const NormInterval& interval) {
  return json{{"type", "interval"},
              {"lower", interval.lower},
              {"upper", interval.upper},
              {"lower_method", interval.lower_method},
              {"upper_method", interval.upper_method},
              {"exact", interval.exact}};
}

json decomposition_json(const Decomposition& decomposition) {
  return json{{"mass", decomposition.mass()},
              {"terms", decomposition.coefficients.size()},
              {"residual", decomposition.residual},
              {"coefficients", decomposition.coefficients}};
}

json vector_json(const ComplexVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

json matrix_json(const ComplexMatrix& x) {
  json out = json::array();
  for (Index i = 0; i < x.rows(); ++i) out.push_back(vector_json(x.row(i).transpose()));
  return out;
}

}  // namespace entnorm::cli
