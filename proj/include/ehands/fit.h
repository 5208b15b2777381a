// Copyright 2026 The EHands Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EHANDS_FIT_H_
#define EHANDS_FIT_H_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace ehands {

struct PolySpec {
  int degree = 0;
  std::vector<double> raw_coeffs;  // c_i, lowest power first
  double scale = 1.0;              // s = max(1, max |c_i|)
  std::vector<double> a;           // c_i / s
  std::vector<int> signs;          // +1 / -1, zero maps to +1
  double attenuation = 1.0;        // 1 / (d + 1)
};

// Builds the normalized spec from raw coefficients.
PolySpec make_spec(const std::vector<double>& raw_coeffs);

nlohmann::json spec_to_json(const PolySpec& s);
PolySpec spec_from_json(const nlohmann::json& j);

enum class Target { ReluHalfX, Arctan5x, X2Over3, Exp2x, Gauss9x2, Custom };

Target target_from_string(const std::string& name);
const char* to_string(Target t);

// custom holds polynomial coefficients for Target::Custom.
double target_value(Target t, double x, const std::vector<double>& custom = {});

struct FitReport {
  PolySpec spec;
  double max_abs_err = 0.0;
  int grid_points = 0;
};

// Least squares on a uniform grid over [-1, 1].
FitReport fit_polynomial(Target t, int degree, int grid_n = 201,
                         const std::vector<double>& custom = {});

// Weights w_0..w_{K-2} with acc <- w_j acc + (1 - w_j) x_{j+1}, acc = x_0.
std::vector<double> cascade_weights(const std::vector<double>& a);

// Expands the nested form back into K coefficients.
std::vector<double> cascade_coefficients(const std::vector<double>& w);

std::pair<std::vector<double>, std::vector<int>> split_signs(
    const std::vector<double>& c);

// (d + 1) * s * ev.
double predict(const PolySpec& s, double ev);

double horner(const std::vector<double>& coeffs, double x);

// (1 / (d + 1)) * sum a_i x^i: what the circuits should read out.
double attenuated_value(const PolySpec& s, double x);

}  // namespace ehands

#endif  // EHANDS_FIT_H_
