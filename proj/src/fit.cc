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

#include "ehands/fit.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ehands {

PolySpec make_spec(const std::vector<double>& raw_coeffs) {
  if (raw_coeffs.empty()) throw std::invalid_argument("spec needs >= 1 coefficient");
  PolySpec s;
  s.degree = static_cast<int>(raw_coeffs.size()) - 1;
  s.raw_coeffs = raw_coeffs;
  double m = 0.0;
  for (double c : raw_coeffs) {
    if (!std::isfinite(c)) throw std::domain_error("coefficient is not finite");
    m = std::max(m, std::abs(c));
  }
  s.scale = std::max(1.0, m);
  for (double c : raw_coeffs) s.a.push_back(c / s.scale);
  s.signs = split_signs(s.a).second;
  s.attenuation = 1.0 / (s.degree + 1);
  return s;
}

nlohmann::json spec_to_json(const PolySpec& s) {
  return {{"degree", s.degree},   {"raw_coeffs", s.raw_coeffs},
          {"scale", s.scale},     {"a", s.a},
          {"signs", s.signs},     {"attenuation", s.attenuation}};
}

PolySpec spec_from_json(const nlohmann::json& j) {
  PolySpec s = make_spec(j.at("raw_coeffs").get<std::vector<double>>());
  if (j.contains("degree") && j.at("degree").get<int>() != s.degree)
    throw std::invalid_argument("degree does not match coefficient count");
  return s;
}

namespace {

struct TargetName {
  Target t;
  const char* name;
};

constexpr TargetName kTargets[] = {
    {Target::ReluHalfX, "relu_halfx"}, {Target::Arctan5x, "arctan5x"},
    {Target::X2Over3, "x2_over3"},     {Target::Exp2x, "exp2x"},
    {Target::Gauss9x2, "gauss9x2"},    {Target::Custom, "custom"},
};

}  // namespace

Target target_from_string(const std::string& name) {
  for (const auto& tn : kTargets)
    if (name == tn.name) return tn.t;
  throw std::invalid_argument("unknown target: " + name);
}

const char* to_string(Target t) {
  for (const auto& tn : kTargets)
    if (t == tn.t) return tn.name;
  return "?";
}

double target_value(Target t, double x, const std::vector<double>& custom) {
  switch (t) {
    case Target::ReluHalfX:
      return std::max(0.0, x / 2);
    case Target::Arctan5x:
      return std::atan(5 * x);
    case Target::X2Over3:
      return x * x / 3;
    case Target::Exp2x:
      return std::exp(2 * x);
    case Target::Gauss9x2:
      return std::exp(-9 * x * x);
    case Target::Custom:
      return horner(custom, x);
  }
  return 0.0;
}

FitReport fit_polynomial(Target t, int degree, int grid_n,
                         const std::vector<double>& custom) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (grid_n < degree + 1 || grid_n < 2)
    throw std::invalid_argument("grid needs at least degree + 1 points");
  if (t == Target::Custom && custom.empty())
    throw std::invalid_argument("custom target needs coefficients");
  Eigen::MatrixXd v(grid_n, degree + 1);
  Eigen::VectorXd y(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    double x = -1.0 + 2.0 * i / (grid_n - 1);
    double p = 1.0;
    for (int k = 0; k <= degree; ++k, p *= x) v(i, k) = p;
    y(i) = target_value(t, x, custom);
  }
  Eigen::VectorXd c = v.colPivHouseholderQr().solve(y);
  FitReport r;
  r.spec = make_spec(std::vector<double>(c.data(), c.data() + c.size()));
  r.grid_points = grid_n;
  r.max_abs_err = (v * c - y).cwiseAbs().maxCoeff();
  return r;
}

std::vector<double> cascade_weights(const std::vector<double>& a) {
  if (a.empty()) throw std::invalid_argument("need >= 1 coefficient");
  double total = 0.0;
  for (double v : a) {
    if (!(v >= 0.0)) throw std::domain_error("cascade coefficients must be >= 0");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::domain_error("cascade coefficients must sum to 1");
  std::vector<double> w;
  double prefix = a[0];
  for (std::size_t j = 0; j + 1 < a.size(); ++j) {
    double next = prefix + a[j + 1];
    w.push_back(next > 0.0 ? std::clamp(prefix / next, 0.0, 1.0) : 0.0);
    prefix = next;
  }
  return w;
}

std::vector<double> cascade_coefficients(const std::vector<double>& w) {
  std::vector<double> a(w.size() + 1, 0.0);
  a[0] = 1.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) a[i] *= w[j];
    a[j + 1] = 1.0 - w[j];
  }
  return a;
}

std::pair<std::vector<double>, std::vector<int>> split_signs(
    const std::vector<double>& c) {
  std::pair<std::vector<double>, std::vector<int>> out;
  for (double v : c) {
    out.first.push_back(std::abs(v));
    out.second.push_back(v < 0.0 ? -1 : 1);
  }
  return out;
}

double predict(const PolySpec& s, double ev) {
  if (!(std::abs(ev) <= 1.0)) throw std::domain_error("|ev| > 1");
  return (s.degree + 1) * s.scale * ev;
}

double horner(const std::vector<double>& coeffs, double x) {
  double r = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

double attenuated_value(const PolySpec& s, double x) {
  return horner(s.a, x) / (s.degree + 1);
}

}  // namespace ehands
