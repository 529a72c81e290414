// Copyright 2026 The Smoothlab Authors
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

#include "smoothlab/gaussian.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace smoothlab {

QuadratureGrid gauss_hermite_grid(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite_grid: node count must be >= 1");
  QuadratureGrid grid;
  if (n == 1) {
    grid.nodes = {0.0};
    grid.weights = {1.0};
    return grid;
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(static_cast<double>(k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_hermite_grid: Jacobi eigen-solve did not converge");

  grid.nodes.resize(n);
  grid.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    grid.nodes[i] = es.eigenvalues()[i];  // ascending
    const double v = es.eigenvectors()(0, i);
    grid.weights[i] = v * v;
  }
  // Enforce the exact +- symmetry of the rule.
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double x = 0.5 * (grid.nodes[j] - grid.nodes[i]);
    grid.nodes[i] = -x;
    grid.nodes[j] = x;
    const double w = 0.5 * (grid.weights[i] + grid.weights[j]);
    grid.weights[i] = grid.weights[j] = w;
  }
  if (n % 2 == 1) grid.nodes[n / 2] = 0.0;
  double sum = 0.0;
  for (double w : grid.weights) sum += w;
  for (double& w : grid.weights) w /= sum;
  return grid;
}

double hermite_eval(int k, double x) {
  if (k < 0) throw std::invalid_argument("hermite_eval: negative degree");
  if (k == 0) return 1.0;
  double hm1 = 1.0;  // h_0
  double h = x;      // h_1
  for (int m = 1; m < k; ++m) {
    const double hp = (x * h - std::sqrt(static_cast<double>(m)) * hm1) /
                      std::sqrt(static_cast<double>(m + 1));
    hm1 = h;
    h = hp;
  }
  return h;
}

std::vector<double> hermite_eval_all(int max_degree, double x) {
  std::vector<double> h(static_cast<std::size_t>(max_degree) + 1);
  h[0] = 1.0;
  if (max_degree >= 1) h[1] = x;
  for (int m = 1; m < max_degree; ++m)
    h[m + 1] = (x * h[m] - std::sqrt(static_cast<double>(m)) * h[m - 1]) /
               std::sqrt(static_cast<double>(m + 1));
  return h;
}

std::vector<std::vector<double>> hermite_table(const QuadratureGrid& grid, int max_degree) {
  std::vector<std::vector<double>> table(static_cast<std::size_t>(max_degree) + 1,
                                         std::vector<double>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::vector<double> h = hermite_eval_all(max_degree, grid.nodes[i]);
    for (int k = 0; k <= max_degree; ++k) table[k][i] = h[k];
  }
  return table;
}

double HermiteExpansion::eval(double x) const {
  if (coeffs.empty()) return 0.0;
  double acc = coeffs[0];
  double hm1 = 1.0;
  double h = x;
  if (coeffs.size() > 1) acc += coeffs[1] * h;
  for (std::size_t m = 1; m + 1 < coeffs.size(); ++m) {
    const double hp = (x * h - std::sqrt(static_cast<double>(m)) * hm1) /
                      std::sqrt(static_cast<double>(m + 1));
    hm1 = h;
    h = hp;
    acc += coeffs[m + 1] * h;
  }
  return acc;
}

double HermiteExpansion::l2_norm() const {
  double s = 0.0;
  for (double c : coeffs) s += c * c;
  return std::sqrt(s);
}

HermiteExpansion hermite_coeffs(const std::function<double(double)>& f, int m,
                                const QuadratureGrid& grid) {
  if (m < 0) throw std::invalid_argument("hermite_coeffs: negative degree");
  HermiteExpansion e;
  e.coeffs.assign(static_cast<std::size_t>(m) + 1, 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double wf = grid.weights[i] * f(grid.nodes[i]);
    const std::vector<double> h = hermite_eval_all(m, grid.nodes[i]);
    for (int k = 0; k <= m; ++k) e.coeffs[k] += wf * h[k];
  }
  return e;
}

HermiteExpansion ou_apply(const HermiteExpansion& e, OUParameter rho) {
  if (!(rho.rho >= 0.0 && rho.rho <= 1.0))
    throw std::invalid_argument("ou_apply: rho must lie in [0,1]");
  HermiteExpansion out = e;
  double p = 1.0;
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
    out.coeffs[k] *= p;
    p *= rho.rho;
  }
  return out;
}

HermiteExpansion smooth_apply(const std::function<double(double)>& f, double sigma, int m,
                              const QuadratureGrid& grid) {
  if (sigma < 0.0) throw std::invalid_argument("smooth_apply: sigma must be >= 0");
  if (sigma == 0.0) return hermite_coeffs(f, m, grid);
  const double s = std::sqrt(1.0 + sigma * sigma);
  const HermiteExpansion g = hermite_coeffs([&](double x) { return f(s * x); }, m, grid);
  return ou_apply(g, OUParameter{1.0 / s});
}

double SmoothedThreshold::operator()(double x) const {
  if (sigma == 0.0) {
    if (x > t) return 1.0;
    if (x < t) return -1.0;
    return 0.0;
  }
  return std::erf((x - t) / (sigma * std::sqrt(2.0)));
}

double smoothed_threshold_eval(const SmoothedThreshold& st, double x) { return st(x); }

double lp_norm(const std::function<double(double)>& f, double r, const QuadratureGrid& grid) {
  if (r < 1.0) throw std::invalid_argument("lp_norm: order must be >= 1");
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    acc += grid.weights[i] * std::pow(std::fabs(f(grid.nodes[i])), r);
  return std::pow(acc, 1.0 / r);
}

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) * 0.39894228040143267793994605993438;  // 1/sqrt(2 pi)
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.70710678118654752440084436210485); }

}  // namespace smoothlab
