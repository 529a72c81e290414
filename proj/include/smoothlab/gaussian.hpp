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

#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace smoothlab {

/// Nodes and weights for integration against the standard Gaussian measure.
/// Weights are nonnegative and sum to 1; the grid is symmetric about 0.
/// All Gaussian-measure expectations in this project go through one of these.
struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  /// Quadrature estimate of E[f(G)], G ~ N(0,1).
  template <typename F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Gauss-Hermite rule for the probabilist's weight, built by Golub-Welsch on
/// the symmetric tridiagonal Jacobi matrix (off-diagonal sqrt(k)). Exact for
/// polynomials of degree <= 2n-1. Throws std::runtime_error if the
/// eigen-solve does not converge (caller lowers n).
QuadratureGrid gauss_hermite_grid(int n);

/// Normalized probabilist's Hermite polynomial h_k(x) = He_k(x)/sqrt(k!),
/// via the stable recurrence sqrt(m+1) h_{m+1} = x h_m - sqrt(m) h_{m-1}.
double hermite_eval(int k, double x);

/// h_0(x) .. h_{max_degree}(x) in one recurrence pass.
std::vector<double> hermite_eval_all(int max_degree, double x);

/// Appends h_0(x)..h_m(x) for each grid node into a reusable table,
/// table[k][i] = h_k(nodes[i]).
std::vector<std::vector<double>> hermite_table(const QuadratureGrid& grid, int max_degree);

/// A function represented by coefficients in the orthonormal Hermite basis:
/// f(x) = sum_k coeffs[k] h_k(x).
struct HermiteExpansion {
  std::vector<double> coeffs;

  int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double eval(double x) const;
  /// sqrt(sum coeffs^2); equals the Gaussian L2 norm by orthonormality.
  double l2_norm() const;
};

/// Quadrature estimate of the Hermite coefficients of f up to degree m:
/// coeffs[k] = sum_i w_i f(x_i) h_k(x_i). The grid must be exact for
/// degree >= 2m for the orthonormality relations to hold.
HermiteExpansion hermite_coeffs(const std::function<double(double)>& f, int m,
                                const QuadratureGrid& grid);

/// Ornstein-Uhlenbeck noise parameter. U_rho has the Hermite polynomials as
/// eigenfunctions with eigenvalues rho^k.
struct OUParameter {
  double rho = 1.0;
};

/// U_rho on an expansion: coeffs[k] <- rho^k coeffs[k]. Requires rho in [0,1].
HermiteExpansion ou_apply(const HermiteExpansion& e, OUParameter rho);

/// The correspondence parameter a = 1/sqrt(1+sigma^2) for which the
/// sigma-smoothing of f equals U_a applied to x -> f(x/a).
inline double smoothing_rho(double sigma) { return 1.0 / std::sqrt(1.0 + sigma * sigma); }

/// Degree-<=m Hermite expansion of the sigma-smoothed function
/// (T_sigma f)(x) = E_z[f(x + sigma z)], computed by expanding
/// g(x) = f(sqrt(1+sigma^2) x) and scaling coefficients by a^k.
/// sigma = 0 reduces to hermite_coeffs(f, m, grid).
HermiteExpansion smooth_apply(const std::function<double(double)>& f, double sigma, int m,
                              const QuadratureGrid& grid);

/// sign(x - t) smoothed by a Gaussian of scale sigma. Odd about t, range
/// within [-1,1], nondecreasing.
struct SmoothedThreshold {
  double t = 0.0;
  double sigma = 0.0;

  double operator()(double x) const;
};

/// Closed form 2*Phi((x-t)/sigma) - 1 for sigma > 0; raw sign for sigma = 0.
double smoothed_threshold_eval(const SmoothedThreshold& st, double x);

/// Gaussian L_r norm estimate (sum_i w_i |f(x_i)|^r)^(1/r), r >= 1.
double lp_norm(const std::function<double(double)>& f, double r, const QuadratureGrid& grid);

double normal_pdf(double x);
double normal_cdf(double x);

}  // namespace smoothlab
