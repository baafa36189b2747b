#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace reach {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Matrix exponential e^{At} by scaling-and-squaring with a truncated
/// power series per squaring step. Elementwise accuracy ~1e-12.
Matrix mat_exp(const Matrix& a, double t);

/// The phi-1 operator: A^{-1}(e^{At} - I) for well-conditioned A,
/// otherwise the series sum_{k>=0} A^k t^{k+1}/(k+1)!, so the operator
/// is total (works for singular A, including A = 0 where it equals tI).
Matrix phi1(const Matrix& a, double t);

/// Maximize objective . x subject to normal_i . x <= offset_i, x free.
struct LinearProgram {
  Vector objective;
  std::vector<std::pair<Vector, double>> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  Vector point;  // an argmax when status == Optimal
};

/// Dense primal simplex with Bland's rule. Intended for the small
/// problems this project generates (dimension <= tens).
LpResult lp_max(const LinearProgram& lp);

}  // namespace reach
