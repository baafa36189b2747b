#include "reach/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace reach {

namespace {

// Truncated power series for e^M, assuming ||M|| is small (<= 0.5).
Matrix exp_series(const Matrix& m) {
  const Eigen::Index n = m.rows();
  Matrix acc = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 60; ++k) {
    term = (term * m) / static_cast<double>(k);
    acc += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20 * std::max(1.0, acc.cwiseAbs().maxCoeff())) {
      break;
    }
  }
  return acc;
}

// Series for phi1 over a small step h: sum_k M^k h^{k+1}/(k+1)!.
Matrix phi1_series(const Matrix& m, double h) {
  const Eigen::Index n = m.rows();
  Matrix acc = Matrix::Zero(n, n);
  Matrix term = Matrix::Identity(n, n) * h;
  acc += term;
  for (int k = 1; k <= 60; ++k) {
    term = (term * m) * (h / static_cast<double>(k + 1));
    acc += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20 * std::max(1.0, acc.cwiseAbs().maxCoeff())) {
      break;
    }
  }
  return acc;
}

int scaling_steps(double norm) {
  int s = 0;
  while (norm > 0.25 && s < 64) {
    norm *= 0.5;
    ++s;
  }
  return s;
}

}  // namespace

Matrix mat_exp(const Matrix& a, double t) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("mat_exp: matrix must be square");
  }
  if (!a.allFinite() || !std::isfinite(t)) {
    throw std::invalid_argument("mat_exp: non-finite input");
  }
  const Matrix at = a * t;
  const int s = scaling_steps(at.cwiseAbs().rowwise().sum().maxCoeff());
  Matrix e = exp_series(at / std::ldexp(1.0, s));
  for (int i = 0; i < s; ++i) {
    e = e * e;
  }
  return e;
}

Matrix phi1(const Matrix& a, double t) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("phi1: matrix must be square");
  }
  const Eigen::Index n = a.rows();
  const double norm_a = n > 0 ? a.cwiseAbs().rowwise().sum().maxCoeff() : 0.0;
  if (norm_a > 0.0) {
    Eigen::FullPivLU<Matrix> lu(a);
    if (lu.isInvertible()) {
      const Matrix inv = lu.inverse();
      const double cond = norm_a * inv.cwiseAbs().rowwise().sum().maxCoeff();
      if (cond <= 1e12) {
        return inv * (mat_exp(a, t) - Matrix::Identity(n, n));
      }
    }
  }
  // Singular or near-singular: scaled series with doubling.
  // phi1(2h) = (I + e^{Ah}) phi1(h).
  const int s = scaling_steps(norm_a * std::abs(t));
  const double h = t / std::ldexp(1.0, s);
  Matrix p = phi1_series(a, h);
  Matrix e = exp_series(a * h);
  for (int i = 0; i < s; ++i) {
    p = p + e * p;
    e = e * e;
  }
  return p;
}

namespace {

constexpr double kLpEps = 1e-9;

}  // namespace

// Two-phase tableau simplex over x = u - v with u, v >= 0 and slack
// variables; Bland's rule for entering/leaving picks avoids cycling.
LpResult lp_max(const LinearProgram& lp) {
  const Eigen::Index n = lp.objective.size();
  const int m = static_cast<int>(lp.constraints.size());
  if (m == 0) {
    throw std::invalid_argument("lp_max: constraint set must be nonempty");
  }
  for (const auto& [normal, offset] : lp.constraints) {
    if (normal.size() != n) {
      throw std::invalid_argument("lp_max: constraint dimension mismatch");
    }
    (void)offset;
  }

  const int nv = static_cast<int>(2 * n);  // u, v split of free variables
  const int total = nv + m;                // + slack per row
  // tableau: m rows of [vars | rhs], plus objective row.
  Eigen::MatrixXd tab = Eigen::MatrixXd::Zero(m + 1, total + 1);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const Vector& g = lp.constraints[i].first;
    for (Eigen::Index j = 0; j < n; ++j) {
      tab(i, j) = g(j);
      tab(i, n + j) = -g(j);
    }
    tab(i, nv + i) = 1.0;
    tab(i, total) = lp.constraints[i].second;
    basis[i] = nv + i;
  }

  auto pivot = [&](int row, int col) {
    tab.row(row) /= tab(row, col);
    for (int r = 0; r <= m; ++r) {
      if (r != row && std::abs(tab(r, col)) > 0.0) {
        tab.row(r) -= tab(r, col) * tab.row(row);
      }
    }
    basis[row] = col;
  };

  // Runs simplex iterations on the current objective row; returns false
  // when the objective is unbounded.
  auto iterate = [&]() -> bool {
    for (;;) {
      int col = -1;
      for (int j = 0; j < total; ++j) {
        if (tab(m, j) < -kLpEps) {  // improves the (maximized) objective
          col = j;
          break;  // Bland: lowest index
        }
      }
      if (col < 0) {
        return true;
      }
      int row = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        if (tab(i, col) > kLpEps) {
          const double ratio = tab(i, total) / tab(i, col);
          if (ratio < best - kLpEps ||
              (ratio < best + kLpEps && (row < 0 || basis[i] < basis[row]))) {
            best = ratio;
            row = i;
          }
        }
      }
      if (row < 0) {
        return false;
      }
      pivot(row, col);
    }
  };

  // Phase 1: drive negative right-hand sides out with artificials.
  bool need_phase1 = false;
  for (int i = 0; i < m; ++i) {
    if (tab(i, total) < -kLpEps) {
      need_phase1 = true;
    }
  }
  if (need_phase1) {
    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(m + 1, total + m + 1);
    full.block(0, 0, m, total) = tab.block(0, 0, m, total);
    full.col(total + m).head(m) = tab.col(total).head(m);
    const int art0 = total;
    Eigen::MatrixXd saved_obj = tab.row(m);
    tab = full;
    int nart = 0;
    for (int i = 0; i < m; ++i) {
      if (tab(i, total + m) < 0.0) {
        tab.row(i) = -tab.row(i);
        tab(i, art0 + i) = 1.0;
        basis[i] = art0 + i;
        ++nart;
        // phase-1 objective: minimize sum of artificials = maximize -sum
        tab.row(m) += tab.row(i);
      }
      (void)nart;
    }
    // reduced costs for artificials start at zero
    for (int i = 0; i < m; ++i) {
      if (basis[i] >= art0) {
        tab(m, basis[i]) = 0.0;
      }
    }
    tab.row(m) = -tab.row(m);  // maximize -(sum of artificial rows)
    const int old_total = total;
    const int p1_total = total + m;
    // local iterate over the widened tableau
    auto iterate1 = [&]() {
      for (;;) {
        int col = -1;
        for (int j = 0; j < p1_total; ++j) {
          if (tab(m, j) < -kLpEps) {
            col = j;
            break;
          }
        }
        if (col < 0) {
          return;
        }
        int row = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
          if (tab(i, col) > kLpEps) {
            const double ratio = tab(i, p1_total) / tab(i, col);
            if (ratio < best - kLpEps ||
                (ratio < best + kLpEps && (row < 0 || basis[i] < basis[row]))) {
              best = ratio;
              row = i;
            }
          }
        }
        if (row < 0) {
          return;  // cannot happen: phase-1 objective is bounded below
        }
        tab.row(row) /= tab(row, col);
        for (int r = 0; r <= m; ++r) {
          if (r != row && std::abs(tab(r, col)) > 0.0) {
            tab.row(r) -= tab(r, col) * tab.row(row);
          }
        }
        basis[row] = col;
      }
    };
    iterate1();
    if (tab(m, p1_total) < -kLpEps) {
      return {LpStatus::Infeasible, 0.0, Vector()};
    }
    // Pivot any artificial still sitting in the basis out of it.
    for (int i = 0; i < m; ++i) {
      if (basis[i] >= art0) {
        int col = -1;
        for (int j = 0; j < old_total; ++j) {
          if (std::abs(tab(i, j)) > kLpEps) {
            col = j;
            break;
          }
        }
        if (col >= 0) {
          tab.row(i) /= tab(i, col);
          for (int r = 0; r <= m; ++r) {
            if (r != i && std::abs(tab(r, col)) > 0.0) {
              tab.row(r) -= tab(r, col) * tab.row(i);
            }
          }
          basis[i] = col;
        }
      }
    }
    // Rebuild the phase-2 tableau without artificial columns.
    Eigen::MatrixXd t2 = Eigen::MatrixXd::Zero(m + 1, old_total + 1);
    t2.block(0, 0, m, old_total) = tab.block(0, 0, m, old_total);
    t2.col(old_total).head(m) = tab.col(p1_total).head(m);
    t2.row(m) = saved_obj;
    tab = t2;
  }

  // Phase 2 objective row: maximize c.x -> row holds -c over (u, v)
  // reduced by the current basis.
  tab.row(m).setZero();
  for (Eigen::Index j = 0; j < n; ++j) {
    tab(m, j) = -lp.objective(j);
    tab(m, n + j) = lp.objective(j);
  }
  for (int i = 0; i < m; ++i) {
    if (basis[i] < nv && std::abs(tab(m, basis[i])) > 0.0) {
      tab.row(m) -= tab(m, basis[i]) * tab.row(i);
    }
  }

  if (!iterate()) {
    return {LpStatus::Unbounded, 0.0, Vector()};
  }

  Vector x = Vector::Zero(n);
  for (int i = 0; i < m; ++i) {
    if (basis[i] < n) {
      x(basis[i]) += tab(i, total);
    } else if (basis[i] < nv) {
      x(basis[i] - n) -= tab(i, total);
    }
  }
  return {LpStatus::Optimal, lp.objective.dot(x), x};
}

}  // namespace reach
