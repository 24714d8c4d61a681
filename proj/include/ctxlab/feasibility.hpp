#pragma once

#include "ctxlab/rational.hpp"

#include <Eigen/Sparse>

#include <stdexcept>
#include <string>
#include <vector>

namespace ctxlab {

/// System of exact linear equalities A x = b over x >= 0. Rows carry labels
/// so infeasibility certificates can be reported in domain terms.
template <typename Scalar>
struct FeasibilityProblem {
  Eigen::SparseMatrix<Scalar> lhs;               // m x n, column major
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rhs;  // m
  std::vector<std::string> row_labels;           // empty or size m

  Eigen::Index num_vars() const { return lhs.cols(); }
  Eigen::Index num_rows() const { return lhs.rows(); }
};

template <typename Scalar>
FeasibilityProblem<Scalar> make_problem(Eigen::Index num_vars,
                                        const std::vector<Eigen::Triplet<Scalar>>& entries,
                                        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rhs,
                                        std::vector<std::string> row_labels = {}) {
  FeasibilityProblem<Scalar> problem;
  problem.lhs.resize(rhs.size(), num_vars);
  problem.lhs.setFromTriplets(entries.begin(), entries.end());
  problem.rhs = std::move(rhs);
  problem.row_labels = std::move(row_labels);
  return problem;
}

/// Exact verdict. A feasible problem carries a witness point; an infeasible
/// one carries a Farkas vector y with  y' A <= 0  (componentwise over the
/// columns) and  y' b > 0, which refutes any nonnegative solution.
template <typename Scalar>
struct FeasibilityResult {
  bool feasible = false;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> witness;      // size n when feasible
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> certificate;  // size m when infeasible
};

template <typename Scalar>
bool verify_witness(const FeasibilityProblem<Scalar>& problem,
                    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x) {
  if (x.size() != problem.num_vars()) return false;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x(j) < Scalar(0)) return false;
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> residual = -problem.rhs;
  for (Eigen::Index j = 0; j < problem.lhs.outerSize(); ++j) {
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(problem.lhs, j); it; ++it) {
      residual(it.row()) += it.value() * x(j);
    }
  }
  for (Eigen::Index i = 0; i < residual.size(); ++i) {
    if (residual(i) != Scalar(0)) return false;
  }
  return true;
}

template <typename Scalar>
bool verify_certificate(const FeasibilityProblem<Scalar>& problem,
                        const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& y) {
  if (y.size() != problem.num_rows()) return false;
  Scalar objective(0);
  for (Eigen::Index i = 0; i < y.size(); ++i) objective += y(i) * problem.rhs(i);
  if (!(objective > Scalar(0))) return false;
  for (Eigen::Index j = 0; j < problem.lhs.outerSize(); ++j) {
    Scalar dot(0);
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(problem.lhs, j); it; ++it) {
      dot += y(it.row()) * it.value();
    }
    if (dot > Scalar(0)) return false;
  }
  return true;
}

/// Phase-1 simplex over the exact scalar with Bland's anti-cycling rule.
/// Deterministic: identical problems always take identical pivots.
template <typename Scalar>
FeasibilityResult<Scalar> solve(const FeasibilityProblem<Scalar>& problem) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  const Eigen::Index m = problem.num_rows();
  const Eigen::Index n = problem.num_vars();

  // Rows with negative rhs are negated so the artificial basis is feasible.
  std::vector<bool> flipped(static_cast<size_t>(m), false);
  Vector b = problem.rhs;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (b(i) < Scalar(0)) {
      flipped[static_cast<size_t>(i)] = true;
      b(i) = -b(i);
    }
  }
  Eigen::SparseMatrix<Scalar> A = problem.lhs;
  for (Eigen::Index j = 0; j < A.outerSize(); ++j) {
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(A, j); it; ++it) {
      if (flipped[static_cast<size_t>(it.row())]) it.valueRef() = -it.value();
    }
  }

  // Basis starts as the artificial identity; objective = total artificial mass.
  std::vector<Eigen::Index> basis(static_cast<size_t>(m));
  std::vector<bool> is_basic(static_cast<size_t>(n), false);
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<size_t>(i)] = n + i;
  Matrix basis_inverse = Matrix::Identity(m, m);
  Vector basic_values = b;

  auto artificial_count_in_basis = [&]() {
    Eigen::Index count = 0;
    for (auto v : basis) {
      if (v >= n) ++count;
    }
    return count;
  };

  while (artificial_count_in_basis() > 0) {
    // y = c_B' B^{-1}; with phase-1 costs, this sums the artificial rows.
    Vector y = Vector::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (basis[static_cast<size_t>(i)] >= n) y += basis_inverse.row(i).transpose();
    }

    // Bland: first structural column with negative reduced cost enters.
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (is_basic[static_cast<size_t>(j)]) continue;
      Scalar dot(0);
      for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(A, j); it; ++it) {
        dot += y(it.row()) * it.value();
      }
      if (dot > Scalar(0)) {  // reduced cost 0 - y'A_j < 0
        entering = j;
        break;
      }
    }
    if (entering < 0) break;  // optimal

    Vector direction = Vector::Zero(m);
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(A, entering); it; ++it) {
      direction += basis_inverse.col(it.row()) * it.value();
    }

    // Ratio test; ties resolved by smallest basic variable index (Bland).
    Eigen::Index leaving = -1;
    Scalar best_ratio(0);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (!(direction(i) > Scalar(0))) continue;
      Scalar ratio = basic_values(i) / direction(i);
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio &&
           basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leaving)])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) {
      throw std::logic_error("phase-1 simplex: unbounded descent direction");
    }

    const Scalar pivot = direction(leaving);
    basis_inverse.row(leaving) /= pivot;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == leaving || is_zero(direction(i))) continue;
      basis_inverse.row(i) -= direction(i) * basis_inverse.row(leaving);
    }
    if (basis[static_cast<size_t>(leaving)] < n) {
      is_basic[static_cast<size_t>(basis[static_cast<size_t>(leaving)])] = false;
    }
    basis[static_cast<size_t>(leaving)] = entering;
    is_basic[static_cast<size_t>(entering)] = true;
    basic_values = basis_inverse * b;
  }

  Scalar objective(0);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[static_cast<size_t>(i)] >= n) objective += basic_values(i);
  }

  FeasibilityResult<Scalar> result;
  if (is_zero(objective)) {
    result.feasible = true;
    result.witness = Vector::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (basis[static_cast<size_t>(i)] < n) {
        result.witness(basis[static_cast<size_t>(i)]) = basic_values(i);
      }
    }
  } else {
    result.feasible = false;
    Vector y = Vector::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (basis[static_cast<size_t>(i)] >= n) y += basis_inverse.row(i).transpose();
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      if (flipped[static_cast<size_t>(i)]) y(i) = -y(i);
    }
    result.certificate = std::move(y);
  }
  return result;
}

}  // namespace ctxlab
