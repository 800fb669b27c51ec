#pragma once

#include <Eigen/Dense>

#include <vector>

#include "geobound/kernel/exact_scalar.hpp"

namespace geobound {

// Dense symmetric matrix with exact entries; stores the full square for simple indexing.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }
  const ExactScalar& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  // Writes both (i,j) and (j,i).
  void set(int i, int j, const ExactScalar& v) {
    e_[static_cast<size_t>(i) * n_ + j] = v;
    e_[static_cast<size_t>(j) * n_ + i] = v;
  }

  SymMatrix principal(const std::vector<int>& idx) const;
  Eigen::MatrixXd to_real() const;

  friend bool operator==(const SymMatrix& x, const SymMatrix& y) { return x.n_ == y.n_ && x.e_ == y.e_; }

 private:
  int n_ = 0;
  std::vector<ExactScalar> e_;
};

struct Signature {
  int pos = 0, neg = 0, zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

constexpr double kSignatureTol = 1e-9;

// Eigenvalue counts at tolerance tol; throws ContractViolation on asymmetric input.
Signature signature(const Eigen::MatrixXd& m, double tol = kSignatureTol);
Signature signature(const SymMatrix& m, double tol = kSignatureTol);

// Exact Sylvester criterion.
bool is_positive_definite(const SymMatrix& m);
std::vector<ExactScalar> leading_minors(const SymMatrix& m);
ExactScalar det(const SymMatrix& m);

struct SemidefiniteInfo {
  bool psd = false;
  int rank = 0;
};
// Exact PSD test by symmetric elimination with diagonal pivoting.
SemidefiniteInfo semidefinite_info(const SymMatrix& m);

// Basis-free kernel vector when the nullity is exactly one; empty otherwise.
std::vector<ExactScalar> kernel_vector(const SymMatrix& m);

}  // namespace geobound
