#include "geobound/kernel/matrix.hpp"

#include "geobound/errors.hpp"

namespace geobound {

SymMatrix SymMatrix::principal(const std::vector<int>& idx) const {
  SymMatrix s(static_cast<int>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i; j < idx.size(); ++j) s.set(int(i), int(j), (*this)(idx[i], idx[j]));
  return s;
}

Eigen::MatrixXd SymMatrix::to_real() const {
  Eigen::MatrixXd m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).to_double();
  return m;
}

Signature signature(const Eigen::MatrixXd& m, double tol) {
  require(tol > 0, "signature: tol must be positive");
  require(m.rows() == m.cols(), "signature: matrix not square");
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw ContractViolation("signature: matrix not symmetric");
  Signature s;
  if (m.rows() == 0) return s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  for (double ev : es.eigenvalues()) {
    if (ev > tol) ++s.pos;
    else if (ev < -tol) ++s.neg;
    else ++s.zero;
  }
  return s;
}

Signature signature(const SymMatrix& m, double tol) { return signature(m.to_real(), tol); }

namespace {

ExactScalar determinant(const SymMatrix& m) {
  int s = m.size();
  std::vector<std::vector<ExactScalar>> b(s, std::vector<ExactScalar>(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) b[i][j] = m(i, j);
  ExactScalar det(1);
  for (int c = 0; c < s; ++c) {
    int p = c;
    while (p < s && b[p][c].is_zero()) ++p;
    if (p == s) return ExactScalar(0);
    if (p != c) {
      std::swap(b[p], b[c]);
      det = -det;
    }
    det *= b[c][c];
    ExactScalar inv = b[c][c].inverse();
    for (int i = c + 1; i < s; ++i) {
      if (b[i][c].is_zero()) continue;
      ExactScalar f = b[i][c] * inv;
      for (int j = c; j < s; ++j) b[i][j] -= f * b[c][j];
    }
  }
  return det;
}

}  // namespace

std::vector<ExactScalar> leading_minors(const SymMatrix& m) {
  std::vector<ExactScalar> minors;
  std::vector<int> idx;
  for (int k = 0; k < m.size(); ++k) {
    idx.push_back(k);
    minors.push_back(determinant(m.principal(idx)));
  }
  return minors;
}

ExactScalar det(const SymMatrix& m) { return determinant(m); }

bool is_positive_definite(const SymMatrix& m) {
  int n = m.size();
  std::vector<std::vector<ExactScalar>> a(n, std::vector<ExactScalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  for (int k = 0; k < n; ++k) {
    if (a[k][k].sign() <= 0) return false;
    ExactScalar inv = a[k][k].inverse();
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      ExactScalar f = a[i][k] * inv;
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

SemidefiniteInfo semidefinite_info(const SymMatrix& m) {
  int n = m.size();
  std::vector<std::vector<ExactScalar>> a(n, std::vector<ExactScalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  std::vector<bool> done(n, false);
  SemidefiniteInfo info{true, 0};
  for (;;) {
    int p = -1;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      int s = a[i][i].sign();
      if (s < 0) return {false, info.rank};
      if (s > 0 && p < 0) p = i;
    }
    if (p < 0) {
      // All remaining diagonal entries vanish; PSD forces the whole remainder to vanish.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!done[i] && !done[j] && !a[i][j].is_zero()) return {false, info.rank};
      return info;
    }
    done[p] = true;
    ++info.rank;
    ExactScalar inv = a[p][p].inverse();
    for (int i = 0; i < n; ++i) {
      if (done[i] || a[i][p].is_zero()) continue;
      ExactScalar f = a[i][p] * inv;
      for (int j = 0; j < n; ++j)
        if (!done[j]) a[i][j] -= f * a[p][j];
    }
  }
}

std::vector<ExactScalar> kernel_vector(const SymMatrix& m) {
  int n = m.size();
  std::vector<std::vector<ExactScalar>> a(n, std::vector<ExactScalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
  // Reduced row echelon form.
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < n && row < n; ++c) {
    int p = row;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    ExactScalar inv = a[row][c].inverse();
    for (int j = 0; j < n; ++j) a[row][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || a[i][c].is_zero()) continue;
      ExactScalar f = a[i][c];
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (n - row != 1) return {};
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<ExactScalar> v(n, ExactScalar(0));
  v[free_col] = ExactScalar(1);
  for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col];
  return v;
}

}  // namespace geobound
