#include "sphdim/linalg.hpp"

#include <stdexcept>

namespace sphdim {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].dim();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    Rational inv = 1 / m[r][c];
    m[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix nullspace(const Matrix& rows, std::size_t dim) {
  Matrix m = rows;
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(dim);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactVector solve(const Matrix& a, const ExactVector& rhs) {
  const std::size_t n = a.size();
  Matrix aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(a[i].coords());
    row.push_back(rhs[i]);
    aug.emplace_back(std::move(row));
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() != n)
    throw std::runtime_error("solve: singular system");
  ExactVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = aug[i][n];
  return x;
}

ExactVector project_onto_span(const Matrix& basis, const ExactVector& v) {
  if (basis.empty()) return ExactVector(v.dim());
  const std::size_t k = basis.size();
  Matrix gram;
  gram.reserve(k);
  ExactVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    ExactVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(basis[i], basis[j]);
    gram.push_back(std::move(row));
    rhs[i] = dot(basis[i], v);
  }
  ExactVector coeff = solve(gram, rhs);
  ExactVector p(v.dim());
  for (std::size_t i = 0; i < k; ++i) p += coeff[i] * basis[i];
  return p;
}

std::optional<std::vector<Rational>> coordinates_in_basis(
    const Matrix& basis, const ExactVector& v) {
  if (basis.empty()) {
    if (v.is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  const std::size_t k = basis.size();
  Matrix gram;
  ExactVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    ExactVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(basis[i], basis[j]);
    gram.push_back(std::move(row));
    rhs[i] = dot(basis[i], v);
  }
  ExactVector coeff = solve(gram, rhs);
  ExactVector p(v.dim());
  for (std::size_t i = 0; i < k; ++i) p += coeff[i] * basis[i];
  if (p != v) return std::nullopt;
  std::vector<Rational> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(coeff[i]);
  return out;
}

}  // namespace sphdim
