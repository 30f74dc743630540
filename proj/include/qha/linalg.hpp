#pragma once

#include "qha/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qha {

using Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class S>
struct RowEchelon {
  Matrix<S> reduced;  // rank x cols, reduced row echelon form
  std::vector<Index> pivots;
};

// Gauss-Jordan elimination; pivots chosen at the lowest available column.
template <class S>
RowEchelon<S> row_echelon(Matrix<S> m) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index found = -1;
    for (Index i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) {
        found = i;
        break;
      }
    if (found < 0) continue;
    if (found != r) m.row(found).swap(m.row(r));
    const S inv = S(1) / m(r, c);
    for (Index j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const S factor = m(i, c);
      for (Index j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.topRows(r), std::move(pivots)};
}

template <class S>
Index rank(const Matrix<S>& m) {
  return static_cast<Index>(row_echelon<S>(m).pivots.size());
}

template <class S>
class Subspace {
 public:
  explicit Subspace(Index ambient = 0) : ambient_(ambient), basis_(ambient, 0) {}

  // Canonical span of the given column generators.
  static Subspace span(const Matrix<S>& generators, Index ambient) {
    if (generators.rows() != ambient && generators.cols() > 0)
      throw DimensionError("generator length does not match ambient dimension");
    Subspace out(ambient);
    if (generators.cols() == 0) return out;
    auto ech = row_echelon<S>(generators.transpose());
    out.basis_ = ech.reduced.transpose();
    out.pivots_ = std::move(ech.pivots);
    return out;
  }

  static Subspace full(Index ambient) {
    return span(Matrix<S>::Identity(ambient, ambient), ambient);
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Matrix<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  // Coordinates of a vector assumed to lie in the subspace.
  Vector<S> coordinates(const Vector<S>& v) const {
    Vector<S> c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[i]);
    return c;
  }

  Matrix<S> coordinates(const Matrix<S>& columns) const {
    Matrix<S> c(dim(), columns.cols());
    for (Index i = 0; i < dim(); ++i) c.row(i) = columns.row(pivots_[i]);
    return c;
  }

  bool contains(const Vector<S>& v) const {
    if (v.size() != ambient_) return false;
    Vector<S> diff = v - basis_ * coordinates(v);
    for (Index i = 0; i < diff.size(); ++i)
      if (!is_zero(diff(i))) return false;
    return true;
  }

  bool contains_columns(const Matrix<S>& m) const {
    for (Index j = 0; j < m.cols(); ++j)
      if (!contains(m.col(j))) return false;
    return true;
  }

  std::optional<Vector<S>> try_coordinates(const Vector<S>& v) const {
    if (!contains(v)) return std::nullopt;
    return coordinates(v);
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && pivots_ == o.pivots_ && basis_ == o.basis_;
  }

 private:
  Index ambient_;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

template <class S>
Subspace<S> kernel(const Matrix<S>& m) {
  const Index cols = m.cols();
  auto ech = row_echelon<S>(m);
  std::vector<bool> is_pivot(cols, false);
  for (Index p : ech.pivots) is_pivot[p] = true;
  Matrix<S> gens = Matrix<S>::Zero(cols, cols - static_cast<Index>(ech.pivots.size()));
  Index k = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    gens(f, k) = S(1);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) gens(ech.pivots[i], k) = -ech.reduced(i, f);
    ++k;
  }
  return Subspace<S>::span(gens, cols);
}

template <class S>
std::optional<Vector<S>> solve(const Matrix<S>& m, const Vector<S>& rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("solve: rhs length does not match rows");
  Matrix<S> aug(m.rows(), m.cols() + 1);
  aug << m, rhs;
  auto ech = row_echelon<S>(aug);
  Vector<S> x = Vector<S>::Zero(m.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == m.cols()) return std::nullopt;
    x(ech.pivots[i]) = ech.reduced(i, m.cols());
  }
  return x;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const Index n = m.rows();
  Matrix<S> aug(n, 2 * n);
  aug << m, Matrix<S>::Identity(n, n);
  auto ech = row_echelon<S>(aug);
  if (static_cast<Index>(ech.pivots.size()) < n || (n > 0 && ech.pivots[n - 1] != n - 1))
    return std::nullopt;
  return Matrix<S>(ech.reduced.rightCols(n));
}

template <class S>
struct QuotientSection {
  Matrix<S> projector;  // quotient_dim x ambient
  Matrix<S> lift;       // ambient x quotient_dim
};

template <class S>
QuotientSection<S> quotient_section(Index ambient, const Subspace<S>& relations) {
  if (relations.ambient_dim() != ambient)
    throw DimensionError("quotient_section: relation space has wrong ambient dimension");
  const auto& piv = relations.pivots();
  std::vector<bool> is_pivot(ambient, false);
  for (Index p : piv) is_pivot[p] = true;
  std::vector<Index> free;
  for (Index c = 0; c < ambient; ++c)
    if (!is_pivot[c]) free.push_back(c);
  const Index q = static_cast<Index>(free.size());
  QuotientSection<S> out{Matrix<S>::Zero(q, ambient), Matrix<S>::Zero(ambient, q)};
  for (Index k = 0; k < q; ++k) out.lift(free[k], k) = S(1);
  // v -> v - sum_i v[p_i] r_i, read off at the non-pivot columns
  const Matrix<S>& basis = relations.basis();
  for (Index c = 0; c < ambient; ++c) {
    for (Index k = 0; k < q; ++k) {
      S value = c == free[k] ? S(1) : S(0);
      if (is_pivot[c]) {
        Index i = static_cast<Index>(std::find(piv.begin(), piv.end(), c) - piv.begin());
        value -= basis(free[k], i);
      }
      out.projector(k, c) = value;
    }
  }
  return out;
}

inline Index tensor_index(Index i, Index j, Index dim_v, Index dim_w) {
  if (i < 0 || i >= dim_v || j < 0 || j >= dim_w)
    throw std::out_of_range("tensor_index: index out of range");
  return i * dim_w + j;
}

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out = Matrix<S>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  return out;
}

template <class S>
Vector<S> kron(const Vector<S>& a, const Vector<S>& b) {
  Vector<S> out = Vector<S>::Zero(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    if (is_zero(a(i))) continue;
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

template <class S>
Vector<S> flatten(const Matrix<S>& x) {
  Vector<S> v(x.size());
  for (Index r = 0; r < x.rows(); ++r)
    for (Index c = 0; c < x.cols(); ++c) v(r * x.cols() + c) = x(r, c);
  return v;
}

template <class S>
Matrix<S> unflatten(const Vector<S>& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw DimensionError("unflatten: length mismatch");
  Matrix<S> x(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) x(r, c) = v(r * cols + c);
  return x;
}

// Solutions X (rows x cols) of X * A_t = B_t * X, flattened row-major.
template <class S>
Subspace<S> intertwiner_space(const std::vector<std::pair<Matrix<S>, Matrix<S>>>& constraints,
                              Index rows, Index cols) {
  const Index n = rows * cols;
  for (const auto& [a, b] : constraints)
    if (a.rows() != cols || a.cols() != cols || b.rows() != rows || b.cols() != rows)
      throw DimensionError("intertwiner_space: constraint shape mismatch");
  if (constraints.empty()) return Subspace<S>::full(n);
  Matrix<S> system = Matrix<S>::Zero(static_cast<Index>(constraints.size()) * n, n);
  Index base = 0;
  for (const auto& [a, b] : constraints) {
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) {
        const Index eq = base + r * cols + c;
        for (Index k = 0; k < cols; ++k)
          if (!is_zero(a(k, c))) system(eq, r * cols + k) += a(k, c);
        for (Index k = 0; k < rows; ++k)
          if (!is_zero(b(r, k))) system(eq, k * cols + c) -= b(r, k);
      }
    base += n;
  }
  return kernel<S>(system);
}

// F * (A kron B) for F with row-major (a, b) column indexing.
template <class S>
Matrix<S> compose_kron(const Matrix<S>& f, const Matrix<S>& a, const Matrix<S>& b) {
  if (f.cols() != a.rows() * b.rows()) throw DimensionError("compose_kron: shape mismatch");
  Matrix<S> out(f.rows(), a.cols() * b.cols());
  for (Index l = 0; l < f.rows(); ++l) {
    Matrix<S> g = unflatten<S>(f.row(l).transpose(), a.rows(), b.rows());
    Matrix<S> h = a.transpose() * g * b;
    out.row(l) = flatten<S>(h).transpose();
  }
  return out;
}

template <class S>
bool is_zero_matrix(const Matrix<S>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

// First (column, row) where two equally shaped matrices differ.
template <class S>
std::optional<std::pair<Index, Index>> first_difference(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("first_difference: shape mismatch");
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return std::make_pair(j, i);
  return std::nullopt;
}

}  // namespace qha
