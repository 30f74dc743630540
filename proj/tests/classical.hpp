#pragma once

#include "qha/linalg.hpp"
#include "qha/scalar.hpp"

#include <utility>
#include <vector>

namespace qha::testing {

// k[x]/(x^m) on the basis 1, x, ..., x^{m-1}
template <class S>
std::pair<Matrix<S>, Vector<S>> truncated_polynomials(Index m, const FieldSpec& f) {
  Matrix<S> mult = Matrix<S>::Constant(m, m * m, from_int<S>(0, f));
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      if (a + b < m) mult(a + b, a * m + b) = from_int<S>(1, f);
  Vector<S> unit = Vector<S>::Constant(m, from_int<S>(0, f));
  unit(0) = from_int<S>(1, f);
  return {mult, unit};
}

// Upper triangular 2x2 matrices on the basis e11, e12, e22.
template <class S>
std::pair<Matrix<S>, Vector<S>> upper_triangular(const FieldSpec& f) {
  Matrix<S> mult = Matrix<S>::Constant(3, 9, from_int<S>(0, f));
  auto set = [&](Index a, Index b, Index c) { mult(c, a * 3 + b) = from_int<S>(1, f); };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 2, 1);
  set(2, 2, 2);
  Vector<S> unit = Vector<S>::Constant(3, from_int<S>(0, f));
  unit(0) = unit(2) = from_int<S>(1, f);
  return {mult, unit};
}

// Textbook cochains phi : A^{n+1} -> k with b and Connes' cyclic subcomplex ker(1 - lambda).
struct ClassicalCyclic {
  Matrix<Rational> mult;
  Index d;

  static Index power(Index b, Index e) {
    Index r = 1;
    for (Index i = 0; i < e; ++i) r *= b;
    return r;
  }
  std::vector<Index> digits(Index idx, Index len) const {
    std::vector<Index> a(static_cast<std::size_t>(len));
    for (Index i = len - 1; i >= 0; --i) {
      a[static_cast<std::size_t>(i)] = idx % d;
      idx /= d;
    }
    return a;
  }
  Index index(const std::vector<Index>& a) const {
    Index idx = 0;
    for (Index x : a) idx = idx * d + x;
    return idx;
  }
  // (b phi)(a_0..a_{n+1}) = sum_{i<=n} (-1)^i phi(..a_i a_{i+1}..) + (-1)^{n+1} phi(a_{n+1} a_0, a_1, .., a_n)
  Matrix<Rational> b(Index n) const {
    const Index rows = power(d, n + 2), cols = power(d, n + 1);
    Matrix<Rational> m = Matrix<Rational>::Zero(rows, cols);
    for (Index r = 0; r < rows; ++r) {
      const auto a = digits(r, n + 2);
      for (Index i = 0; i <= n + 1; ++i) {
        const Rational sign = i % 2 ? Rational(-1) : Rational(1);
        for (Index c = 0; c < d; ++c) {
          std::vector<Index> out;
          Rational coef;
          if (i <= n) {
            coef = mult(c, a[static_cast<std::size_t>(i)] * d + a[static_cast<std::size_t>(i + 1)]);
            for (Index k = 0; k < i; ++k) out.push_back(a[static_cast<std::size_t>(k)]);
            out.push_back(c);
            for (Index k = i + 2; k <= n + 1; ++k) out.push_back(a[static_cast<std::size_t>(k)]);
          } else {
            coef = mult(c, a[static_cast<std::size_t>(n + 1)] * d + a[0]);
            out.push_back(c);
            for (Index k = 1; k <= n; ++k) out.push_back(a[static_cast<std::size_t>(k)]);
          }
          if (coef != 0) m(r, index(out)) += sign * coef;
        }
      }
    }
    return m;
  }
  // (lambda phi)(a_0..a_n) = (-1)^n phi(a_n, a_0, .., a_{n-1})
  Matrix<Rational> lambda(Index n) const {
    const Index dim = power(d, n + 1);
    Matrix<Rational> m = Matrix<Rational>::Zero(dim, dim);
    for (Index r = 0; r < dim; ++r) {
      auto a = digits(r, n + 1);
      std::vector<Index> rot{a.back()};
      rot.insert(rot.end(), a.begin(), a.end() - 1);
      m(r, index(rot)) = n % 2 ? Rational(-1) : Rational(1);
    }
    return m;
  }
  std::vector<Index> hochschild(Index up_to) const {
    std::vector<Index> out;
    for (Index n = 0; n <= up_to; ++n) {
      Index h = power(d, n + 1) - rank<Rational>(b(n));
      if (n > 0) h -= rank<Rational>(b(n - 1));
      out.push_back(h);
    }
    return out;
  }
  std::vector<Index> cyclic(Index up_to) const {
    std::vector<Index> out;
    auto image_rank = [&](Index n) {
      const auto kn = kernel<Rational>(Matrix<Rational>(Matrix<Rational>::Identity(power(d, n + 1), power(d, n + 1)) -
                                                        lambda(n)));
      return std::pair<Index, Index>{kn.dim(), kn.dim() ? rank<Rational>(Matrix<Rational>(b(n) * kn.basis())) : 0};
    };
    for (Index n = 0; n <= up_to; ++n) {
      auto [dim, r] = image_rank(n);
      Index h = dim - r;
      if (n > 0) h -= image_rank(n - 1).second;
      out.push_back(h);
    }
    return out;
  }
};

}  // namespace qha::testing
