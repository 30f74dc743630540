#pragma once

#include "qha/algebroid.hpp"
#include "qha/builders.hpp"
#include "qha/quasihopf.hpp"

#include <random>
#include <vector>

namespace qha::testing {

inline const FieldSpec Q = FieldSpec::rationals();
inline const FieldSpec F5 = FieldSpec::prime_field(5);
inline const FieldSpec F7 = FieldSpec::prime_field(7);

template <class S>
Matrix<S> random_matrix(Index r, Index c, const FieldSpec& f, std::mt19937& rng, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix<S> m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = from_int<S>(dist(rng), f);
  return m;
}

template <class S>
Matrix<S> random_invertible(Index n, const FieldSpec& f, std::mt19937& rng) {
  for (;;) {
    Matrix<S> m = random_matrix<S>(n, n, f, rng);
    if (rank<S>(m) == n) return m;
  }
}

template <class S>
Matrix<S> identity(Index n, const FieldSpec& f) {
  return Matrix<S>::Identity(n, n) * from_int<S>(1, f);
}

template <class S>
bool equal(const Matrix<S>& a, const Matrix<S>& b) {
  return same_shape_equal<S>(a, b);
}

template <class S>
bool equal(const Vector<S>& a, const Vector<S>& b) {
  return same_shape_equal<S>(a, b);
}

template <class S>
Vector<S> element(const QuasiHopfAlgebra<S>& H, std::initializer_list<std::pair<Index, long long>> terms) {
  Vector<S> v = Vector<S>::Constant(H.dim(), H.scalar(0));
  for (auto [i, c] : terms) v(i) += H.scalar(c);
  return v;
}

// Drinfeld gauge transform of H by a normalized invertible twist F in H (x) H.
template <class S>
AlgebraPtr<S> drinfeld_twist(const AlgebraPtr<S>& Hp, const Vector<S>& F, std::string name) {
  const auto& H = *Hp;
  const Index n = H.dim();
  const Vector<S> u2 = H.tensor_unit(2);
  // left multiplication by F on H (x) H, then solve F * G = 1
  Matrix<S> lf(n * n, n * n);
  for (Index j = 0; j < n * n; ++j) {
    Vector<S> e = Vector<S>::Constant(n * n, H.scalar(0));
    e(j) = H.scalar(1);
    lf.col(j) = H.tensor_multiply(F, e, 2);
  }
  auto G = solve<S>(lf, u2);
  if (!G) throw std::invalid_argument("twist is not invertible");
  QuasiHopfData<S> d = H.data();
  d.name = std::move(name);
  for (Index i = 0; i < n; ++i)
    d.comult.col(i) = H.tensor_multiply(H.tensor_multiply(F, H.comultiply(H.basis(i)), 2), *G, 2);
  const Vector<S> one_f = kron<S>(H.unit(), F), f_one = kron<S>(F, H.unit());
  const Vector<S> one_g = kron<S>(H.unit(), *G), g_one = kron<S>(*G, H.unit());
  auto m3 = [&](std::initializer_list<Vector<S>> xs) {
    Vector<S> acc = H.tensor_unit(3);
    for (const auto& x : xs) acc = H.tensor_multiply(acc, x, 3);
    return acc;
  };
  d.phi = m3({one_f, H.delta_on_leg(F, 2, 1), H.phi(), H.delta_on_leg(*G, 2, 0), g_one});
  d.phi_inv = m3({f_one, H.delta_on_leg(F, 2, 0), H.phi_inv(), H.delta_on_leg(*G, 2, 1), one_g});
  Vector<S> alpha = Vector<S>::Constant(n, H.scalar(0)), beta = alpha;
  H.for_each_term(*G, 2, [&](const S& c, const std::vector<Index>& t) {
    alpha += c * H.multiply({H.antipode(H.basis(t[0])), H.alpha(), H.basis(t[1])});
  });
  H.for_each_term(F, 2, [&](const S& c, const std::vector<Index>& t) {
    beta += c * H.multiply({H.basis(t[0]), H.beta(), H.antipode(H.basis(t[1]))});
  });
  d.alpha = alpha;
  d.beta = beta;
  return make_algebra(std::move(d));
}

// Sweedler's algebra twisted by F = 1(x)1 + x(x)(g - 1); genuinely non-trivial Phi.
template <class S>
AlgebraPtr<S> twisted_h4(const FieldSpec& f) {
  auto H = sweedler_h4<S>(f);
  Vector<S> F = H->tensor_unit(2);
  F(2 * 4 + 1) += H->scalar(1);
  F(2 * 4 + 0) -= H->scalar(1);
  return drinfeld_twist<S>(H, F, "H4^F");
}

// k^{S3}_omega with omega pulled back from Z2 along the sign map.
template <class S>
AlgebraPtr<S> twisted_dual_s3(const FieldSpec& f) {
  auto table = symmetric_group_s3_table();
  const std::vector<int> sign = {0, 1, 1, 0, 0, 1};
  std::vector<S> omega(216, from_int<S>(1, f));
  for (Index x = 0; x < 6; ++x)
    for (Index y = 0; y < 6; ++y)
      for (Index z = 0; z < 6; ++z)
        if (sign[x] && sign[y] && sign[z]) omega[(x * 6 + y) * 6 + z] = from_int<S>(-1, f);
  return twisted_dual_group_algebra<S>(table, omega, f, "k^S3_omega");
}

template <class S>
AlgebraPtr<S> twisted_dual_z2(const FieldSpec& f) {
  return twisted_dual_group_algebra<S>(cyclic_group_table(2), z2_cocycle<S>(f), f, "k^Z2_omega");
}

template <class Mod, class S = typename Mod::Scalar>
Mod direct_sum(const Mod& a, const Mod& b) {
  std::vector<Matrix<S>> act;
  const auto& H = a.algebra();
  for (Index i = 0; i < H.dim(); ++i) {
    Matrix<S> m = Matrix<S>::Constant(a.dim() + b.dim(), a.dim() + b.dim(), H.scalar(0));
    m.topLeftCorner(a.dim(), a.dim()) = a.action(i);
    m.bottomRightCorner(b.dim(), b.dim()) = b.action(i);
    act.push_back(m);
  }
  return Mod(a.parent(), std::move(act));
}

template <class Mod, class S = typename Mod::Scalar>
Mod conjugate(const Mod& V, const Matrix<S>& p) {
  Matrix<S> pinv = inverse<S>(p).value();
  std::vector<Matrix<S>> act;
  for (const auto& m : V.action()) act.push_back(p * m * pinv);
  return Mod(V.parent(), std::move(act));
}

template <class Mod, class S = typename Mod::Scalar>
Mod restrict_module(const Mod& V, const Subspace<S>& sub) {
  std::vector<Matrix<S>> act;
  for (const auto& m : V.action()) act.push_back(sub.coordinates(Matrix<S>(m * sub.basis())));
  return Mod(V.parent(), std::move(act));
}

template <class Mod, class S = typename Mod::Scalar>
Subspace<S> cyclic_span(const Mod& V, const Vector<S>& v) {
  Matrix<S> gens(V.dim(), V.algebra().dim());
  for (Index i = 0; i < V.algebra().dim(); ++i) gens.col(i) = V.action(i) * v;
  return Subspace<S>::span(gens, V.dim());
}

// One-dimensional modules with character values in {-1, 0, 1}.
template <class S>
std::vector<HModule<S>> small_characters(const AlgebraPtr<S>& H) {
  const Index n = H->dim();
  std::vector<HModule<S>> out;
  Index total = 1;
  for (Index i = 0; i < n; ++i) total *= 3;
  for (Index code = 0; code < total; ++code) {
    Vector<S> chi(n);
    Index c = code;
    for (Index i = 0; i < n; ++i) {
      chi(i) = H->scalar(c % 3 - 1);
      c /= 3;
    }
    auto value = [&](const Vector<S>& x) {
      S s = H->scalar(0);
      for (Index i = 0; i < n; ++i) s += chi(i) * x(i);
      return s;
    };
    if (!(value(H->unit()) == H->scalar(1))) continue;
    bool ok = true;
    for (Index i = 0; i < n && ok; ++i)
      for (Index j = 0; j < n && ok; ++j)
        ok = value(H->multiply(H->basis(i), H->basis(j))) == chi(i) * chi(j);
    if (!ok) continue;
    std::vector<Matrix<S>> act;
    for (Index i = 0; i < n; ++i) act.push_back(Matrix<S>::Constant(1, 1, chi(i)));
    out.emplace_back(H, std::move(act));
  }
  return out;
}

// Characters, small cyclic submodules of the regular module, and a few direct sums.
template <class S>
std::vector<HModule<S>> small_modules(const AlgebraPtr<S>& H, Index max_dim = 3, std::size_t limit = 6) {
  std::vector<HModule<S>> out;
  auto chars = small_characters(H);
  for (std::size_t i = 0; i < chars.size() && out.size() < 2; ++i) out.push_back(chars[i]);
  auto reg = regular_module(H);
  std::vector<Subspace<S>> seen;
  const Index n = H->dim();
  for (Index i = 0; i < n && out.size() + 1 < limit; ++i)
    for (Index j = i; j < n && out.size() + 1 < limit; ++j) {
      Vector<S> v = H->basis(i);
      if (j != i) v += H->basis(j);
      auto sub = cyclic_span(reg, v);
      if (sub.dim() < 2 || sub.dim() > max_dim) continue;
      bool dup = false;
      for (const auto& s : seen) dup = dup || s == sub;
      if (dup) continue;
      seen.push_back(sub);
      out.push_back(restrict_module(reg, sub));
    }
  if (n <= max_dim) out.push_back(reg);
  if (!chars.empty() && out.size() < limit) {
    for (std::size_t i = 0; i < out.size() && out.size() < limit; ++i)
      if (out[i].dim() + 1 <= max_dim && out[i].dim() >= 2) {
        out.push_back(direct_sum(out[i], chars.front()));
        break;
      }
    if (out.size() < limit && chars.size() >= 1) out.push_back(direct_sum(chars.front(), chars.back()));
  }
  if (out.size() > limit) out.erase(out.begin() + static_cast<std::ptrdiff_t>(limit), out.end());
  return out;
}

// A random intertwiner source -> target (zero if the space is trivial).
template <class S>
Matrix<S> random_intertwiner(const Subspace<S>& space, Index rows, Index cols, const FieldSpec& f,
                             std::mt19937& rng) {
  Vector<S> c = random_matrix<S>(space.dim(), 1, f, rng).col(0);
  Vector<S> flat = space.dim() ? Vector<S>(space.basis() * c) : Vector<S>::Constant(rows * cols, from_int<S>(0, f));
  return unflatten<S>(flat, rows, cols);
}

// Bimodules of dimension <= 3 over A = k[x]/(x^2), seen as modules over A (x) A^op.
template <class S>
std::vector<AlgebroidModule<S>> dual_number_bimodules(const AlgebroidPtr<S>& H) {
  const Index n = H->dim();
  std::vector<Matrix<S>> zero_act;
  for (Index i = 0; i < n; ++i) zero_act.push_back(Matrix<S>::Constant(1, 1, H->scalar(i == 0 ? 1 : 0)));
  AlgebroidModule<S> k0(H, std::move(zero_act));
  auto reg = regular_module(H);
  Matrix<S> aug = Matrix<S>::Zero(n, 3);
  for (Index j = 0; j < 3; ++j) aug(j + 1, j) = H->scalar(1);
  auto base = base_module(H);
  return {k0,
          base,
          restrict_module(reg, cyclic_span(reg, H->basis(2))),
          restrict_module(reg, cyclic_span(reg, H->basis(1))),
          restrict_module(reg, Subspace<S>::span(aug, n)),
          direct_sum(base, k0)};
}

}  // namespace qha::testing
