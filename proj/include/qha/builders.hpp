#pragma once

#include "qha/quasihopf.hpp"

#include <array>
#include <string>
#include <vector>

namespace qha {

using GroupTable = std::vector<std::vector<Index>>;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GroupInfo {
  Index order = 0;
  Index identity = 0;
  std::vector<Index> inverse;
};

inline GroupInfo validate_group(const GroupTable& table) {
  const Index n = static_cast<Index>(table.size());
  if (n == 0) throw GroupError("empty group table");
  for (const auto& row : table) {
    if (static_cast<Index>(row.size()) != n) throw GroupError("group table is not square");
    for (Index v : row)
      if (v < 0 || v >= n) throw GroupError("group table entry out of range");
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw GroupError("table is not associative");
  GroupInfo info{n, -1, std::vector<Index>(n, -1)};
  for (Index e = 0; e < n && info.identity < 0; ++e) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) info.identity = e;
  }
  if (info.identity < 0) throw GroupError("table has no identity");
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b)
      if (table[a][b] == info.identity && table[b][a] == info.identity) info.inverse[a] = b;
    if (info.inverse[a] < 0) throw GroupError("element without inverse");
  }
  return info;
}

inline GroupTable cyclic_group_table(Index n) {
  GroupTable t(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// S3 as permutations of {0,1,2}, listed in lexicographic order of images.
inline GroupTable symmetric_group_s3_table() {
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  GroupTable t(6, std::vector<Index>(6));
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      for (Index c = 0; c < 6; ++c)
        if (perms[c] == comp) t[a][b] = c;
    }
  return t;
}

template <class S>
QuasiHopfData<S> empty_data(const FieldSpec& field, Index n, std::string name) {
  const S zero = from_int<S>(0, field);
  QuasiHopfData<S> d;
  d.field = field;
  d.name = std::move(name);
  d.dim = n;
  d.mult = Matrix<S>::Constant(n, n * n, zero);
  d.unit = Vector<S>::Constant(n, zero);
  d.comult = Matrix<S>::Constant(n * n, n, zero);
  d.counit = Vector<S>::Constant(n, zero);
  d.antipode = Matrix<S>::Constant(n, n, zero);
  d.antipode_inv = Matrix<S>::Constant(n, n, zero);
  d.phi = Vector<S>::Constant(n * n * n, zero);
  d.phi_inv = Vector<S>::Constant(n * n * n, zero);
  d.alpha = Vector<S>::Constant(n, zero);
  d.beta = Vector<S>::Constant(n, zero);
  return d;
}

template <class S>
void set_trivial_associator(QuasiHopfData<S>& d) {
  Vector<S> u3 = kron<S>(kron<S>(d.unit, d.unit), d.unit);
  d.phi = u3;
  d.phi_inv = u3;
  d.alpha = d.unit;
  d.beta = d.unit;
}

template <class S>
AlgebraPtr<S> group_algebra(const GroupTable& table, const FieldSpec& field, std::string name = "kG") {
  const GroupInfo g = validate_group(table);
  const Index n = g.order;
  const S one = from_int<S>(1, field);
  auto d = empty_data<S>(field, n, std::move(name));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) d.mult(table[a][b], a * n + b) = one;
    d.comult(a * n + a, a) = one;
    d.counit(a) = one;
    d.antipode(g.inverse[a], a) = one;
    d.antipode_inv(g.inverse[a], a) = one;
  }
  d.unit(g.identity) = one;
  set_trivial_associator(d);
  return make_algebra(std::move(d));
}

// Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx.
template <class S>
AlgebraPtr<S> sweedler_h4(const FieldSpec& field) {
  const S one = from_int<S>(1, field);
  auto d = empty_data<S>(field, 4, "H4");
  auto idx = [](int gpow, int xpow) { return static_cast<Index>(gpow + 2 * xpow); };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 2; ++e) {
          if (b + e >= 2) continue;
          // g^a x^b g^c x^e = (-1)^{bc} g^{a+c} x^{b+e}
          S sign = (b * c) % 2 ? -one : one;
          d.mult(idx((a + c) % 2, b + e), idx(a, b) * 4 + idx(c, e)) = sign;
        }
  d.unit(0) = one;
  auto put = [&](Index col, Index i, Index j, const S& v) { d.comult(i * 4 + j, col) += v; };
  put(0, 0, 0, one);
  put(1, 1, 1, one);
  put(2, 2, 0, one);
  put(2, 1, 2, one);
  put(3, 3, 1, one);
  put(3, 0, 3, one);
  d.counit(0) = one;
  d.counit(1) = one;
  d.antipode(0, 0) = one;
  d.antipode(1, 1) = one;
  d.antipode(3, 2) = -one;
  d.antipode(2, 3) = one;
  d.antipode_inv(0, 0) = one;
  d.antipode_inv(1, 1) = one;
  d.antipode_inv(3, 2) = one;
  d.antipode_inv(2, 3) = -one;
  set_trivial_associator(d);
  return make_algebra(std::move(d));
}

// omega is indexed by (x*n + y)*n + z.
template <class S>
AlgebraPtr<S> twisted_dual_group_algebra(const GroupTable& table, const std::vector<S>& omega,
                                         const FieldSpec& field, std::string name = "k^G_omega") {
  const GroupInfo g = validate_group(table);
  const Index n = g.order;
  if (static_cast<Index>(omega.size()) != n * n * n)
    throw DimensionError("omega: expected |G|^3 values");
  for (const auto& w : omega)
    if (is_zero(w)) throw GroupError("omega takes the value zero");
  const S one = from_int<S>(1, field);
  auto d = empty_data<S>(field, n, std::move(name));
  for (Index x = 0; x < n; ++x) {
    d.mult(x, x * n + x) = one;
    d.unit(x) = one;
    for (Index y = 0; y < n; ++y) d.comult(x * n + y, table[x][y]) += one;
    d.antipode(g.inverse[x], x) = one;
    d.antipode_inv(g.inverse[x], x) = one;
    d.alpha(x) = one;
    d.beta(x) = one / omega[(x * n + g.inverse[x]) * n + x];
  }
  d.counit(g.identity) = one;
  for (Index i = 0; i < n * n * n; ++i) {
    d.phi(i) = omega[i];
    d.phi_inv(i) = one / omega[i];
  }
  return make_algebra(std::move(d));
}

// The normalized generator of H^3(Z2, k^x): omega(a,a,a) = -1, all other values 1.
template <class S>
std::vector<S> z2_cocycle(const FieldSpec& field) {
  std::vector<S> w(8, from_int<S>(1, field));
  w[7] = from_int<S>(-1, field);
  return w;
}

// A normalized-failing cochain: omega(a,a,e) = -1, all other values 1.
template <class S>
std::vector<S> z2_non_cocycle(const FieldSpec& field) {
  std::vector<S> w(8, from_int<S>(1, field));
  w[6] = from_int<S>(-1, field);
  return w;
}

}  // namespace qha
