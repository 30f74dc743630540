#pragma once

#include "qha/builders.hpp"
#include "qha/center.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace qha {

class TruncationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnstableCoefficient : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CocyclicIdentityFailure : public std::runtime_error {
 public:
  CocyclicIdentityFailure(std::string relation, Index degree)
      : std::runtime_error("cocyclic identity " + relation + " fails in degree " + std::to_string(degree)),
        relation_(std::move(relation)),
        degree_(degree) {}
  const std::string& relation() const { return relation_; }
  Index degree() const { return degree_; }

 private:
  std::string relation_;
  Index degree_;
};

// mult : A (x) A -> A and unit : 1 -> A, both in the coordinates of the module tensor and unit object.
template <class Mod>
struct ModuleAlgebra {
  using S = ScalarOf<Mod>;
  Mod carrier;
  Matrix<S> mult;
  Matrix<S> unit;
};

template <class Mod>
CheckReport check_algebra_object(const ModuleAlgebra<Mod>& A) {
  using S = ScalarOf<Mod>;
  const Mod& X = A.carrier;
  const Mod U = unit_object(X);
  const Mod xx = tensor(X, X);
  CheckReport report;
  if (A.mult.rows() != X.dim() || A.mult.cols() != xx.dim() || A.unit.rows() != X.dim() ||
      A.unit.cols() != U.dim())
    throw DimensionError("module algebra: multiplication or unit has the wrong shape");
  auto record = [&](const std::string& id, const Matrix<S>& a, const Matrix<S>& b) {
    detail::compare_once<S>(report, id, a, b);
  };
  if (is_intertwiner(xx, X, A.mult))
    report.pass("mult_morphism");
  else
    report.fail("mult_morphism", {});
  if (is_intertwiner(U, X, A.unit))
    report.pass("unit_morphism");
  else
    report.fail("unit_morphism", {});
  record("left_unit", Matrix<S>(A.mult * tensor_maps(U, X, X, X, A.unit, X.identity()) * left_unitor_inverse(X)),
         X.identity());
  record("right_unit", Matrix<S>(A.mult * tensor_maps(X, U, X, X, X.identity(), A.unit) * right_unitor_inverse(X)),
         X.identity());
  const Matrix<S> lhs = A.mult * tensor_maps(xx, X, X, X, A.mult, X.identity());
  const Matrix<S> rhs = A.mult * tensor_maps(X, xx, X, X, X.identity(), A.mult) * associator(X, X, X);
  record("associativity", lhs, rhs);
  return report;
}

// The unit object with multiplication given by its unitor.
template <class Mod>
ModuleAlgebra<Mod> unit_algebra(const Mod& like) {
  const Mod U = unit_object(like);
  return {U, left_unitor(U), U.identity()};
}

// An ordinary algebra with every basis element of H acting by its counit.
template <class S>
ModuleAlgebra<HModule<S>> trivial_action_algebra(const AlgebraPtr<S>& H, Matrix<S> mult, const Vector<S>& unit) {
  const Index d = unit.size();
  std::vector<Matrix<S>> act;
  for (Index i = 0; i < H->dim(); ++i) act.push_back(H->counit(H->basis(i)) * eye<S>(d, H->field()));
  Matrix<S> u(d, 1);
  u.col(0) = unit;
  return {HModule<S>(H, std::move(act)), std::move(mult), std::move(u)};
}

// Functions on a finite group G with (g . phi)(x) = phi(x g), over kG; basis of point indicators.
template <class S>
ModuleAlgebra<HModule<S>> function_algebra(const AlgebraPtr<S>& H, const GroupTable& table) {
  const Index n = static_cast<Index>(table.size());
  const FieldSpec& f = H->field();
  const S one = from_int<S>(1, f), zero = from_int<S>(0, f);
  std::vector<Matrix<S>> act;
  for (Index g = 0; g < n; ++g) {
    Matrix<S> m = Matrix<S>::Constant(n, n, zero);
    // delta_x -> delta_{x g^{-1}}
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (table[static_cast<std::size_t>(y)][static_cast<std::size_t>(g)] == x) m(y, x) = one;
    act.push_back(m);
  }
  Matrix<S> mult = Matrix<S>::Constant(n, n * n, zero);
  for (Index a = 0; a < n; ++a) mult(a, a * n + a) = one;
  Matrix<S> u = Matrix<S>::Constant(n, 1, one);
  return {HModule<S>(H, std::move(act)), std::move(mult), std::move(u)};
}

// Left-nested power (...(A (x) A) (x) ...) (x) A with the rebracketing to A (x) P_{n-1}.
template <class Mod>
struct BracketedPower {
  using S = ScalarOf<Mod>;
  Mod module;
  Mod split;              // A (x) P_{n-1}, or A (x) 1 for n = 1
  Matrix<S> to_split;     // module -> split
  Matrix<S> from_split;   // split -> module
};

template <class Mod>
std::vector<BracketedPower<Mod>> tensor_powers_bracketed(const Mod& A, Index n) {
  using S = ScalarOf<Mod>;
  if (n < 1) throw std::invalid_argument("tensor_power_bracketed: n >= 1 required; use unit_object for n = 0");
  std::vector<BracketedPower<Mod>> out;
  {
    const Mod split = tensor(A, unit_object(A));
    out.push_back({A, split, right_unitor_inverse(A), right_unitor(A)});
  }
  for (Index k = 2; k <= n; ++k) {
    const auto& prev = out.back();
    const Mod module = tensor(prev.module, A);
    const Mod& pk = k == 2 ? A : out[static_cast<std::size_t>(k - 3)].module;
    Matrix<S> to;
    Mod split = tensor(A, prev.module);
    if (k == 2) {
      to = module.identity();
    } else {
      to = associator(A, pk, A) * tensor_maps(prev.module, A, prev.split, A, prev.to_split, A.identity());
    }
    const auto inv = inverse<S>(to);
    if (!inv) throw IllDefined("tensor_power_bracketed: rebracketing is not invertible", {k});
    out.push_back({module, std::move(split), std::move(to), *inv});
  }
  return out;
}

template <class Mod>
BracketedPower<Mod> tensor_power_bracketed(const Mod& A, Index n) {
  return tensor_powers_bracketed(A, n).back();
}

template <class S>
struct CocyclicModule {
  Index n_max = 0;
  std::vector<Subspace<S>> spaces;                  // C^0 .. C^{n_max}
  std::vector<std::vector<Matrix<S>>> cofaces;      // cofaces[n][i] : C^n -> C^{n+1}, 0 <= i <= n+1
  std::vector<std::vector<Matrix<S>>> codegeneracies;  // codegeneracies[n][j] : C^{n+1} -> C^n, 0 <= j <= n
  std::vector<Matrix<S>> cyclic;                    // cyclic[n] : C^n -> C^n
  FieldSpec field;
  CheckReport identities;

  Index dim(Index n) const { return spaces[static_cast<std::size_t>(n)].dim(); }
  const Matrix<S>& delta(Index n, Index i) const { return cofaces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]; }
  const Matrix<S>& sigma(Index n, Index j) const {
    return codegeneracies[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
  }
  const Matrix<S>& t(Index n) const { return cyclic[static_cast<std::size_t>(n)]; }
};

inline Index max_ambient_dim() {
  if (const char* v = std::getenv("QHA_MAX_DIM")) {
    char* end = nullptr;
    const long long x = std::strtoll(v, &end, 10);
    if (end != v && x > 0) return static_cast<Index>(x);
  }
  return 4096;
}

namespace detail {

// f -> f o d on the flattened dM x dim maps, in subspace coordinates
template <class S>
Matrix<S> precompose_operator(const Subspace<S>& src, const Subspace<S>& dst, Index dm, const Matrix<S>& d,
                              const FieldSpec& f, const char* what) {
  const Matrix<S> op = kron<S>(eye<S>(dm, f), Matrix<S>(d.transpose()));
  const Matrix<S> img = op * src.basis();
  for (Index k = 0; k < img.cols(); ++k)
    if (!dst.contains(Vector<S>(img.col(k)))) throw IllDefined(std::string(what) + ": image leaves the cochain space", {k});
  return dst.coordinates(img);
}

// extend g : X -> Y to X (x) A (x) ... -> Y (x) A (x) ..., k extra factors
template <class Mod>
Matrix<ScalarOf<Mod>> extend_right(Mod X, Mod Y, const Mod& A, Matrix<ScalarOf<Mod>> g, Index k) {
  for (Index r = 0; r < k; ++r) {
    g = tensor_maps(X, A, Y, A, g, A.identity());
    X = tensor(X, A);
    Y = tensor(Y, A);
  }
  return g;
}

template <class S>
void compare_relation(CheckReport& report, const std::string& id, Index degree, Index i, Index j, const Matrix<S>& a,
                      const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || first_difference<S>(a, b))
    report.fail(id, {degree, i, j});
}

template <class S>
Matrix<S> power(const Matrix<S>& m, Index k, const FieldSpec& f) {
  Matrix<S> out = eye<S>(m.rows(), f);
  for (Index i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace detail

template <class S>
CheckReport verify_cocyclic(const CocyclicModule<S>& C) {
  const FieldSpec& f = C.field;
  const Index N = C.n_max;
  CheckReport report;
  const std::vector<std::string> ids{"cosimplicial_dd", "cosimplicial_ss", "cosimplicial_sd",
                                     "cyclic_td",       "cyclic_ts",       "cyclic_power"};
  for (Index n = 0; n + 2 <= N; ++n)
    for (Index j = 1; j <= n + 2; ++j)
      for (Index i = 0; i < j; ++i)
        detail::compare_relation<S>(report, "cosimplicial_dd", n, i, j, Matrix<S>(C.delta(n + 1, j) * C.delta(n, i)),
                                    Matrix<S>(C.delta(n + 1, i) * C.delta(n, j - 1)));
  for (Index n = 0; n + 2 <= N; ++n)
    for (Index j = 0; j <= n; ++j)
      for (Index i = 0; i <= j; ++i)
        detail::compare_relation<S>(report, "cosimplicial_ss", n, i, j, Matrix<S>(C.sigma(n, j) * C.sigma(n + 1, i)),
                                    Matrix<S>(C.sigma(n, i) * C.sigma(n + 1, j + 1)));
  for (Index n = 0; n + 1 <= N; ++n)
    for (Index j = 0; j <= n; ++j)
      for (Index i = 0; i <= n + 1; ++i) {
        const Matrix<S> lhs = C.sigma(n, j) * C.delta(n, i);
        Matrix<S> rhs;
        if (i == j || i == j + 1)
          rhs = eye<S>(C.dim(n), f);
        else if (i < j)
          rhs = C.delta(n - 1, i) * C.sigma(n - 1, j - 1);
        else
          rhs = C.delta(n - 1, i - 1) * C.sigma(n - 1, j);
        detail::compare_relation<S>(report, "cosimplicial_sd", n, i, j, lhs, rhs);
      }
  for (Index n = 1; n <= N; ++n) {
    detail::compare_relation<S>(report, "cyclic_td", n, 0, 0, Matrix<S>(C.t(n) * C.delta(n - 1, 0)), C.delta(n - 1, n));
    for (Index i = 1; i <= n; ++i)
      detail::compare_relation<S>(report, "cyclic_td", n, i, 0, Matrix<S>(C.t(n) * C.delta(n - 1, i)),
                                  Matrix<S>(C.delta(n - 1, i - 1) * C.t(n - 1)));
  }
  for (Index n = 0; n + 1 <= N; ++n) {
    detail::compare_relation<S>(report, "cyclic_ts", n, 0, 0, Matrix<S>(C.t(n) * C.sigma(n, 0)),
                                Matrix<S>(C.sigma(n, n) * C.t(n + 1) * C.t(n + 1)));
    for (Index i = 1; i <= n; ++i)
      detail::compare_relation<S>(report, "cyclic_ts", n, i, 0, Matrix<S>(C.t(n) * C.sigma(n, i)),
                                  Matrix<S>(C.sigma(n, i - 1) * C.t(n + 1)));
  }
  for (Index n = 0; n <= N; ++n)
    detail::compare_relation<S>(report, "cyclic_power", n, 0, 0, detail::power<S>(C.t(n), n + 1, f),
                                eye<S>(C.dim(n), f));
  CheckReport out;
  for (const auto& id : ids) {
    const CheckOutcome* first = nullptr;
    for (const auto& o : report.outcomes())
      if (o.id == id) {
        first = &o;
        break;
      }
    if (first)
      out.add(*first);
    else
      out.pass(id);
  }
  return out;
}

// C^n = Hom(A^{(x) n+1}, M), left-nested, with cofaces by adjacent multiplication, codegeneracies by unit
// insertion, t_n from the contratrace and the last coface t_{n+1} delta_0.
template <class Mod>
CocyclicModule<ScalarOf<Mod>> build_cocyclic(const ModuleAlgebra<Mod>& A, const Contramodule<Mod>& coefficient,
                                             Index n_max = 4) {
  using S = ScalarOf<Mod>;
  if (n_max < 1) throw TruncationError("build_cocyclic: n_max >= 1 required");
  const Mod& X = A.carrier;
  const Mod& M = coefficient.carrier();
  require_same_parent(X, M);
  const FieldSpec& f = M.algebra().field();
  Index ambient = M.dim();
  for (Index k = 0; k <= n_max; ++k) ambient *= X.dim();
  if (ambient > max_ambient_dim())
    throw DimensionError("build_cocyclic: ambient dimension " + std::to_string(ambient) + " exceeds QHA_MAX_DIM");
  if (!check_algebra_object(A).passed()) throw IllDefined("build_cocyclic: not an algebra object", {});
  if (!check_stability(coefficient).passed()) throw UnstableCoefficient("build_cocyclic: coefficient is not stable");
  if (!check_ayd(coefficient).passed()) throw AydViolated("build_cocyclic: coefficient is not aYD");

  const CenterElement<Mod> E(coefficient);
  const auto powers = tensor_powers_bracketed(X, n_max + 1);
  auto P = [&](Index k) -> const Mod& { return powers[static_cast<std::size_t>(k - 1)].module; };
  const Index dm = M.dim();
  const Mod XX = tensor(X, X);

  CocyclicModule<S> C;
  C.n_max = n_max;
  C.field = f;
  for (Index n = 0; n <= n_max; ++n) C.spaces.push_back(hom_module_morphisms(P(n + 1), M));

  // merge factors i, i+1 of P_{n+2}
  auto merge = [&](Index n, Index i) -> Matrix<S> {
    Matrix<S> g;
    if (i == 0)
      g = A.mult;
    else
      g = tensor_maps(P(i), XX, P(i), X, P(i).identity(), A.mult) * associator(P(i), X, X);
    return detail::extend_right(P(i + 2), P(i + 1), X, g, n - i);
  };
  // insert the unit after factor j of P_{n+1}
  auto insert = [&](Index n, Index j) -> Matrix<S> {
    const Mod U = unit_object(X);
    const Matrix<S> g = tensor_maps(P(j + 1), U, P(j + 1), X, P(j + 1).identity(), A.unit) *
                        right_unitor_inverse(P(j + 1));
    return detail::extend_right(P(j + 1), P(j + 2), X, g, n - j);
  };

  C.cyclic.push_back(eye<S>(C.dim(0), f));
  for (Index n = 1; n <= n_max; ++n) {
    const auto& bp = powers[static_cast<std::size_t>(n)];
    const Subspace<S> split_space = hom_module_morphisms(bp.split, M);
    const Matrix<S> transport =
        detail::precompose_operator<S>(C.spaces[static_cast<std::size_t>(n)], split_space, dm, bp.from_split, f,
                                       "cyclic operator");
    C.cyclic.push_back(contratrace_iota(E, X, P(n)) * transport);
  }
  for (Index n = 0; n < n_max; ++n) {
    const auto& src = C.spaces[static_cast<std::size_t>(n)];
    const auto& dst = C.spaces[static_cast<std::size_t>(n + 1)];
    std::vector<Matrix<S>> d;
    for (Index i = 0; i <= n; ++i) d.push_back(detail::precompose_operator<S>(src, dst, dm, merge(n, i), f, "coface"));
    d.push_back(C.cyclic[static_cast<std::size_t>(n + 1)] * d.front());
    C.cofaces.push_back(std::move(d));
    std::vector<Matrix<S>> s;
    for (Index j = 0; j <= n; ++j)
      s.push_back(detail::precompose_operator<S>(dst, src, dm, insert(n, j), f, "codegeneracy"));
    C.codegeneracies.push_back(std::move(s));
  }
  C.identities = verify_cocyclic(C);
  for (const auto& o : C.identities.outcomes())
    if (!o.passed) throw CocyclicIdentityFailure(o.id, o.witness.empty() ? -1 : o.witness.front());
  return C;
}

enum class Theory { Hochschild, Cyclic };

inline const char* theory_name(Theory t) { return t == Theory::Hochschild ? "hochschild" : "cyclic"; }

struct CohomologyResult {
  Theory theory = Theory::Hochschild;
  std::vector<Index> dims;
  FieldSpec field;
  std::string convention;
};

// b = sum_{i=0}^{n+1} (-1)^i delta_i : C^n -> C^{n+1}
template <class S>
Matrix<S> hochschild_coboundary(const CocyclicModule<S>& C, Index n) {
  Matrix<S> b = Matrix<S>::Constant(C.dim(n + 1), C.dim(n), from_int<S>(0, C.field));
  for (Index i = 0; i <= n + 1; ++i) b += from_int<S>(i % 2 ? -1 : 1, C.field) * C.delta(n, i);
  return b;
}

// b' = sum_{i=0}^{n} (-1)^i delta_i
template <class S>
Matrix<S> bar_coboundary(const CocyclicModule<S>& C, Index n) {
  Matrix<S> b = Matrix<S>::Constant(C.dim(n + 1), C.dim(n), from_int<S>(0, C.field));
  for (Index i = 0; i <= n; ++i) b += from_int<S>(i % 2 ? -1 : 1, C.field) * C.delta(n, i);
  return b;
}

namespace detail {

template <class S>
std::vector<Index> cohomology_dims(const std::vector<Index>& dims, const std::vector<Matrix<S>>& diffs, Index up_to) {
  std::vector<Index> out;
  for (Index n = 0; n <= up_to; ++n) {
    Index h = dims[static_cast<std::size_t>(n)] - rank<S>(diffs[static_cast<std::size_t>(n)]);
    if (n > 0) h -= rank<S>(diffs[static_cast<std::size_t>(n - 1)]);
    out.push_back(h);
  }
  return out;
}

template <class S>
void require_square_zero(const std::vector<Matrix<S>>& diffs, const char* what) {
  for (std::size_t n = 0; n + 1 < diffs.size(); ++n)
    if (!is_zero_matrix<S>(Matrix<S>(diffs[n + 1] * diffs[n])))
      throw CocyclicIdentityFailure(std::string(what) + " squares to nonzero", static_cast<Index>(n));
}

}  // namespace detail

template <class S>
CohomologyResult hochschild_cohomology(const CocyclicModule<S>& C, Index up_to) {
  if (up_to + 1 > C.n_max) throw TruncationError("hochschild_cohomology: degree exceeds n_max - 1");
  std::vector<Matrix<S>> diffs;
  std::vector<Index> dims;
  for (Index n = 0; n <= up_to; ++n) {
    diffs.push_back(hochschild_coboundary(C, n));
    dims.push_back(C.dim(n));
  }
  detail::require_square_zero<S>(diffs, "b");
  return {Theory::Hochschild, detail::cohomology_dims<S>(dims, diffs, up_to), C.field,
          "b = sum_{i=0}^{n+1} (-1)^i delta_i"};
}

// Total differential of the bicomplex with columns b (even) and -b' (odd), horizontal 1 - lambda and N,
// lambda = (-1)^n t_n, N = sum lambda^i; Tot^n = C^{0,n} + C^{1,n-1} + ... + C^{n,0}.
template <class S>
Matrix<S> cyclic_total_differential(const CocyclicModule<S>& C, Index n) {
  const FieldSpec& f = C.field;
  auto offsets = [&](Index deg) {
    std::vector<Index> off{0};
    for (Index p = 0; p <= deg; ++p) off.push_back(off.back() + C.dim(deg - p));
    return off;
  };
  const auto src = offsets(n), dst = offsets(n + 1);
  Matrix<S> D = Matrix<S>::Constant(dst.back(), src.back(), from_int<S>(0, f));
  for (Index p = 0; p <= n; ++p) {
    const Index q = n - p;
    const auto sp = static_cast<std::size_t>(p);
    const Matrix<S> vert = p % 2 == 0 ? hochschild_coboundary(C, q) : Matrix<S>(-bar_coboundary(C, q));
    D.block(dst[sp], src[sp], vert.rows(), vert.cols()) = vert;
    const Matrix<S> lambda = from_int<S>(q % 2 ? -1 : 1, f) * C.t(q);
    Matrix<S> horiz;
    if (p % 2 == 0) {
      horiz = eye<S>(C.dim(q), f) - lambda;
    } else {
      horiz = Matrix<S>::Constant(C.dim(q), C.dim(q), from_int<S>(0, f));
      Matrix<S> pw = eye<S>(C.dim(q), f);
      for (Index i = 0; i <= q; ++i) {
        horiz += pw;
        pw = pw * lambda;
      }
    }
    D.block(dst[sp + 1], src[sp], horiz.rows(), horiz.cols()) = horiz;
  }
  return D;
}

template <class S>
CohomologyResult cyclic_cohomology(const CocyclicModule<S>& C, Index up_to) {
  if (up_to + 1 > C.n_max) throw TruncationError("cyclic_cohomology: degree exceeds n_max - 1");
  std::vector<Matrix<S>> diffs;
  std::vector<Index> dims;
  for (Index n = 0; n <= up_to; ++n) {
    diffs.push_back(cyclic_total_differential(C, n));
    dims.push_back(diffs.back().cols());
  }
  detail::require_square_zero<S>(diffs, "total differential");
  return {Theory::Cyclic, detail::cohomology_dims<S>(dims, diffs, up_to), C.field,
          "lambda = (-1)^n t_n, N = sum_i lambda^i"};
}

template <class S>
CohomologyResult cohomology(const CocyclicModule<S>& C, Theory t, Index up_to) {
  return t == Theory::Hochschild ? hochschild_cohomology(C, up_to) : cyclic_cohomology(C, up_to);
}

}  // namespace qha
