#pragma once

#include "qha/quasihopf.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qha {

class IllDefined : public std::runtime_error {
 public:
  IllDefined(const std::string& what, std::vector<Index> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<Index>& witness() const { return witness_; }

 private:
  std::vector<Index> witness_;
};

class NotHopf : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class S>
Matrix<S> eye(Index n, const FieldSpec& f) {
  return Matrix<S>::Identity(n, n) * from_int<S>(1, f);
}

// Associative unital algebra by structure constants; mult is d x d^2, column i*d+j holds e_i e_j.
template <class S>
class AlgebraTable {
 public:
  using Scalar = S;

  AlgebraTable() = default;
  AlgebraTable(FieldSpec field, Matrix<S> mult, Vector<S> unit)
      : field_(field), mult_(std::move(mult)), unit_(std::move(unit)) {
    if (!FieldOps<S>::accepts(field_)) throw FieldError("scalar type does not match field");
    const Index d = unit_.size();
    if (d <= 0) throw DimensionError("dim: degenerate algebra of dimension 0");
    if (mult_.rows() != d || mult_.cols() != d * d) throw DimensionError("mult: dimension mismatch");
    left_.resize(d);
    for (Index i = 0; i < d; ++i) {
      left_[i] = Matrix<S>(d, d);
      for (Index j = 0; j < d; ++j) left_[i].col(j) = mult_.col(i * d + j);
    }
  }

  const FieldSpec& field() const { return field_; }
  Index dim() const { return unit_.size(); }
  const Matrix<S>& mult() const { return mult_; }
  const Vector<S>& unit() const { return unit_; }
  S scalar(long long v) const { return from_int<S>(v, field_); }
  Vector<S> zero() const { return Vector<S>::Constant(dim(), scalar(0)); }
  Vector<S> basis(Index i) const {
    Vector<S> e = zero();
    e(i) = scalar(1);
    return e;
  }

  const Matrix<S>& left(Index i) const { return left_[i]; }
  Matrix<S> left(const Vector<S>& x) const {
    Matrix<S> m = Matrix<S>::Constant(dim(), dim(), scalar(0));
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(x(i))) m += x(i) * left_[i];
    return m;
  }
  // column j holds e_j x
  Matrix<S> right(const Vector<S>& x) const {
    Matrix<S> m(dim(), dim());
    for (Index j = 0; j < dim(); ++j) m.col(j) = left_[j] * x;
    return m;
  }
  Vector<S> multiply(const Vector<S>& x, const Vector<S>& y) const { return left(x) * y; }
  Vector<S> multiply(std::initializer_list<Vector<S>> xs) const {
    Vector<S> acc = unit_;
    for (const auto& x : xs) acc = multiply(acc, x);
    return acc;
  }

  AlgebraTable opposite() const {
    const Index d = dim();
    Matrix<S> m(d, d * d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) m.col(i * d + j) = mult_.col(j * d + i);
    return AlgebraTable(field_, std::move(m), unit_);
  }

  bool operator==(const AlgebraTable& o) const {
    return field_ == o.field_ && same_shape_equal<S>(mult_, o.mult_) && same_shape_equal<S>(unit_, o.unit_);
  }

 private:
  FieldSpec field_ = FieldSpec::rationals();
  Matrix<S> mult_;
  Vector<S> unit_;
  std::vector<Matrix<S>> left_;
};

template <class S>
using BaseRing = AlgebraTable<S>;

template <class S>
CheckReport check_algebra_table(const AlgebraTable<S>& A) {
  CheckReport report;
  const Index d = A.dim();
  std::optional<std::vector<Index>> w;
  for (Index i = 0; i < d && !w; ++i)
    for (Index j = 0; j < d && !w; ++j)
      for (Index k = 0; k < d && !w; ++k)
        if (!same_shape_equal<S>(A.multiply(A.multiply(A.basis(i), A.basis(j)), A.basis(k)),
                                 A.multiply(A.basis(i), A.multiply(A.basis(j), A.basis(k)))))
          w = std::vector<Index>{i, j, k};
  detail::record<S>(report, "associativity", w);
  w.reset();
  for (Index i = 0; i < d && !w; ++i)
    if (!same_shape_equal<S>(A.multiply(A.unit(), A.basis(i)), A.basis(i)) ||
        !same_shape_equal<S>(A.multiply(A.basis(i), A.unit()), A.basis(i)))
      w = std::vector<Index>{i};
  detail::record<S>(report, "unit", w);
  return report;
}

template <class S>
BaseRing<S> base_field(const FieldSpec& f) {
  return BaseRing<S>(f, Matrix<S>::Constant(1, 1, from_int<S>(1, f)), Vector<S>::Constant(1, from_int<S>(1, f)));
}

// k[x]/(x^m) with basis 1, x, ..., x^{m-1}.
template <class S>
BaseRing<S> truncated_polynomial_ring(const FieldSpec& f, Index m) {
  if (m <= 0) throw DimensionError("dim: degenerate algebra of dimension 0");
  Matrix<S> mult = Matrix<S>::Constant(m, m * m, from_int<S>(0, f));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; i + j < m; ++j) mult(i + j, i * m + j) = from_int<S>(1, f);
  Vector<S> unit = Vector<S>::Constant(m, from_int<S>(0, f));
  unit(0) = from_int<S>(1, f);
  return BaseRing<S>(f, std::move(mult), std::move(unit));
}

// Upper triangular 2x2 matrices with basis e11, e12, e22.
template <class S>
BaseRing<S> upper_triangular_ring(const FieldSpec& f) {
  const S one = from_int<S>(1, f);
  Matrix<S> mult = Matrix<S>::Constant(3, 9, from_int<S>(0, f));
  mult(0, 0 * 3 + 0) = one;
  mult(1, 0 * 3 + 1) = one;
  mult(1, 1 * 3 + 2) = one;
  mult(2, 2 * 3 + 2) = one;
  Vector<S> unit = Vector<S>::Constant(3, from_int<S>(0, f));
  unit(0) = one;
  unit(2) = one;
  return BaseRing<S>(f, std::move(mult), std::move(unit));
}

// (X (x)_k Y) modulo span{A_j x (x) y - x (x) B_j y}.
template <class S>
struct RelationSpace {
  Index left_dim = 0, right_dim = 0;
  Subspace<S> relations;
  QuotientSection<S> section;

  Index quotient_dim() const { return section.projector.rows(); }
  bool contains(const Vector<S>& v) const {
    return is_zero_matrix<S>(Matrix<S>(section.projector * v));
  }
};

template <class S>
RelationSpace<S> relation_space(const std::vector<Matrix<S>>& left_ops, const std::vector<Matrix<S>>& right_ops,
                                Index dx, Index dy, const FieldSpec& f) {
  if (left_ops.size() != right_ops.size()) throw DimensionError("relation_space: operator count mismatch");
  const Index amb = dx * dy;
  Matrix<S> gens(amb, static_cast<Index>(left_ops.size()) * amb);
  const Matrix<S> ix = eye<S>(dx, f), iy = eye<S>(dy, f);
  for (std::size_t j = 0; j < left_ops.size(); ++j)
    gens.middleCols(static_cast<Index>(j) * amb, amb) = kron<S>(left_ops[j], iy) - kron<S>(ix, right_ops[j]);
  RelationSpace<S> out;
  out.left_dim = dx;
  out.right_dim = dy;
  out.relations = Subspace<S>::span(gens, amb);
  out.section = quotient_section<S>(amb, out.relations);
  return out;
}

// Projector from X (x)_k Y (x)_k Z onto the quotient by relations on legs (0,1) and (1,2).
template <class S>
Matrix<S> triple_projector(const RelationSpace<S>& rel01, const std::vector<Matrix<S>>& c_ops,
                           const std::vector<Matrix<S>>& d_ops, Index dz, const FieldSpec& f) {
  const auto& P = rel01.section.projector;
  const auto& L = rel01.section.lift;
  const Matrix<S> ix = eye<S>(rel01.left_dim, f);
  std::vector<Matrix<S>> lifted;
  for (const auto& c : c_ops) lifted.push_back(P * kron<S>(ix, c) * L);
  auto rel = relation_space<S>(lifted, d_ops, rel01.quotient_dim(), dz, f);
  return rel.section.projector * kron<S>(P, eye<S>(dz, f));
}

// One side of a Hopf algebroid presented as a left bialgebroid; the right side is viewed on H^op.
template <class S>
struct BialgebroidView {
  BaseRing<S> ring;
  AlgebraTable<S> algebra;
  Matrix<S> s, t;   // n x r
  Matrix<S> delta;  // n^2 x n
  Matrix<S> eps;    // r x n

  std::vector<Matrix<S>> left_ops(const Matrix<S>& images) const {
    std::vector<Matrix<S>> ops;
    for (Index j = 0; j < images.cols(); ++j) ops.push_back(algebra.left(Vector<S>(images.col(j))));
    return ops;
  }
  RelationSpace<S> relations() const {
    return relation_space<S>(left_ops(t), left_ops(s), algebra.dim(), algebra.dim(), algebra.field());
  }
};

namespace detail {

template <class S>
Vector<S> tensor2_product(const AlgebraTable<S>& A, const Vector<S>& u, const Vector<S>& v) {
  const Index n = A.dim();
  Vector<S> out = Vector<S>::Constant(n * n, A.scalar(0));
  for (Index I = 0; I < n * n; ++I) {
    if (is_zero(u(I))) continue;
    for (Index J = 0; J < n * n; ++J) {
      if (is_zero(v(J))) continue;
      Vector<S> a = A.left(I / n).col(J / n), b = A.left(I % n).col(J % n);
      out += u(I) * v(J) * kron<S>(a, b);
    }
  }
  return out;
}

// Matrix (n x n^2) of x (x) y -> f(x, y) for a bilinear map given on basis pairs.
template <class S, class F>
Matrix<S> bilinear_matrix(const AlgebraTable<S>& A, F&& f) {
  const Index n = A.dim();
  Matrix<S> m(n, n * n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) m.col(p * n + q) = f(A.basis(p), A.basis(q));
  return m;
}

template <class S>
std::optional<std::vector<Index>> matrix_witness(const Matrix<S>& a, const Matrix<S>& b) {
  if (auto d = first_difference<S>(a, b)) return std::vector<Index>{d->first, d->second};
  return std::nullopt;
}

}  // namespace detail

template <class S>
CheckReport check_bialgebroid(const BialgebroidView<S>& B) {
  CheckReport report;
  const auto& A = B.algebra;
  const auto& R = B.ring;
  const FieldSpec& f = A.field();
  const Index n = A.dim(), r = R.dim();
  const auto rel = B.relations();
  auto s = [&](const Vector<S>& x) -> Vector<S> { return B.s * x; };
  auto t = [&](const Vector<S>& x) -> Vector<S> { return B.t * x; };
  auto eps = [&](const Vector<S>& x) -> Vector<S> { return B.eps * x; };
  auto delta = [&](const Vector<S>& x) -> Vector<S> { return B.delta * x; };
  auto eq = [](const Vector<S>& a, const Vector<S>& b) { return same_shape_equal<S>(a, b); };
  const Matrix<S> in = eye<S>(n, f);
  std::optional<std::vector<Index>> w;

  w.reset();
  for (Index a = 0; a < r && !w; ++a)
    for (Index b = 0; b < r && !w; ++b)
      if (!eq(s(R.multiply(R.basis(a), R.basis(b))), A.multiply(s(R.basis(a)), s(R.basis(b)))))
        w = std::vector<Index>{a, b};
  if (!w && !eq(s(R.unit()), A.unit())) w = std::vector<Index>{};
  detail::record<S>(report, "source_hom", w);

  w.reset();
  for (Index a = 0; a < r && !w; ++a)
    for (Index b = 0; b < r && !w; ++b)
      if (!eq(t(R.multiply(R.basis(a), R.basis(b))), A.multiply(t(R.basis(b)), t(R.basis(a)))))
        w = std::vector<Index>{a, b};
  if (!w && !eq(t(R.unit()), A.unit())) w = std::vector<Index>{};
  detail::record<S>(report, "target_antihom", w);

  w.reset();
  for (Index a = 0; a < r && !w; ++a)
    for (Index b = 0; b < r && !w; ++b)
      if (!eq(A.multiply(s(R.basis(a)), t(R.basis(b))), A.multiply(t(R.basis(b)), s(R.basis(a)))))
        w = std::vector<Index>{a, b};
  detail::record<S>(report, "commute", w);

  w.reset();
  for (Index a = 0; a < r && !w; ++a)
    for (Index b = 0; b < r && !w; ++b) {
      const Matrix<S> sa = A.left(s(R.basis(a))), tb = A.left(t(R.basis(b)));
      for (Index h = 0; h < n && !w; ++h) {
        Vector<S> lhs = delta(A.multiply({s(R.basis(a)), t(R.basis(b)), A.basis(h)}));
        Vector<S> rhs = kron<S>(sa, tb) * delta(A.basis(h));
        if (!rel.contains(lhs - rhs)) w = std::vector<Index>{a, b, h};
      }
    }
  detail::record<S>(report, "coproduct_bimodule", w);

  w.reset();
  for (Index j = 0; j < r && !w; ++j) {
    const Matrix<S> rt = kron<S>(A.right(t(R.basis(j))), in), rs = kron<S>(in, A.right(s(R.basis(j))));
    for (Index h = 0; h < n && !w; ++h) {
      Vector<S> d = delta(A.basis(h));
      if (!rel.contains(Vector<S>(rt * d - rs * d))) w = std::vector<Index>{j, h};
    }
  }
  detail::record<S>(report, "takeuchi", w);

  w.reset();
  {
    std::vector<Matrix<S>> c_ops, d_ops;
    for (Index j = 0; j < r; ++j) {
      c_ops.push_back(A.left(t(R.basis(j))));
      d_ops.push_back(A.left(s(R.basis(j))));
    }
    const Matrix<S> P3 = triple_projector<S>(rel, c_ops, d_ops, n, f);
    const Matrix<S> lhs = kron<S>(B.delta, in) * B.delta, rhs = kron<S>(in, B.delta) * B.delta;
    const Matrix<S> diff = P3 * (lhs - rhs);
    for (Index h = 0; h < n && !w; ++h)
      if (!is_zero_matrix<S>(Matrix<S>(diff.col(h)))) w = std::vector<Index>{h};
  }
  detail::record<S>(report, "coassociativity", w);

  w.reset();
  {
    auto left_counit = detail::bilinear_matrix<S>(A, [&](const Vector<S>& x, const Vector<S>& y) {
      return A.multiply(s(eps(x)), y);
    });
    auto right_counit = detail::bilinear_matrix<S>(A, [&](const Vector<S>& x, const Vector<S>& y) {
      return A.multiply(t(eps(y)), x);
    });
    w = detail::matrix_witness<S>(Matrix<S>(left_counit * B.delta), in);
    if (!w) w = detail::matrix_witness<S>(Matrix<S>(right_counit * B.delta), in);
  }
  detail::record<S>(report, "counit", w);

  w.reset();
  for (Index a = 0; a < r && !w; ++a)
    for (Index b = 0; b < r && !w; ++b)
      for (Index h = 0; h < n && !w; ++h)
        if (!eq(eps(A.multiply({s(R.basis(a)), t(R.basis(b)), A.basis(h)})),
                R.multiply({R.basis(a), eps(A.basis(h)), R.basis(b)})))
          w = std::vector<Index>{a, b, h};
  detail::record<S>(report, "counit_bimodule", w);

  w.reset();
  for (Index h = 0; h < n && !w; ++h)
    for (Index k = 0; k < n && !w; ++k) {
      Vector<S> lhs = eps(A.multiply(A.basis(h), A.basis(k)));
      Vector<S> viaS = eps(A.multiply(A.basis(h), s(eps(A.basis(k)))));
      Vector<S> viaT = eps(A.multiply(A.basis(h), t(eps(A.basis(k)))));
      if (!eq(lhs, viaS) || !eq(lhs, viaT)) w = std::vector<Index>{h, k};
    }
  if (!w && !eq(eps(A.unit()), R.unit())) w = std::vector<Index>{};
  detail::record<S>(report, "counit_character", w);

  w.reset();
  for (Index h = 0; h < n && !w; ++h)
    for (Index k = 0; k < n && !w; ++k) {
      Vector<S> lhs = delta(A.multiply(A.basis(h), A.basis(k)));
      Vector<S> rhs = detail::tensor2_product<S>(A, delta(A.basis(h)), delta(A.basis(k)));
      if (!rel.contains(Vector<S>(lhs - rhs))) w = std::vector<Index>{h, k};
    }
  if (!w && !rel.contains(Vector<S>(delta(A.unit()) - kron<S>(A.unit(), A.unit())))) w = std::vector<Index>{};
  detail::record<S>(report, "multiplicative", w);
  return report;
}

template <class S>
struct HopfAlgebroidData {
  FieldSpec field = FieldSpec::rationals();
  std::string name;
  BaseRing<S> base;
  Index dim = 0;
  Matrix<S> mult;  // n x n^2
  Vector<S> unit;
  Matrix<S> s_l, t_l, s_r, t_r;  // n x r, column j is the image of base element j
  Matrix<S> delta_l, delta_r;    // n^2 x n, lifts into H (x)_k H
  Matrix<S> eps_l, eps_r;        // r x n, both valued in the carrier of R_l
  Matrix<S> antipode, antipode_inv;

  bool operator==(const HopfAlgebroidData& o) const {
    return field == o.field && dim == o.dim && base == o.base && same_shape_equal<S>(mult, o.mult) &&
           same_shape_equal<S>(unit, o.unit) && same_shape_equal<S>(s_l, o.s_l) &&
           same_shape_equal<S>(t_l, o.t_l) && same_shape_equal<S>(s_r, o.s_r) &&
           same_shape_equal<S>(t_r, o.t_r) && same_shape_equal<S>(delta_l, o.delta_l) &&
           same_shape_equal<S>(delta_r, o.delta_r) && same_shape_equal<S>(eps_l, o.eps_l) &&
           same_shape_equal<S>(eps_r, o.eps_r) && same_shape_equal<S>(antipode, o.antipode) &&
           same_shape_equal<S>(antipode_inv, o.antipode_inv);
  }
};

template <class S>
class HopfAlgebroid {
 public:
  using Scalar = S;

  explicit HopfAlgebroid(HopfAlgebroidData<S> data) : d_(std::move(data)) {
    if (!FieldOps<S>::accepts(d_.field)) throw FieldError("scalar type does not match field");
    const Index n = d_.dim, r = d_.base.dim();
    if (r <= 0) throw DimensionError("base: degenerate base ring of dimension 0");
    if (!(d_.base.field() == d_.field)) throw FieldError("base: field mismatch");
    if (n <= 0) throw DimensionError("dim: algebra dimension must be positive");
    auto need = [](bool ok, const char* field) {
      if (!ok) throw DimensionError(std::string(field) + ": dimension mismatch");
    };
    need(d_.mult.rows() == n && d_.mult.cols() == n * n, "mult");
    need(d_.unit.size() == n, "unit");
    for (auto [m, name] : {std::pair{&d_.s_l, "s_l"}, {&d_.t_l, "t_l"}, {&d_.s_r, "s_r"}, {&d_.t_r, "t_r"}})
      need(m->rows() == n && m->cols() == r, name);
    need(d_.delta_l.rows() == n * n && d_.delta_l.cols() == n, "delta_l");
    need(d_.delta_r.rows() == n * n && d_.delta_r.cols() == n, "delta_r");
    need(d_.eps_l.rows() == r && d_.eps_l.cols() == n, "eps_l");
    need(d_.eps_r.rows() == r && d_.eps_r.cols() == n, "eps_r");
    need(d_.antipode.rows() == n && d_.antipode.cols() == n, "antipode");
    need(d_.antipode_inv.rows() == n && d_.antipode_inv.cols() == n, "antipode_inv");
    h_ = AlgebraTable<S>(d_.field, d_.mult, d_.unit);
  }

  const HopfAlgebroidData<S>& data() const { return d_; }
  Index dim() const { return d_.dim; }
  const FieldSpec& field() const { return d_.field; }
  const std::string& name() const { return d_.name; }
  const BaseRing<S>& base() const { return d_.base; }
  const AlgebraTable<S>& table() const { return h_; }
  S scalar(long long v) const { return from_int<S>(v, d_.field); }
  Vector<S> basis(Index i) const { return h_.basis(i); }
  const Vector<S>& unit() const { return d_.unit; }

  const Matrix<S>& left_mult(Index i) const { return h_.left(i); }
  Matrix<S> left_mult(const Vector<S>& x) const { return h_.left(x); }
  Matrix<S> right_mult(const Vector<S>& x) const { return h_.right(x); }
  Vector<S> multiply(const Vector<S>& x, const Vector<S>& y) const { return h_.multiply(x, y); }
  Vector<S> multiply(std::initializer_list<Vector<S>> xs) const { return h_.multiply(xs); }
  Vector<S> antipode(const Vector<S>& x) const { return d_.antipode * x; }
  Vector<S> antipode_inv(const Vector<S>& x) const { return d_.antipode_inv * x; }

  BialgebroidView<S> left_bialgebroid() const {
    return {d_.base, h_, d_.s_l, d_.t_l, d_.delta_l, d_.eps_l};
  }
  BialgebroidView<S> right_bialgebroid() const {
    return {d_.base.opposite(), h_.opposite(), d_.t_r, d_.s_r, d_.delta_r, d_.eps_r};
  }
  // H (x)_{R_l} H and H (x)_{R_r} H
  RelationSpace<S> left_relations() const { return left_bialgebroid().relations(); }
  RelationSpace<S> right_relations() const { return right_bialgebroid().relations(); }

 private:
  HopfAlgebroidData<S> d_;
  AlgebraTable<S> h_;
};

template <class S>
using AlgebroidPtr = std::shared_ptr<const HopfAlgebroid<S>>;

template <class S>
AlgebroidPtr<S> make_algebroid(HopfAlgebroidData<S> data) {
  return std::make_shared<const HopfAlgebroid<S>>(std::move(data));
}

template <class S>
CheckReport check_left_bialgebroid(const HopfAlgebroid<S>& H) {
  return check_bialgebroid(H.left_bialgebroid());
}

template <class S>
CheckReport check_right_bialgebroid(const HopfAlgebroid<S>& H) {
  return check_bialgebroid(H.right_bialgebroid());
}

template <class S>
CheckReport check_hopf_algebroid(const HopfAlgebroid<S>& H) {
  CheckReport report;
  const auto& d = H.data();
  const auto& A = H.table();
  const auto& R = H.base();
  const FieldSpec& f = H.field();
  const Index n = H.dim(), r = R.dim();
  const Matrix<S> in = eye<S>(n, f);
  const auto rel_l = H.left_relations(), rel_r = H.right_relations();
  auto ops = [&](const Matrix<S>& images, bool left) {
    std::vector<Matrix<S>> out;
    for (Index j = 0; j < images.cols(); ++j)
      out.push_back(left ? A.left(Vector<S>(images.col(j))) : A.right(Vector<S>(images.col(j))));
    return out;
  };
  auto eq = [](const Vector<S>& a, const Vector<S>& b) { return same_shape_equal<S>(a, b); };
  auto sl = [&](Index j) -> Vector<S> { return d.s_l.col(j); };
  auto tl = [&](Index j) -> Vector<S> { return d.t_l.col(j); };
  auto sr = [&](Index j) -> Vector<S> { return d.s_r.col(j); };
  auto tr = [&](Index j) -> Vector<S> { return d.t_r.col(j); };
  std::optional<std::vector<Index>> w;

  w.reset();
  {
    const std::pair<Matrix<S>, Matrix<S>> ids[] = {{d.s_l * d.eps_l * d.t_r, d.t_r},
                                                   {d.s_r * d.eps_r * d.t_l, d.t_l},
                                                   {d.t_l * d.eps_l * d.s_r, d.s_r},
                                                   {d.t_r * d.eps_r * d.s_l, d.s_l}};
    for (Index k = 0; k < 4 && !w; ++k)
      if (auto diff = first_difference<S>(ids[k].first, ids[k].second))
        w = std::vector<Index>{k, diff->first, diff->second};
  }
  detail::record<S>(report, "source_target_counit", w);

  w.reset();
  {
    const Matrix<S> P1 = triple_projector<S>(rel_l, ops(d.s_r, false), ops(d.t_r, false), n, f);
    const Matrix<S> P2 = triple_projector<S>(rel_r, ops(d.t_l, true), ops(d.s_l, true), n, f);
    const Matrix<S> diff1 = P1 * (kron<S>(d.delta_l, in) * d.delta_r - kron<S>(in, d.delta_r) * d.delta_l);
    const Matrix<S> diff2 = P2 * (kron<S>(d.delta_r, in) * d.delta_l - kron<S>(in, d.delta_l) * d.delta_r);
    for (Index h = 0; h < n && !w; ++h) {
      if (!is_zero_matrix<S>(Matrix<S>(diff1.col(h)))) w = std::vector<Index>{0, h};
      else if (!is_zero_matrix<S>(Matrix<S>(diff2.col(h)))) w = std::vector<Index>{1, h};
    }
  }
  detail::record<S>(report, "mixed_coassociativity", w);

  w.reset();
  for (Index a = 0; a < r && !w; ++a)
    for (Index b = 0; b < r && !w; ++b)
      for (Index h = 0; h < n && !w; ++h)
        if (!eq(H.antipode(H.multiply({tl(a), H.basis(h), tr(b)})),
                H.multiply({sr(b), H.antipode(H.basis(h)), sl(a)})))
          w = std::vector<Index>{a, b, h};
  detail::record<S>(report, "antipode_twisted_linear", w);

  auto identity_check = [&](const char* id, const Matrix<S>& map, const RelationSpace<S>& rel,
                            const Matrix<S>& delta, const Matrix<S>& expected) {
    std::optional<std::vector<Index>> ww;
    const Matrix<S> killed = map * rel.relations.basis();
    if (!is_zero_matrix<S>(killed)) {
      auto z = first_difference<S>(killed, Matrix<S>(Matrix<S>::Zero(killed.rows(), killed.cols())));
      report.fail(id, {z->first, z->second}, "not well defined on the relative tensor product");
      return;
    }
    ww = detail::matrix_witness<S>(Matrix<S>(map * delta), expected);
    detail::record<S>(report, id, ww);
  };

  identity_check("antipode_left",
                 detail::bilinear_matrix<S>(A, [&](const Vector<S>& x, const Vector<S>& y) {
                   return H.multiply(H.antipode(x), y);
                 }),
                 rel_l, d.delta_l, d.s_r * d.eps_r);
  identity_check("antipode_right",
                 detail::bilinear_matrix<S>(A, [&](const Vector<S>& x, const Vector<S>& y) {
                   return H.multiply(x, H.antipode(y));
                 }),
                 rel_r, d.delta_r, d.s_l * d.eps_l);

  w = detail::matrix_witness<S>(Matrix<S>(d.antipode * d.antipode_inv), in);
  if (!w) w = detail::matrix_witness<S>(Matrix<S>(d.antipode_inv * d.antipode), in);
  detail::record<S>(report, "antipode_inverse", w);

  w.reset();
  for (Index h = 0; h < n && !w; ++h)
    for (Index k = 0; k < n && !w; ++k)
      if (!eq(H.antipode(H.multiply(H.basis(h), H.basis(k))),
              H.multiply(H.antipode(H.basis(k)), H.antipode(H.basis(h)))))
        w = std::vector<Index>{h, k};
  if (!w && !eq(H.antipode(H.unit()), H.unit())) w = std::vector<Index>{};
  detail::record<S>(report, "antipode_antimultiplicative", w);

  identity_check("inverse_antipode_left",
                 detail::bilinear_matrix<S>(A, [&](const Vector<S>& x, const Vector<S>& y) {
                   return H.multiply(H.antipode_inv(y), x);
                 }),
                 rel_l, d.delta_l, d.t_r * d.eps_r);
  identity_check("inverse_antipode_right",
                 detail::bilinear_matrix<S>(A, [&](const Vector<S>& x, const Vector<S>& y) {
                   return H.multiply(y, H.antipode_inv(x));
                 }),
                 rel_r, d.delta_r, d.t_l * d.eps_l);

  w = detail::matrix_witness<S>(Matrix<S>(d.t_r * d.eps_r * d.t_l), Matrix<S>(d.antipode_inv * d.t_l));
  if (!w) w = detail::matrix_witness<S>(Matrix<S>(d.s_r * d.eps_r * d.s_l), Matrix<S>(d.antipode * d.s_l));
  detail::record<S>(report, "antipode_on_base", w);

  w.reset();
  for (Index a = 0; a < r && !w; ++a)
    for (Index b = 0; b < r && !w; ++b)
      for (Index h = 0; h < n && !w; ++h)
        if (!eq(H.multiply({tr(b), H.antipode_inv(H.basis(h)), tl(a)}),
                H.antipode_inv(H.multiply({sl(a), H.basis(h), sr(b)}))))
          w = std::vector<Index>{a, b, h};
  detail::record<S>(report, "inverse_antipode_twisted_linear", w);
  return report;
}

template <class S>
CheckReport check_algebroid_all(const HopfAlgebroid<S>& H) {
  CheckReport report;
  auto prefixed = [&](const CheckReport& part, const std::string& prefix) {
    for (auto o : part.outcomes()) {
      o.id = prefix + o.id;
      report.add(std::move(o));
    }
  };
  prefixed(check_algebra_table(H.base()), "base.");
  prefixed(check_algebra_table(H.table()), "algebra.");
  prefixed(check_left_bialgebroid(H), "left.");
  prefixed(check_right_bialgebroid(H), "right.");
  prefixed(check_hopf_algebroid(H), "hopf.");
  return report;
}

template <class S>
class AlgebroidModule {
 public:
  using Scalar = S;
  using Algebra = HopfAlgebroid<S>;

  AlgebroidModule(AlgebroidPtr<S> parent, std::vector<Matrix<S>> action)
      : parent_(std::move(parent)), action_(std::move(action)) {
    if (!parent_) throw std::invalid_argument("module without parent algebroid");
    if (static_cast<Index>(action_.size()) != parent_->dim())
      throw DimensionError("action: one matrix per basis element of H expected");
    dim_ = action_.empty() ? 0 : action_[0].rows();
    for (const auto& m : action_)
      if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("action: matrices must be square");
  }

  Index dim() const { return dim_; }
  const Algebra& algebra() const { return *parent_; }
  const AlgebroidPtr<S>& parent() const { return parent_; }
  const std::vector<Matrix<S>>& action() const { return action_; }
  const Matrix<S>& action(Index i) const { return action_[i]; }
  Matrix<S> act(const Vector<S>& h) const {
    Matrix<S> m = Matrix<S>::Constant(dim_, dim_, parent_->scalar(0));
    for (Index i = 0; i < h.size(); ++i)
      if (!is_zero(h(i))) m += h(i) * action_[i];
    return m;
  }
  Matrix<S> identity() const { return eye<S>(dim_, parent_->field()); }

  // rho(s_l(e_j)) and rho(t_l(e_j)) for the base basis
  std::vector<Matrix<S>> source_ops() const { return base_ops(parent_->data().s_l); }
  std::vector<Matrix<S>> target_ops() const { return base_ops(parent_->data().t_l); }
  std::vector<Matrix<S>> base_ops(const Matrix<S>& images) const {
    std::vector<Matrix<S>> out;
    for (Index j = 0; j < images.cols(); ++j) out.push_back(act(Vector<S>(images.col(j))));
    return out;
  }

 private:
  AlgebroidPtr<S> parent_;
  std::vector<Matrix<S>> action_;
  Index dim_ = 0;
};

template <class S>
void require_same_parent(const AlgebroidModule<S>& a, const AlgebroidModule<S>& b) {
  if (!same_parent(a.parent(), b.parent())) throw ParentMismatch("modules over different algebroids");
}

template <class S>
CheckReport check_module(const AlgebroidModule<S>& V) {
  CheckReport report;
  const auto& H = V.algebra();
  if (auto d = first_difference<S>(V.act(H.unit()), V.identity()))
    report.fail("unital", {d->first, d->second});
  else
    report.pass("unital");
  std::optional<std::vector<Index>> w;
  for (Index i = 0; i < H.dim() && !w; ++i)
    for (Index j = 0; j < H.dim() && !w; ++j)
      if (first_difference<S>(V.act(H.multiply(H.basis(i), H.basis(j))), Matrix<S>(V.action(i) * V.action(j))))
        w = std::vector<Index>{i, j};
  detail::record<S>(report, "multiplicative", w);
  return report;
}

template <class S>
AlgebroidModule<S> regular_module(const AlgebroidPtr<S>& H) {
  std::vector<Matrix<S>> act;
  for (Index i = 0; i < H->dim(); ++i) act.push_back(H->left_mult(i));
  return AlgebroidModule<S>(H, std::move(act));
}

// R_l with h . r = eps_l(h s_l(r))
template <class S>
AlgebroidModule<S> base_module(const AlgebroidPtr<S>& H) {
  const auto& d = H->data();
  std::vector<Matrix<S>> act;
  for (Index i = 0; i < H->dim(); ++i) act.push_back(d.eps_l * H->left_mult(i) * d.s_l);
  return AlgebroidModule<S>(H, std::move(act));
}

template <class S>
AlgebroidModule<S> unit_object(const AlgebroidModule<S>& like) {
  return base_module(like.parent());
}

template <class S>
RelationSpace<S> tensor_relations(const AlgebroidModule<S>& M, const AlgebroidModule<S>& N) {
  require_same_parent(M, N);
  return relation_space<S>(M.target_ops(), N.source_ops(), M.dim(), N.dim(), M.algebra().field());
}

// sum of the lift coefficients times rho_M(e_p) kron rho_N(e_q)
template <class S>
Matrix<S> lifted_tensor_action(const AlgebroidModule<S>& M, const AlgebroidModule<S>& N, const Vector<S>& x) {
  const Index n = M.algebra().dim();
  Matrix<S> a = Matrix<S>::Constant(M.dim() * N.dim(), M.dim() * N.dim(), M.algebra().scalar(0));
  for (Index I = 0; I < n * n; ++I)
    if (!is_zero(x(I))) a += x(I) * kron<S>(M.action(I / n), N.action(I % n));
  return a;
}

template <class S>
std::pair<AlgebroidModule<S>, RelationSpace<S>> tensor_over_base(const AlgebroidModule<S>& M,
                                                                 const AlgebroidModule<S>& N) {
  auto rel = tensor_relations(M, N);
  const auto& H = M.algebra();
  const auto& P = rel.section.projector;
  std::vector<Matrix<S>> act;
  for (Index h = 0; h < H.dim(); ++h) {
    const Matrix<S> a = lifted_tensor_action(M, N, Vector<S>(H.data().delta_l.col(h)));
    const Matrix<S> moved = P * a * rel.relations.basis();
    for (Index j = 0; j < moved.cols(); ++j)
      for (Index i = 0; i < moved.rows(); ++i)
        if (!is_zero(moved(i, j)))
          throw IllDefined("tensor_over_base: action does not preserve the relations", {h, j, i});
    act.push_back(P * a * rel.section.lift);
  }
  return {AlgebroidModule<S>(M.parent(), std::move(act)), std::move(rel)};
}

template <class S>
AlgebroidModule<S> tensor(const AlgebroidModule<S>& M, const AlgebroidModule<S>& N) {
  return tensor_over_base(M, N).first;
}

template <class S>
Matrix<S> tensor_maps(const AlgebroidModule<S>& V, const AlgebroidModule<S>& W, const AlgebroidModule<S>& V2,
                      const AlgebroidModule<S>& W2, const Matrix<S>& f, const Matrix<S>& g) {
  const auto src = tensor_relations(V, W), dst = tensor_relations(V2, W2);
  return dst.section.projector * kron<S>(f, g) * src.section.lift;
}

template <class S>
Matrix<S> associator(const AlgebroidModule<S>& V, const AlgebroidModule<S>& W, const AlgebroidModule<S>& U) {
  const FieldSpec& f = V.algebra().field();
  const auto vw = tensor_over_base(V, W);
  const auto wu = tensor_over_base(W, U);
  const auto left = tensor_relations(vw.first, U), right = tensor_relations(V, wu.first);
  return right.section.projector * kron<S>(eye<S>(V.dim(), f), wu.second.section.projector) *
         kron<S>(vw.second.section.lift, eye<S>(U.dim(), f)) * left.section.lift;
}

template <class S>
Matrix<S> associator_inverse(const AlgebroidModule<S>& V, const AlgebroidModule<S>& W,
                             const AlgebroidModule<S>& U) {
  const FieldSpec& f = V.algebra().field();
  const auto vw = tensor_over_base(V, W);
  const auto wu = tensor_over_base(W, U);
  const auto left = tensor_relations(vw.first, U), right = tensor_relations(V, wu.first);
  return left.section.projector * kron<S>(vw.second.section.projector, eye<S>(U.dim(), f)) *
         kron<S>(eye<S>(V.dim(), f), wu.second.section.lift) * right.section.lift;
}

// r (x) v -> s_l(r) v
template <class S>
Matrix<S> left_unitor(const AlgebroidModule<S>& V) {
  const auto R = unit_object(V);
  const auto src = tensor_relations(R, V);
  const auto ops = V.source_ops();
  Matrix<S> k(V.dim(), R.dim() * V.dim());
  for (Index j = 0; j < R.dim(); ++j) k.middleCols(j * V.dim(), V.dim()) = ops[j];
  return k * src.section.lift;
}

template <class S>
Matrix<S> left_unitor_inverse(const AlgebroidModule<S>& V) {
  const auto R = unit_object(V);
  const auto rel = tensor_relations(R, V);
  const Matrix<S> one = V.algebra().base().unit();
  return rel.section.projector * kron<S>(one, V.identity());
}

// v (x) r -> t_l(r) v
template <class S>
Matrix<S> right_unitor(const AlgebroidModule<S>& V) {
  const auto R = unit_object(V);
  const auto src = tensor_relations(V, R);
  const auto ops = V.target_ops();
  const Index r = R.dim();
  Matrix<S> k(V.dim(), V.dim() * r);
  for (Index b = 0; b < V.dim(); ++b)
    for (Index j = 0; j < r; ++j) k.col(b * r + j) = ops[j].col(b);
  return k * src.section.lift;
}

template <class S>
Matrix<S> right_unitor_inverse(const AlgebroidModule<S>& V) {
  const auto R = unit_object(V);
  const auto rel = tensor_relations(V, R);
  const Matrix<S> one = V.algebra().base().unit();
  return rel.section.projector * kron<S>(V.identity(), one);
}

// Hom(V, M)_{R_l}: f(t_l(r) v) = t_l(r) f(v)
template <class S>
Subspace<S> left_hom_carrier(const AlgebroidModule<S>& V, const AlgebroidModule<S>& M) {
  require_same_parent(V, M);
  std::vector<std::pair<Matrix<S>, Matrix<S>>> cons;
  const auto a = V.target_ops(), b = M.target_ops();
  for (std::size_t j = 0; j < a.size(); ++j) cons.emplace_back(a[j], b[j]);
  return intertwiner_space<S>(cons, M.dim(), V.dim());
}

// Hom_{R_l}(V, M): f(s_l(r) v) = s_l(r) f(v)
template <class S>
Subspace<S> right_hom_carrier(const AlgebroidModule<S>& V, const AlgebroidModule<S>& M) {
  require_same_parent(V, M);
  std::vector<std::pair<Matrix<S>, Matrix<S>>> cons;
  const auto a = V.source_ops(), b = M.source_ops();
  for (std::size_t j = 0; j < a.size(); ++j) cons.emplace_back(a[j], b[j]);
  return intertwiner_space<S>(cons, M.dim(), V.dim());
}

namespace detail {

template <class S>
AlgebroidModule<S> restricted_hom(const AlgebroidModule<S>& V, const AlgebroidModule<S>& M,
                                  const Subspace<S>& carrier, bool left, const char* what) {
  const auto& H = V.algebra();
  const Index n = H.dim();
  const auto& delta = H.data().delta_r;
  std::vector<Matrix<S>> act;
  for (Index h = 0; h < n; ++h) {
    Matrix<S> a = Matrix<S>::Constant(V.dim() * M.dim(), V.dim() * M.dim(), H.scalar(0));
    for (Index I = 0; I < n * n; ++I) {
      const S& c = delta(I, h);
      if (is_zero(c)) continue;
      const Index p = I / n, q = I % n;
      if (left)
        a += c * kron<S>(M.action(p), Matrix<S>(V.act(H.antipode(H.basis(q))).transpose()));
      else
        a += c * kron<S>(M.action(q), Matrix<S>(V.act(H.antipode_inv(H.basis(p))).transpose()));
    }
    const Matrix<S> image = a * carrier.basis();
    for (Index j = 0; j < image.cols(); ++j)
      if (!carrier.contains(image.col(j)))
        throw IllDefined(std::string(what) + ": action leaves the base-linear maps", {h, j});
    act.push_back(carrier.coordinates(image));
  }
  return AlgebroidModule<S>(V.parent(), std::move(act));
}

}  // namespace detail

// h . phi = h^1 phi(S(h^2) -)
template <class S>
AlgebroidModule<S> left_hom(const AlgebroidModule<S>& V, const AlgebroidModule<S>& M) {
  return detail::restricted_hom(V, M, left_hom_carrier(V, M), true, "left_hom");
}

// h . phi = h^2 phi(S^{-1}(h^1) -)
template <class S>
AlgebroidModule<S> right_hom(const AlgebroidModule<S>& V, const AlgebroidModule<S>& M) {
  return detail::restricted_hom(V, M, right_hom_carrier(V, M), false, "right_hom");
}

template <class S>
Matrix<S> eval_left(const AlgebroidModule<S>& V, const AlgebroidModule<S>& M) {
  const auto carrier = left_hom_carrier(V, M);
  const auto hom = left_hom(V, M);
  const auto rel = tensor_relations(hom, V);
  const S one = V.algebra().scalar(1);
  return detail::plain_eval_left<S>(V.dim(), M.dim(), one) * kron<S>(carrier.basis(), V.identity()) *
         rel.section.lift;
}

template <class S>
Matrix<S> eval_right(const AlgebroidModule<S>& V, const AlgebroidModule<S>& M) {
  const auto carrier = right_hom_carrier(V, M);
  const auto hom = right_hom(V, M);
  const auto rel = tensor_relations(V, hom);
  const S one = V.algebra().scalar(1);
  return detail::plain_eval_right<S>(V.dim(), M.dim(), one) * kron<S>(V.identity(), carrier.basis()) *
         rel.section.lift;
}

template <class S>
bool is_intertwiner(const AlgebroidModule<S>& source, const AlgebroidModule<S>& target, const Matrix<S>& f) {
  if (f.rows() != target.dim() || f.cols() != source.dim()) return false;
  for (Index i = 0; i < source.algebra().dim(); ++i)
    if (first_difference<S>(Matrix<S>(target.action(i) * f), Matrix<S>(f * source.action(i)))) return false;
  return true;
}

template <class S>
Subspace<S> hom_module_morphisms(const AlgebroidModule<S>& V, const AlgebroidModule<S>& W) {
  require_same_parent(V, W);
  std::vector<std::pair<Matrix<S>, Matrix<S>>> cons;
  for (Index i = 0; i < V.algebra().dim(); ++i) cons.emplace_back(V.action(i), W.action(i));
  return intertwiner_space<S>(cons, W.dim(), V.dim());
}

namespace detail {

template <class S>
Matrix<S> carrier_coordinates(const Subspace<S>& carrier, const Matrix<S>& g, const char* what) {
  for (Index j = 0; j < g.cols(); ++j)
    if (!carrier.contains(g.col(j)))
      throw IllDefined(std::string(what) + ": curried map is not base-linear", {j});
  return carrier.coordinates(g);
}

}  // namespace detail

// f (x) -> (m -> f(m (x) -))
template <class S>
Matrix<S> zeta_l(const AlgebroidModule<S>& M, const AlgebroidModule<S>& N, const AlgebroidModule<S>& L,
                 const Matrix<S>& f) {
  const auto mn = tensor_over_base(M, N);
  require_intertwiner(mn.first, L, f, "zeta_l");
  const Matrix<S> fk = f * mn.second.section.projector;
  return detail::carrier_coordinates(left_hom_carrier(N, L), detail::curry_left<S>(fk, M.dim(), N.dim()),
                                     "zeta_l");
}

template <class S>
Matrix<S> eta_l(const AlgebroidModule<S>& M, const AlgebroidModule<S>& N, const AlgebroidModule<S>& L,
                const Matrix<S>& g) {
  const auto hom = left_hom(N, L);
  require_intertwiner(M, hom, g, "eta_l");
  return eval_left(N, L) * tensor_maps(M, N, hom, N, g, N.identity());
}

// f -> (m -> f(- (x) m))
template <class S>
Matrix<S> zeta_r(const AlgebroidModule<S>& N, const AlgebroidModule<S>& M, const AlgebroidModule<S>& L,
                 const Matrix<S>& f) {
  const auto nm = tensor_over_base(N, M);
  require_intertwiner(nm.first, L, f, "zeta_r");
  const Matrix<S> fk = f * nm.second.section.projector;
  return detail::carrier_coordinates(right_hom_carrier(N, L), detail::curry_right<S>(fk, N.dim(), M.dim()),
                                     "zeta_r");
}

template <class S>
Matrix<S> eta_r(const AlgebroidModule<S>& N, const AlgebroidModule<S>& M, const AlgebroidModule<S>& L,
                const Matrix<S>& g) {
  const auto hom = right_hom(N, L);
  require_intertwiner(M, hom, g, "eta_r");
  return eval_right(N, L) * tensor_maps(N, M, N, hom, N.identity(), g);
}

// A (x) A^op with s_l(a) = a(x)1, t_l(b) = 1(x)b, S(a(x)b) = b(x)a.
template <class S>
AlgebroidPtr<S> enveloping_algebroid(const BaseRing<S>& A, std::string name = "A^e") {
  const FieldSpec& f = A.field();
  const Index d = A.dim(), n = d * d;
  const S zero = from_int<S>(0, f), one = from_int<S>(1, f);
  auto idx = [d](Index i, Index j) { return i * d + j; };
  HopfAlgebroidData<S> h;
  h.field = f;
  h.name = std::move(name);
  h.base = A;
  h.dim = n;
  h.mult = Matrix<S>::Constant(n, n * n, zero);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k)
        for (Index l = 0; l < d; ++l) {
          // (a_i (x) a_j)(a_k (x) a_l) = a_i a_k (x) a_l a_j
          Vector<S> prod = kron<S>(Vector<S>(A.mult().col(idx(i, k))), Vector<S>(A.mult().col(idx(l, j))));
          h.mult.col(idx(i, j) * n + idx(k, l)) = prod;
        }
  h.unit = kron<S>(A.unit(), A.unit());
  h.s_l = Matrix<S>(n, d);
  h.t_l = Matrix<S>(n, d);
  for (Index a = 0; a < d; ++a) {
    h.s_l.col(a) = kron<S>(A.basis(a), A.unit());
    h.t_l.col(a) = kron<S>(A.unit(), A.basis(a));
  }
  h.s_r = h.t_l;
  h.t_r = h.s_l;
  h.eps_l = Matrix<S>(d, n);
  h.eps_r = Matrix<S>(d, n);
  h.delta_l = Matrix<S>::Constant(n * n, n, zero);
  h.antipode = Matrix<S>::Constant(n, n, zero);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      h.eps_l.col(idx(i, j)) = A.mult().col(idx(i, j));
      h.eps_r.col(idx(i, j)) = A.mult().col(idx(j, i));
      h.delta_l.col(idx(i, j)) = kron<S>(Vector<S>(h.s_l.col(i)), Vector<S>(h.t_l.col(j)));
      h.antipode(idx(j, i), idx(i, j)) = one;
    }
  h.delta_r = h.delta_l;
  h.antipode_inv = h.antipode;
  return make_algebroid(std::move(h));
}

// A Hopf algebra over the base field k.
template <class S>
AlgebroidPtr<S> algebroid_from_hopf(const QuasiHopfAlgebra<S>& H) {
  if (!H.is_hopf()) throw NotHopf("algebroid_from_hopf: associator data is not trivial");
  const auto& q = H.data();
  HopfAlgebroidData<S> h;
  h.field = q.field;
  h.name = q.name;
  h.base = base_field<S>(q.field);
  h.dim = q.dim;
  h.mult = q.mult;
  h.unit = q.unit;
  h.s_l = Matrix<S>(q.unit);
  h.t_l = h.s_l;
  h.s_r = h.s_l;
  h.t_r = h.s_l;
  h.delta_l = q.comult;
  h.delta_r = q.comult;
  h.eps_l = Matrix<S>(q.counit.transpose());
  h.eps_r = h.eps_l;
  h.antipode = q.antipode;
  h.antipode_inv = q.antipode_inv;
  return make_algebroid(std::move(h));
}

// The same module viewed over the algebroid of a Hopf algebra.
template <class S>
AlgebroidModule<S> as_algebroid_module(const AlgebroidPtr<S>& H, const HModule<S>& V) {
  return AlgebroidModule<S>(H, V.action());
}

}  // namespace qha
