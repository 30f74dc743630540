#pragma once

#include "qha/linalg.hpp"
#include "qha/report.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qha {

class ParentMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAnIntertwiner : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class S>
bool same_shape_equal(const Matrix<S>& a, const Matrix<S>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && !first_difference<S>(a, b);
}

template <class S>
bool same_shape_equal(const Vector<S>& a, const Vector<S>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

inline Index ipow(Index n, int k) {
  Index r = 1;
  for (int i = 0; i < k; ++i) r *= n;
  return r;
}

inline std::vector<Index> index_digits(Index idx, Index n, int k) {
  std::vector<Index> d(k);
  for (int t = k - 1; t >= 0; --t) {
    d[t] = idx % n;
    idx /= n;
  }
  return d;
}

template <class S>
struct QuasiHopfData {
  FieldSpec field;
  std::string name;
  Index dim = 0;
  Matrix<S> mult;          // n x n^2, column i*n+j holds e_i e_j
  Vector<S> unit;
  Matrix<S> comult;        // n^2 x n, column i holds Delta(e_i)
  Vector<S> counit;
  Matrix<S> antipode;      // column i holds S(e_i)
  Matrix<S> antipode_inv;
  Vector<S> phi, phi_inv;  // length n^3
  Vector<S> alpha, beta;

  bool operator==(const QuasiHopfData& o) const {
    return field == o.field && dim == o.dim && same_shape_equal<S>(mult, o.mult) &&
           same_shape_equal<S>(unit, o.unit) && same_shape_equal<S>(comult, o.comult) &&
           same_shape_equal<S>(counit, o.counit) && same_shape_equal<S>(antipode, o.antipode) &&
           same_shape_equal<S>(antipode_inv, o.antipode_inv) && same_shape_equal<S>(phi, o.phi) &&
           same_shape_equal<S>(phi_inv, o.phi_inv) && same_shape_equal<S>(alpha, o.alpha) &&
           same_shape_equal<S>(beta, o.beta);
  }
};

template <class S>
class QuasiHopfAlgebra {
 public:
  using Scalar = S;

  explicit QuasiHopfAlgebra(QuasiHopfData<S> data) : d_(std::move(data)) {
    if (!FieldOps<S>::accepts(d_.field)) throw FieldError("scalar type does not match field");
    const Index n = d_.dim;
    if (n <= 0) throw DimensionError("dim: algebra dimension must be positive");
    auto need = [](bool ok, const char* field) {
      if (!ok) throw DimensionError(std::string(field) + ": dimension mismatch");
    };
    need(d_.mult.rows() == n && d_.mult.cols() == n * n, "mult");
    need(d_.unit.size() == n, "unit");
    need(d_.comult.rows() == n * n && d_.comult.cols() == n, "comult");
    need(d_.counit.size() == n, "counit");
    need(d_.antipode.rows() == n && d_.antipode.cols() == n, "antipode");
    need(d_.antipode_inv.rows() == n && d_.antipode_inv.cols() == n, "antipode_inv");
    need(d_.phi.size() == n * n * n, "phi");
    need(d_.phi_inv.size() == n * n * n, "phi_inv");
    need(d_.alpha.size() == n, "alpha");
    need(d_.beta.size() == n, "beta");
    products_.resize(n * n);
    for (Index c = 0; c < n * n; ++c)
      for (Index k = 0; k < n; ++k)
        if (!is_zero(d_.mult(k, c))) products_[c].emplace_back(k, d_.mult(k, c));
    left_.resize(n);
    for (Index i = 0; i < n; ++i) {
      left_[i] = Matrix<S>::Zero(n, n);
      for (Index j = 0; j < n; ++j) left_[i].col(j) = d_.mult.col(i * n + j);
    }
  }

  const QuasiHopfData<S>& data() const { return d_; }
  Index dim() const { return d_.dim; }
  const FieldSpec& field() const { return d_.field; }
  const std::string& name() const { return d_.name; }
  S scalar(long long v) const { return from_int<S>(v, d_.field); }

  Vector<S> basis(Index i) const {
    Vector<S> e = Vector<S>::Constant(dim(), scalar(0));
    e(i) = scalar(1);
    return e;
  }
  const Vector<S>& unit() const { return d_.unit; }
  const Vector<S>& phi() const { return d_.phi; }
  const Vector<S>& phi_inv() const { return d_.phi_inv; }
  const Vector<S>& alpha() const { return d_.alpha; }
  const Vector<S>& beta() const { return d_.beta; }
  const Matrix<S>& comult_matrix() const { return d_.comult; }
  const Matrix<S>& antipode_matrix() const { return d_.antipode; }
  const Matrix<S>& antipode_inv_matrix() const { return d_.antipode_inv; }

  const Matrix<S>& left_mult(Index i) const { return left_[i]; }
  Matrix<S> left_mult(const Vector<S>& x) const {
    Matrix<S> m = Matrix<S>::Constant(dim(), dim(), scalar(0));
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(x(i))) m += x(i) * left_[i];
    return m;
  }
  Matrix<S> right_mult(const Vector<S>& x) const {
    Matrix<S> m(dim(), dim());
    for (Index j = 0; j < dim(); ++j) m.col(j) = left_mult(basis(j)) * x;
    return m;
  }
  Vector<S> multiply(const Vector<S>& x, const Vector<S>& y) const { return left_mult(x) * y; }
  Vector<S> multiply(std::initializer_list<Vector<S>> xs) const {
    Vector<S> acc = unit();
    for (const auto& x : xs) acc = multiply(acc, x);
    return acc;
  }
  Vector<S> comultiply(const Vector<S>& x) const { return d_.comult * x; }
  S counit(const Vector<S>& x) const {
    S s = scalar(0);
    for (Index i = 0; i < dim(); ++i)
      if (!is_zero(x(i))) s += d_.counit(i) * x(i);
    return s;
  }
  Vector<S> antipode(const Vector<S>& x) const { return d_.antipode * x; }
  Vector<S> antipode_inv(const Vector<S>& x) const { return d_.antipode_inv * x; }

  bool is_hopf() const {
    Vector<S> u3 = tensor_unit(3);
    return same_shape_equal<S>(d_.phi, u3) && same_shape_equal<S>(d_.phi_inv, u3) &&
           same_shape_equal<S>(d_.alpha, d_.unit) && same_shape_equal<S>(d_.beta, d_.unit);
  }

  // Elements of the k-fold tensor power, flattened with the left factor major.
  Vector<S> tensor_unit(int k) const {
    Vector<S> out = Vector<S>::Constant(1, scalar(1));
    for (int t = 0; t < k; ++t) out = kron<S>(out, d_.unit);
    return out;
  }

  Vector<S> tensor_multiply(const Vector<S>& a, const Vector<S>& b, int k) const {
    const Index n = dim(), total = ipow(n, k);
    if (a.size() != total || b.size() != total) throw DimensionError("tensor_multiply: length");
    Vector<S> out = Vector<S>::Constant(total, scalar(0));
    std::vector<std::pair<Index, std::vector<Index>>> bnz;
    for (Index J = 0; J < total; ++J)
      if (!is_zero(b(J))) bnz.emplace_back(J, index_digits(J, n, k));
    std::vector<std::pair<Index, S>> terms, next;
    for (Index I = 0; I < total; ++I) {
      if (is_zero(a(I))) continue;
      auto di = index_digits(I, n, k);
      for (const auto& [J, dj] : bnz) {
        terms.assign(1, {0, a(I) * b(J)});
        for (int t = 0; t < k && !terms.empty(); ++t) {
          next.clear();
          for (const auto& [idx, c] : terms)
            for (const auto& [kk, m] : products_[di[t] * n + dj[t]]) next.emplace_back(idx * n + kk, c * m);
          terms.swap(next);
        }
        for (const auto& [idx, c] : terms) out(idx) += c;
      }
    }
    return out;
  }

  // Apply a linear map H -> H^{(m)} (matrix with n^m rows) to one leg.
  Vector<S> apply_on_leg(const Vector<S>& x, int k, int leg, const Matrix<S>& map) const {
    const Index n = dim();
    if (map.cols() != n || leg < 0 || leg >= k) throw DimensionError("apply_on_leg: shape");
    const Index rows = map.rows();
    const Index after = ipow(n, k - leg - 1);
    Vector<S> out = Vector<S>::Constant(ipow(n, k - 1) * rows, scalar(0));
    for (Index I = 0; I < x.size(); ++I) {
      if (is_zero(x(I))) continue;
      const Index suffix = I % after;
      const Index d = (I / after) % n;
      const Index prefix = I / (after * n);
      for (Index r = 0; r < rows; ++r) {
        if (is_zero(map(r, d))) continue;
        out((prefix * rows + r) * after + suffix) += x(I) * map(r, d);
      }
    }
    return out;
  }

  Vector<S> delta_on_leg(const Vector<S>& x, int k, int leg) const {
    return apply_on_leg(x, k, leg, d_.comult);
  }
  Vector<S> counit_on_leg(const Vector<S>& x, int k, int leg) const {
    return apply_on_leg(x, k, leg, Matrix<S>(d_.counit.transpose()));
  }

  // Visit nonzero coefficients of an element of H^{(k)} with their digit tuple.
  template <class F>
  void for_each_term(const Vector<S>& x, int k, F&& fn) const {
    for (Index I = 0; I < x.size(); ++I)
      if (!is_zero(x(I))) fn(x(I), index_digits(I, dim(), k));
  }

 private:
  QuasiHopfData<S> d_;
  std::vector<std::vector<std::pair<Index, S>>> products_;
  std::vector<Matrix<S>> left_;
};

template <class S>
using AlgebraPtr = std::shared_ptr<const QuasiHopfAlgebra<S>>;

template <class S>
AlgebraPtr<S> make_algebra(QuasiHopfData<S> data) {
  return std::make_shared<const QuasiHopfAlgebra<S>>(std::move(data));
}

namespace detail {

template <class S>
std::optional<Index> first_vector_difference(const Vector<S>& a, const Vector<S>& b) {
  for (Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return i;
  return std::nullopt;
}

template <class S>
void record(CheckReport& report, const std::string& id, std::optional<std::vector<Index>> witness,
            const std::string& detail = {}) {
  if (witness)
    report.fail(id, std::move(*witness), detail);
  else
    report.pass(id);
}

}  // namespace detail

template <class S>
CheckReport check_quasi_bialgebra(const QuasiHopfAlgebra<S>& H) {
  using detail::first_vector_difference;
  CheckReport report;
  const Index n = H.dim();
  std::optional<std::vector<Index>> w;

  w.reset();
  for (Index i = 0; i < n && !w; ++i)
    for (Index j = 0; j < n && !w; ++j)
      for (Index k = 0; k < n && !w; ++k) {
        auto lhs = H.multiply(H.multiply(H.basis(i), H.basis(j)), H.basis(k));
        auto rhs = H.multiply(H.basis(i), H.multiply(H.basis(j), H.basis(k)));
        if (first_vector_difference<S>(lhs, rhs)) w = std::vector<Index>{i, j, k};
      }
  detail::record<S>(report, "associativity", w);

  w.reset();
  for (Index i = 0; i < n && !w; ++i) {
    if (first_vector_difference<S>(H.multiply(H.unit(), H.basis(i)), H.basis(i)) ||
        first_vector_difference<S>(H.multiply(H.basis(i), H.unit()), H.basis(i)))
      w = std::vector<Index>{i};
  }
  detail::record<S>(report, "unit", w);

  w.reset();
  for (Index i = 0; i < n && !w; ++i)
    for (Index j = 0; j < n && !w; ++j) {
      auto lhs = H.comultiply(H.multiply(H.basis(i), H.basis(j)));
      auto rhs = H.tensor_multiply(H.comultiply(H.basis(i)), H.comultiply(H.basis(j)), 2);
      if (first_vector_difference<S>(lhs, rhs)) w = std::vector<Index>{i, j};
    }
  if (!w && first_vector_difference<S>(H.comultiply(H.unit()), H.tensor_unit(2)))
    w = std::vector<Index>{};
  detail::record<S>(report, "comult_multiplicative", w);

  w.reset();
  for (Index i = 0; i < n && !w; ++i)
    for (Index j = 0; j < n && !w; ++j)
      if (!(H.counit(H.multiply(H.basis(i), H.basis(j))) ==
            H.counit(H.basis(i)) * H.counit(H.basis(j))))
        w = std::vector<Index>{i, j};
  if (!w && !(H.counit(H.unit()) == H.scalar(1))) w = std::vector<Index>{};
  detail::record<S>(report, "counit_multiplicative", w);

  w.reset();
  {
    auto u3 = H.tensor_unit(3);
    auto d1 = first_vector_difference<S>(H.tensor_multiply(H.phi(), H.phi_inv(), 3), u3);
    auto d2 = first_vector_difference<S>(H.tensor_multiply(H.phi_inv(), H.phi(), 3), u3);
    if (d1) w = index_digits(*d1, n, 3);
    else if (d2) w = index_digits(*d2, n, 3);
  }
  detail::record<S>(report, "phi_invertible", w);

  w.reset();
  for (Index a = 0; a < n && !w; ++a) {
    auto da = H.comultiply(H.basis(a));
    auto lhs = H.delta_on_leg(da, 2, 1);
    auto inner = H.delta_on_leg(da, 2, 0);
    auto rhs = H.tensor_multiply(H.tensor_multiply(H.phi(), inner, 3), H.phi_inv(), 3);
    if (auto d = first_vector_difference<S>(lhs, rhs)) {
      auto digits = index_digits(*d, n, 3);
      w = std::vector<Index>{a, digits[0], digits[1], digits[2]};
    }
  }
  detail::record<S>(report, "coassoc", w);

  w.reset();
  {
    auto lhs = H.tensor_multiply(H.delta_on_leg(H.phi(), 3, 2), H.delta_on_leg(H.phi(), 3, 0), 4);
    auto one_phi = kron<S>(H.unit(), H.phi());
    auto phi_one = kron<S>(H.phi(), H.unit());
    auto rhs = H.tensor_multiply(H.tensor_multiply(one_phi, H.delta_on_leg(H.phi(), 3, 1), 4),
                                 phi_one, 4);
    if (auto d = first_vector_difference<S>(lhs, rhs)) w = index_digits(*d, n, 4);
  }
  detail::record<S>(report, "phi", w);

  w.reset();
  for (Index a = 0; a < n && !w; ++a) {
    auto da = H.comultiply(H.basis(a));
    if (first_vector_difference<S>(H.counit_on_leg(da, 2, 0), H.basis(a)) ||
        first_vector_difference<S>(H.counit_on_leg(da, 2, 1), H.basis(a)))
      w = std::vector<Index>{a};
  }
  detail::record<S>(report, "one", w);

  w.reset();
  if (auto d = first_vector_difference<S>(H.counit_on_leg(H.phi(), 3, 1), H.tensor_unit(2)))
    w = index_digits(*d, n, 2);
  detail::record<S>(report, "unass", w);
  return report;
}

template <class S>
CheckReport check_quasi_hopf(const QuasiHopfAlgebra<S>& H) {
  using detail::first_vector_difference;
  CheckReport report;
  const Index n = H.dim();
  const Matrix<S> id = Matrix<S>::Identity(n, n);
  std::optional<std::vector<Index>> w;

  w.reset();
  if (auto d = first_difference<S>(H.antipode_matrix() * H.antipode_inv_matrix(), id))
    w = std::vector<Index>{d->first, d->second};
  else if (auto d2 = first_difference<S>(H.antipode_inv_matrix() * H.antipode_matrix(), id))
    w = std::vector<Index>{d2->first, d2->second};
  detail::record<S>(report, "antipode_inverse", w);

  w.reset();
  for (Index i = 0; i < n && !w; ++i)
    for (Index j = 0; j < n && !w; ++j) {
      auto lhs = H.antipode(H.multiply(H.basis(i), H.basis(j)));
      auto rhs = H.multiply(H.antipode(H.basis(j)), H.antipode(H.basis(i)));
      if (first_vector_difference<S>(lhs, rhs)) w = std::vector<Index>{i, j};
    }
  if (!w && first_vector_difference<S>(H.antipode(H.unit()), H.unit())) w = std::vector<Index>{};
  detail::record<S>(report, "antipode_antimultiplicative", w);

  auto sweep = [&](auto&& lhs_of, auto&& rhs_of) -> std::optional<std::vector<Index>> {
    for (Index a = 0; a < n; ++a)
      if (first_vector_difference<S>(lhs_of(a), rhs_of(a))) return std::vector<Index>{a};
    return std::nullopt;
  };

  w = sweep(
      [&](Index a) {
        Vector<S> acc = Vector<S>::Constant(n, H.scalar(0));
        H.for_each_term(H.comultiply(H.basis(a)), 2, [&](const S& c, const std::vector<Index>& d) {
          acc += c * H.multiply({H.antipode(H.basis(d[0])), H.alpha(), H.basis(d[1])});
        });
        return acc;
      },
      [&](Index a) { return Vector<S>(H.counit(H.basis(a)) * H.alpha()); });
  detail::record<S>(report, "alpha", w);

  w = sweep(
      [&](Index a) {
        Vector<S> acc = Vector<S>::Constant(n, H.scalar(0));
        H.for_each_term(H.comultiply(H.basis(a)), 2, [&](const S& c, const std::vector<Index>& d) {
          acc += c * H.multiply({H.basis(d[0]), H.beta(), H.antipode(H.basis(d[1]))});
        });
        return acc;
      },
      [&](Index a) { return Vector<S>(H.counit(H.basis(a)) * H.beta()); });
  detail::record<S>(report, "beta", w);

  w.reset();
  {
    Vector<S> acc = Vector<S>::Constant(n, H.scalar(0));
    H.for_each_term(H.phi(), 3, [&](const S& c, const std::vector<Index>& d) {
      acc += c * H.multiply({H.basis(d[0]), H.beta(), H.antipode(H.basis(d[1])), H.alpha(),
                             H.basis(d[2])});
    });
    if (auto d = first_vector_difference<S>(acc, H.unit())) w = std::vector<Index>{*d};
  }
  detail::record<S>(report, "evcoev", w);

  w.reset();
  {
    Vector<S> acc = Vector<S>::Constant(n, H.scalar(0));
    H.for_each_term(H.phi_inv(), 3, [&](const S& c, const std::vector<Index>& d) {
      acc += c * H.multiply({H.antipode(H.basis(d[0])), H.alpha(), H.basis(d[1]), H.beta(),
                             H.basis(d[2])});
    });
    if (auto d = first_vector_difference<S>(acc, H.unit())) w = std::vector<Index>{*d};
  }
  detail::record<S>(report, "coevev", w);

  w.reset();
  for (Index a = 0; a < n && !w; ++a)
    if (!(H.counit(H.antipode(H.basis(a))) == H.counit(H.basis(a)))) w = std::vector<Index>{a};
  detail::record<S>(report, "counit_antipode", w);

  w.reset();
  {
    Vector<S> acc = Vector<S>::Constant(n, H.scalar(0));
    H.for_each_term(H.phi_inv(), 3, [&](const S& c, const std::vector<Index>& d) {
      acc += c * H.counit(H.basis(d[0])) *
             H.multiply({H.basis(d[1]), H.beta(), H.antipode(H.basis(d[2]))});
    });
    if (auto d = first_vector_difference<S>(acc, H.beta())) w = std::vector<Index>{*d};
  }
  detail::record<S>(report, "phi_beta", w);
  return report;
}

template <class S>
class HModule {
 public:
  using Scalar = S;
  using Algebra = QuasiHopfAlgebra<S>;

  HModule(AlgebraPtr<S> parent, std::vector<Matrix<S>> action)
      : parent_(std::move(parent)), action_(std::move(action)) {
    if (!parent_) throw std::invalid_argument("module without parent algebra");
    if (static_cast<Index>(action_.size()) != parent_->dim())
      throw DimensionError("action: one matrix per basis element of H expected");
    dim_ = action_.empty() ? 0 : action_[0].rows();
    for (const auto& m : action_)
      if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("action: matrices must be square");
  }

  Index dim() const { return dim_; }
  const Algebra& algebra() const { return *parent_; }
  const AlgebraPtr<S>& parent() const { return parent_; }
  const std::vector<Matrix<S>>& action() const { return action_; }
  const Matrix<S>& action(Index i) const { return action_[i]; }
  Matrix<S> act(const Vector<S>& h) const {
    Matrix<S> m = Matrix<S>::Constant(dim_, dim_, parent_->scalar(0));
    for (Index i = 0; i < h.size(); ++i)
      if (!is_zero(h(i))) m += h(i) * action_[i];
    return m;
  }
  Matrix<S> identity() const {
    return Matrix<S>::Identity(dim_, dim_) * parent_->scalar(1);
  }

 private:
  AlgebraPtr<S> parent_;
  std::vector<Matrix<S>> action_;
  Index dim_ = 0;
};

template <class Parent>
bool same_parent(const std::shared_ptr<const Parent>& a, const std::shared_ptr<const Parent>& b) {
  return a.get() == b.get() || a->data() == b->data();
}

template <class S>
void require_same_parent(const HModule<S>& a, const HModule<S>& b) {
  if (!same_parent(a.parent(), b.parent())) throw ParentMismatch("modules over different algebras");
}

template <class S>
CheckReport check_module(const HModule<S>& V) {
  CheckReport report;
  const auto& H = V.algebra();
  if (auto d = first_difference<S>(V.act(H.unit()), V.identity()))
    report.fail("unital", {d->first, d->second});
  else
    report.pass("unital");
  std::optional<std::vector<Index>> w;
  for (Index i = 0; i < H.dim() && !w; ++i)
    for (Index j = 0; j < H.dim() && !w; ++j)
      if (first_difference<S>(V.act(H.multiply(H.basis(i), H.basis(j))), V.action(i) * V.action(j)))
        w = std::vector<Index>{i, j};
  detail::record<S>(report, "multiplicative", w);
  return report;
}

template <class S>
HModule<S> trivial_module(const AlgebraPtr<S>& H) {
  std::vector<Matrix<S>> act;
  for (Index i = 0; i < H->dim(); ++i)
    act.push_back(Matrix<S>::Constant(1, 1, H->counit(H->basis(i))));
  return HModule<S>(H, std::move(act));
}

template <class S>
HModule<S> regular_module(const AlgebraPtr<S>& H) {
  std::vector<Matrix<S>> act;
  for (Index i = 0; i < H->dim(); ++i) act.push_back(H->left_mult(i));
  return HModule<S>(H, std::move(act));
}

template <class S>
HModule<S> unit_object(const HModule<S>& like) {
  return trivial_module(like.parent());
}

// sum_I x_I rho_1(e_{I_1}) kron ... kron rho_k(e_{I_k}), grouped by the first leg
template <class S>
Matrix<S> act_tensor(const Vector<S>& x, const std::vector<const HModule<S>*>& mods) {
  const auto& H = mods.front()->algebra();
  const int k = static_cast<int>(mods.size());
  if (k == 1) return mods[0]->act(x);
  const Index n = H.dim(), rest = x.size() / n;
  const std::vector<const HModule<S>*> tail(mods.begin() + 1, mods.end());
  Index total = 1;
  for (auto* m : mods) total *= m->dim();
  Matrix<S> out = Matrix<S>::Constant(total, total, H.scalar(0));
  for (Index i = 0; i < n; ++i) {
    const Vector<S> part = x.segment(i * rest, rest);
    bool zero = true;
    for (Index j = 0; j < rest && zero; ++j) zero = is_zero(part(j));
    if (zero) continue;
    out += kron<S>(mods[0]->action(i), act_tensor<S>(part, tail));
  }
  return out;
}

template <class S>
HModule<S> tensor_module(const HModule<S>& V, const HModule<S>& W) {
  require_same_parent(V, W);
  const auto& H = V.algebra();
  std::vector<Matrix<S>> act;
  for (Index i = 0; i < H.dim(); ++i) act.push_back(act_tensor<S>(H.comultiply(H.basis(i)), {&V, &W}));
  return HModule<S>(V.parent(), std::move(act));
}

template <class S>
HModule<S> tensor(const HModule<S>& V, const HModule<S>& W) {
  return tensor_module(V, W);
}

template <class S>
Matrix<S> tensor_maps(const HModule<S>&, const HModule<S>&, const HModule<S>&, const HModule<S>&,
                      const Matrix<S>& f, const Matrix<S>& g) {
  return kron<S>(f, g);
}

template <class S>
Matrix<S> associator(const HModule<S>& V, const HModule<S>& W, const HModule<S>& U) {
  require_same_parent(V, W);
  require_same_parent(V, U);
  return act_tensor<S>(V.algebra().phi(), {&V, &W, &U});
}

template <class S>
Matrix<S> associator_inverse(const HModule<S>& V, const HModule<S>& W, const HModule<S>& U) {
  require_same_parent(V, W);
  require_same_parent(V, U);
  return act_tensor<S>(V.algebra().phi_inv(), {&V, &W, &U});
}

template <class S>
Matrix<S> left_unitor(const HModule<S>& V) { return V.identity(); }
template <class S>
Matrix<S> left_unitor_inverse(const HModule<S>& V) { return V.identity(); }
template <class S>
Matrix<S> right_unitor(const HModule<S>& V) { return V.identity(); }
template <class S>
Matrix<S> right_unitor_inverse(const HModule<S>& V) { return V.identity(); }

template <class S>
HModule<S> left_hom(const HModule<S>& V, const HModule<S>& M) {
  require_same_parent(V, M);
  const auto& H = V.algebra();
  std::vector<Matrix<S>> act;
  for (Index i = 0; i < H.dim(); ++i) {
    Matrix<S> a = Matrix<S>::Constant(V.dim() * M.dim(), V.dim() * M.dim(), H.scalar(0));
    H.for_each_term(H.comultiply(H.basis(i)), 2, [&](const S& c, const std::vector<Index>& d) {
      Matrix<S> s = V.act(H.antipode(H.basis(d[1])));
      a += c * kron<S>(M.action(d[0]), Matrix<S>(s.transpose()));
    });
    act.push_back(std::move(a));
  }
  return HModule<S>(V.parent(), std::move(act));
}

template <class S>
HModule<S> right_hom(const HModule<S>& V, const HModule<S>& M) {
  require_same_parent(V, M);
  const auto& H = V.algebra();
  std::vector<Matrix<S>> act;
  for (Index i = 0; i < H.dim(); ++i) {
    Matrix<S> a = Matrix<S>::Constant(V.dim() * M.dim(), V.dim() * M.dim(), H.scalar(0));
    H.for_each_term(H.comultiply(H.basis(i)), 2, [&](const S& c, const std::vector<Index>& d) {
      Matrix<S> s = V.act(H.antipode_inv(H.basis(d[0])));
      a += c * kron<S>(M.action(d[1]), Matrix<S>(s.transpose()));
    });
    act.push_back(std::move(a));
  }
  return HModule<S>(V.parent(), std::move(act));
}

template <class S>
Subspace<S> left_hom_carrier(const HModule<S>& V, const HModule<S>& M) {
  return Subspace<S>::full(V.dim() * M.dim());
}

template <class S>
Subspace<S> right_hom_carrier(const HModule<S>& V, const HModule<S>& M) {
  return Subspace<S>::full(V.dim() * M.dim());
}

namespace detail {

// phi (x) v -> phi(v) on Hom_k(V,M) (x) V
template <class S>
Matrix<S> plain_eval_left(Index dv, Index dm, const S& one) {
  Matrix<S> e = Matrix<S>::Constant(dm, dm * dv * dv, one - one);
  for (Index a = 0; a < dm; ++a)
    for (Index b = 0; b < dv; ++b) e(a, (a * dv + b) * dv + b) = one;
  return e;
}

// v (x) phi -> phi(v) on V (x) Hom_k(V,M)
template <class S>
Matrix<S> plain_eval_right(Index dv, Index dm, const S& one) {
  Matrix<S> e = Matrix<S>::Constant(dm, dv * dm * dv, one - one);
  for (Index a = 0; a < dm; ++a)
    for (Index b = 0; b < dv; ++b) e(a, b * (dm * dv) + a * dv + b) = one;
  return e;
}

}  // namespace detail

template <class S>
Matrix<S> eval_left(const HModule<S>& V, const HModule<S>& M) {
  require_same_parent(V, M);
  const auto& H = V.algebra();
  const Index dv = V.dim(), dm = M.dim();
  // phi (x) v -> X phi(S(Y) alpha Z v): column (a dv + b) dv + c gets rho(X)(., a) x(b, c)
  Matrix<S> ev = Matrix<S>::Constant(dm, dv * dm * dv, H.scalar(0));
  H.for_each_term(H.phi(), 3, [&](const S& c, const std::vector<Index>& d) {
    const Matrix<S> x = V.act(H.multiply({H.antipode(H.basis(d[1])), H.alpha(), H.basis(d[2])}));
    const Matrix<S> rho = c * M.action(d[0]);
    for (Index a = 0; a < dm; ++a)
      for (Index b = 0; b < dv; ++b)
        for (Index k = 0; k < dv; ++k) {
          if (is_zero(x(b, k))) continue;
          ev.col((a * dv + b) * dv + k) += rho.col(a) * x(b, k);
        }
  });
  return ev;
}

template <class S>
Matrix<S> eval_right(const HModule<S>& V, const HModule<S>& M) {
  require_same_parent(V, M);
  const auto& H = V.algebra();
  const Index dv = V.dim(), dm = M.dim();
  // v (x) phi -> R phi(S^{-1}(Q) S^{-1}(alpha) P v): column k (dm dv) + a dv + b gets rho(R)(., a) x(b, k)
  Matrix<S> ev = Matrix<S>::Constant(dm, dv * dm * dv, H.scalar(0));
  H.for_each_term(H.phi_inv(), 3, [&](const S& c, const std::vector<Index>& d) {
    const Matrix<S> x = V.act(H.multiply({H.antipode_inv(H.basis(d[1])), H.antipode_inv(H.alpha()),
                                          H.basis(d[0])}));
    const Matrix<S> rho = c * M.action(d[2]);
    for (Index k = 0; k < dv; ++k)
      for (Index a = 0; a < dm; ++a)
        for (Index b = 0; b < dv; ++b) {
          if (is_zero(x(b, k))) continue;
          ev.col(k * dm * dv + a * dv + b) += rho.col(a) * x(b, k);
        }
  });
  return ev;
}

template <class S>
bool is_intertwiner(const HModule<S>& source, const HModule<S>& target, const Matrix<S>& f) {
  if (f.rows() != target.dim() || f.cols() != source.dim()) return false;
  for (Index i = 0; i < source.algebra().dim(); ++i)
    if (first_difference<S>(Matrix<S>(target.action(i) * f), Matrix<S>(f * source.action(i))))
      return false;
  return true;
}

template <class Mod>
void require_intertwiner(const Mod& source, const Mod& target, const Matrix<typename Mod::Scalar>& f,
                         const char* what) {
  if (!is_intertwiner(source, target, f))
    throw NotAnIntertwiner(std::string(what) + ": input is not a module morphism");
}

template <class S>
Subspace<S> hom_module_morphisms(const HModule<S>& V, const HModule<S>& W) {
  require_same_parent(V, W);
  std::vector<std::pair<Matrix<S>, Matrix<S>>> cons;
  for (Index i = 0; i < V.algebra().dim(); ++i) cons.emplace_back(V.action(i), W.action(i));
  return intertwiner_space<S>(cons, W.dim(), V.dim());
}

namespace detail {

// f : dl x (dm*dn) with index m*dn+n  ->  g : (dl*dn) x dm
template <class S>
Matrix<S> curry_left(const Matrix<S>& f, Index dm, Index dn) {
  const Index dl = f.rows();
  Matrix<S> g(dl * dn, dm);
  for (Index l = 0; l < dl; ++l)
    for (Index m = 0; m < dm; ++m)
      for (Index n = 0; n < dn; ++n) g(l * dn + n, m) = f(l, m * dn + n);
  return g;
}

// f : dl x (dn*dm) with index n*dm+m  ->  g : (dl*dn) x dm
template <class S>
Matrix<S> curry_right(const Matrix<S>& f, Index dn, Index dm) {
  const Index dl = f.rows();
  Matrix<S> g(dl * dn, dm);
  for (Index l = 0; l < dl; ++l)
    for (Index m = 0; m < dm; ++m)
      for (Index n = 0; n < dn; ++n) g(l * dn + n, m) = f(l, n * dm + m);
  return g;
}

}  // namespace detail

template <class S>
Matrix<S> zeta_l(const HModule<S>& M, const HModule<S>& N, const HModule<S>& L, const Matrix<S>& f) {
  require_intertwiner(tensor_module(M, N), L, f, "zeta_l");
  const auto& H = M.algebra();
  Matrix<S> acc = Matrix<S>::Constant(L.dim(), M.dim() * N.dim(), H.scalar(0));
  H.for_each_term(H.phi_inv(), 3, [&](const S& c, const std::vector<Index>& d) {
    Vector<S> right = H.multiply({H.basis(d[1]), H.beta(), H.antipode(H.basis(d[2]))});
    acc += c * compose_kron<S>(f, M.action(d[0]), N.act(right));
  });
  return detail::curry_left<S>(acc, M.dim(), N.dim());
}

template <class S>
Matrix<S> eta_l(const HModule<S>& M, const HModule<S>& N, const HModule<S>& L, const Matrix<S>& g) {
  require_intertwiner(M, left_hom(N, L), g, "eta_l");
  return eval_left(N, L) * kron<S>(g, N.identity());
}

template <class S>
Matrix<S> zeta_r(const HModule<S>& N, const HModule<S>& M, const HModule<S>& L, const Matrix<S>& f) {
  require_intertwiner(tensor_module(N, M), L, f, "zeta_r");
  const auto& H = M.algebra();
  Matrix<S> acc = Matrix<S>::Constant(L.dim(), N.dim() * M.dim(), H.scalar(0));
  H.for_each_term(H.phi(), 3, [&](const S& c, const std::vector<Index>& d) {
    Vector<S> left = H.multiply({H.basis(d[1]), H.antipode_inv(H.beta()),
                                 H.antipode_inv(H.basis(d[0]))});
    acc += c * compose_kron<S>(f, N.act(left), M.action(d[2]));
  });
  return detail::curry_right<S>(acc, N.dim(), M.dim());
}

template <class S>
Matrix<S> eta_r(const HModule<S>& N, const HModule<S>& M, const HModule<S>& L, const Matrix<S>& g) {
  require_intertwiner(M, right_hom(N, L), g, "eta_r");
  return eval_right(N, L) * kron<S>(N.identity(), g);
}

}  // namespace qha
