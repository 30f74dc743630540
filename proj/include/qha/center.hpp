#pragma once

#include "qha/coefficients.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace qha {

class MissingTau : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exact structural key of a module: dimensions and every action entry.
template <class Mod>
std::string module_key(const Mod& V) {
  std::ostringstream os;
  os << V.algebra().name() << '|' << V.dim();
  for (const auto& m : V.action())
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) os << ',' << m(i, j);
  return os.str();
}

template <class Mod>
class CenterElement {
 public:
  using S = ScalarOf<Mod>;

  explicit CenterElement(Contramodule<Mod> coefficient)
      : coef_(std::move(coefficient)), state_(std::make_shared<State>()) {}

  const Contramodule<Mod>& coefficient() const { return coef_; }
  const Mod& module() const { return coef_.carrier(); }

  // tau_V in hom-carrier coordinates, computed once per structurally equal V
  Matrix<S> tau(const Mod& V) const {
    const std::string key = module_key(V);
    {
      std::lock_guard<std::mutex> lock(state_->mutex);
      auto it = state_->cache.find(key);
      if (it != state_->cache.end()) return it->second;
    }
    Matrix<S> t = tau_unchecked(coef_, V);
    std::lock_guard<std::mutex> lock(state_->mutex);
    return state_->cache.emplace(key, std::move(t)).first->second;
  }
  Matrix<S> tau_plain(const Mod& V) const { return qha::tau_plain(coef_, V); }
  std::size_t cache_size() const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    return state_->cache.size();
  }

 private:
  struct State {
    std::mutex mutex;
    std::map<std::string, Matrix<S>> cache;
  };
  Contramodule<Mod> coef_;
  std::shared_ptr<State> state_;
};

template <class Mod>
CenterElement<Mod> make_center_element(Contramodule<Mod> c) {
  return CenterElement<Mod>(std::move(c));
}

template <class Mod>
CheckReport check_hexagon(const CenterElement<Mod>& E, const Mod& V, const Mod& W,
                          const std::optional<Matrix<ScalarOf<Mod>>>& tau_vw = std::nullopt) {
  const Mod& M = E.module();
  require_same_parent(V, M);
  require_same_parent(W, M);
  const Mod vw = tensor(V, W);
  const auto t = tau_vw ? *tau_vw : E.tau(vw);
  if (t.rows() != right_hom_carrier(vw, M).dim() || t.cols() != left_hom_carrier(vw, M).dim())
    throw MissingTau("check_hexagon: tau for V (x) W has the wrong shape");
  auto [a, b] = hexagon_paths(V, W, M, E.tau(V), E.tau(W), t);
  CheckReport report;
  detail::compare_once<ScalarOf<Mod>>(report, "hexagon", a, b);
  return report;
}

// tau on the unit object acts as the identity on maps
template <class Mod>
CheckReport check_unitality(const CenterElement<Mod>& E) {
  using S = ScalarOf<Mod>;
  const Mod& M = E.module();
  const Mod U = unit_object(M);
  const Matrix<S> b = left_hom_carrier(U, M).basis();
  CheckReport report;
  detail::compare_once<S>(report, "unitality", Matrix<S>(E.tau_plain(U) * b), b);
  return report;
}

// Id -> Hom(1, M <| M) -> Hom(1, M |> M) -> Hom(M, M) returns Id
template <class Mod>
CheckReport check_stability_central(const CenterElement<Mod>& E) {
  using S = ScalarOf<Mod>;
  const Mod& M = E.module();
  const Mod U = unit_object(M);
  CheckReport report;
  const Matrix<S> g = zeta_l(U, M, M, left_unitor(M));
  const Matrix<S> tg = E.tau(M) * g;
  if (!is_intertwiner(U, right_hom(M, M), tg)) {
    report.fail("stability_central", {}, "tau_M is not a module morphism");
    return report;
  }
  const Matrix<S> back = eta_r(M, U, M, tg) * right_unitor_inverse(M);
  detail::compare_once<S>(report, "stability_central", back, M.identity());
  return report;
}

template <class Mod>
CheckReport check_weakstrong(const CenterElement<Mod>& E, const Mod& V) {
  const auto t = E.tau(V);
  CheckReport report;
  if (t.rows() == t.cols() && rank<ScalarOf<Mod>>(t) == t.rows())
    report.pass("invertible");
  else
    report.fail("invertible", {t.rows(), rank<ScalarOf<Mod>>(t)});
  return report;
}

// tau_V o (- o f) = (- o f) o tau_{V2} for an intertwiner f : V -> V2
template <class Mod>
CheckReport check_naturality(const CenterElement<Mod>& E, const Mod& V, const Mod& V2,
                             const Matrix<ScalarOf<Mod>>& f) {
  using S = ScalarOf<Mod>;
  require_intertwiner(V, V2, f, "check_naturality");
  const Mod& M = E.module();
  const Matrix<S> pre = kron<S>(M.identity(), Matrix<S>(f.transpose()));
  const auto l2 = left_hom_carrier(V2, M), l1 = left_hom_carrier(V, M);
  const auto r2 = right_hom_carrier(V2, M), r1 = right_hom_carrier(V, M);
  const Matrix<S> pl = detail::carrier_coordinates(l1, Matrix<S>(pre * l2.basis()), "check_naturality");
  const Matrix<S> pr = detail::carrier_coordinates(r1, Matrix<S>(pre * r2.basis()), "check_naturality");
  CheckReport report;
  detail::compare_once<S>(report, "naturality", Matrix<S>(E.tau(V) * pl), Matrix<S>(pr * E.tau(V2)));
  return report;
}

// iota : Hom_H(T (x) V, M) -> Hom_H(V (x) T, M) on canonical echelon bases
template <class Mod>
Matrix<ScalarOf<Mod>> contratrace_iota(const CenterElement<Mod>& E, const Mod& T, const Mod& V) {
  using S = ScalarOf<Mod>;
  const Mod& M = E.module();
  const Mod tv = tensor(T, V), vt = tensor(V, T);
  const auto src = hom_module_morphisms(tv, M), dst = hom_module_morphisms(vt, M);
  const Matrix<S> tau = E.tau(V);
  Matrix<S> out(dst.dim(), src.dim());
  for (Index k = 0; k < src.dim(); ++k) {
    const Matrix<S> f = unflatten<S>(Vector<S>(src.basis().col(k)), M.dim(), tv.dim());
    const Matrix<S> g = tau * zeta_l(T, V, M, f);
    const Matrix<S> h = eta_r(V, T, M, g);
    out.col(k) = dst.coordinates(flatten<S>(h));
  }
  return out;
}

}  // namespace qha
