#pragma once

#include "qha/algebroid.hpp"
#include "qha/quasihopf.hpp"

namespace qha {

template <class Mod>
using ScalarOf = typename Mod::Scalar;

// Hom^l(V, X) -> Hom^l(V, Y), phi -> g phi
template <class Mod>
Matrix<ScalarOf<Mod>> postcompose_left(const Mod& V, const Mod& X, const Mod& Y, const Matrix<ScalarOf<Mod>>& g) {
  using S = ScalarOf<Mod>;
  const auto cx = left_hom_carrier(V, X), cy = left_hom_carrier(V, Y);
  const Matrix<S> img = kron<S>(g, V.identity()) * cx.basis();
  return detail::carrier_coordinates(cy, img, "postcompose_left");
}

// Hom^r(V, X) -> Hom^r(V, Y), phi -> g phi
template <class Mod>
Matrix<ScalarOf<Mod>> postcompose_right(const Mod& V, const Mod& X, const Mod& Y, const Matrix<ScalarOf<Mod>>& g) {
  using S = ScalarOf<Mod>;
  const auto cx = right_hom_carrier(V, X), cy = right_hom_carrier(V, Y);
  const Matrix<S> img = kron<S>(g, V.identity()) * cx.basis();
  return detail::carrier_coordinates(cy, img, "postcompose_right");
}

// V <| (W <| M) -> (V (x) W) <| M
template <class Mod>
Matrix<ScalarOf<Mod>> hexagon_iso_left(const Mod& V, const Mod& W, const Mod& M) {
  using S = ScalarOf<Mod>;
  const Mod hwm = left_hom(W, M);
  const Mod T = left_hom(V, hwm);
  const Matrix<S> e1 = eta_l(T, V, hwm, T.identity());
  const Mod tv = tensor(T, V);
  const Matrix<S> e2 = eta_l(tv, W, M, e1);
  const Matrix<S> f = e2 * associator_inverse(T, V, W);
  return zeta_l(T, tensor(V, W), M, f);
}

// V <| (M |> W) -> (V <| M) |> W
template <class Mod>
Matrix<ScalarOf<Mod>> hexagon_iso_middle(const Mod& V, const Mod& W, const Mod& M) {
  using S = ScalarOf<Mod>;
  const Mod hrwm = right_hom(W, M);
  const Mod T = left_hom(V, hrwm);
  const Matrix<S> e1 = eta_l(T, V, hrwm, T.identity());
  const Mod tv = tensor(T, V);
  const Matrix<S> e2 = eta_r(W, tv, M, e1);
  const Matrix<S> f = e2 * associator(W, T, V);
  const Mod wt = tensor(W, T);
  const Matrix<S> g = zeta_l(wt, V, M, f);
  return zeta_r(W, T, left_hom(V, M), g);
}

// M |> (V (x) W) -> (M |> V) |> W
template <class Mod>
Matrix<ScalarOf<Mod>> hexagon_iso_right(const Mod& V, const Mod& W, const Mod& M) {
  using S = ScalarOf<Mod>;
  const Mod vw = tensor(V, W);
  const Mod T = right_hom(vw, M);
  const Matrix<S> e = eta_r(vw, T, M, T.identity());
  const Matrix<S> f = e * associator_inverse(V, W, T);
  const Mod wt = tensor(W, T);
  const Matrix<S> g = zeta_r(V, wt, M, f);
  return zeta_r(W, T, right_hom(V, M), g);
}

// Both composites V <| (W <| M) -> (M |> V) |> W around the hexagon.
template <class Mod>
std::pair<Matrix<ScalarOf<Mod>>, Matrix<ScalarOf<Mod>>> hexagon_paths(const Mod& V, const Mod& W, const Mod& M,
                                                                        const Matrix<ScalarOf<Mod>>& tau_v,
                                                                        const Matrix<ScalarOf<Mod>>& tau_w,
                                                                        const Matrix<ScalarOf<Mod>>& tau_vw) {
  using S = ScalarOf<Mod>;
  const Matrix<S> a = hexagon_iso_right(V, W, M) * tau_vw * hexagon_iso_left(V, W, M);
  const Matrix<S> b = postcompose_right(W, left_hom(V, M), right_hom(V, M), tau_v) * hexagon_iso_middle(V, W, M) *
                      postcompose_left(V, left_hom(W, M), right_hom(W, M), tau_w);
  return {a, b};
}

}  // namespace qha
