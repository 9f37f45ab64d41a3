#pragma once

#include <concepts>

#include "rbax/rational.hpp"

namespace rbax {

// Module over the rationals with an emptiness test, expressed operationally:
// the carrier object owns the operations, elements are plain values.
template <class M>
concept LinearSpace = requires(const M& m, const typename M::Element& u,
                               const typename M::Element& v, const Rational& c) {
  typename M::Element;
  { m.zero() } -> std::convertible_to<typename M::Element>;
  { m.add(u, v) } -> std::convertible_to<typename M::Element>;
  { m.scale(c, u) } -> std::convertible_to<typename M::Element>;
  { m.is_zero(u) } -> std::convertible_to<bool>;
};

// Associative algebra with a weighted Rota-Baxter operator.
template <class A>
concept RotaBaxterAlgebra =
    LinearSpace<A> && requires(const A& a, const typename A::Element& u,
                               const typename A::Element& v) {
      { a.mul(u, v) } -> std::convertible_to<typename A::Element>;
      { a.rb(u) } -> std::convertible_to<typename A::Element>;
      { a.weight() } -> std::convertible_to<Rational>;
    };

template <LinearSpace M>
typename M::Element sub(const M& m, const typename M::Element& a,
                        const typename M::Element& b) {
  return m.add(a, m.scale(Rational(-1), b));
}

template <LinearSpace M>
bool equal(const M& m, const typename M::Element& a, const typename M::Element& b) {
  return m.is_zero(sub(m, a, b));
}

// Residual of the defining operator identity on one pair:
// R(x)R(y) - R(R(x)y) - R(xR(y)) - w R(xy).
template <RotaBaxterAlgebra A>
typename A::Element rb_residual(const A& alg, const typename A::Element& x,
                                const typename A::Element& y) {
  typename A::Element rx = alg.rb(x);
  typename A::Element ry = alg.rb(y);
  typename A::Element lhs = alg.mul(rx, ry);
  typename A::Element inside = alg.add(alg.mul(rx, y), alg.mul(x, ry));
  inside = alg.add(inside, alg.scale(alg.weight(), alg.mul(x, y)));
  return sub(alg, lhs, alg.rb(inside));
}

}  // namespace rbax
