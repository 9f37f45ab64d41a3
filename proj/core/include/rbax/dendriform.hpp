#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rbax/algebra_concepts.hpp"
#include "rbax/errors.hpp"

namespace rbax {

// The splittings of an associative product handled by the library.
//   prec       x < y
//   succ       x > y
//   dot        the middle piece of a three-part splitting
//   prec_prime prec + dot, the two-part splitting a three-part one induces
//   star       the recombined associative product
enum class DendKind { prec, succ, dot, prec_prime, star };

// Whether an operation set carries two or three pieces.
enum class DendContext { dialgebra, trialgebra };

std::string to_string(DendKind k);
DendKind parse_dend_kind(std::string_view name);

// The splitting an operator-weighted algebra carries:
//   x < y = x R(y),  x > y = R(x) y,  x . y = w x y.
// The dot piece only exists in the trialgebra reading; asking for it in a
// dialgebra context is an error, while prec_prime folds it into prec.
template <RotaBaxterAlgebra A>
typename A::Element induced_op(const A& alg, DendKind kind,
                               const typename A::Element& a,
                               const typename A::Element& b,
                               DendContext ctx = DendContext::trialgebra) {
  switch (kind) {
    case DendKind::prec:
      return alg.mul(a, alg.rb(b));
    case DendKind::succ:
      return alg.mul(alg.rb(a), b);
    case DendKind::dot:
      if (ctx == DendContext::dialgebra) {
        throw DomainError("dot operation is not part of a dialgebra");
      }
      return alg.scale(alg.weight(), alg.mul(a, b));
    case DendKind::prec_prime:
      return alg.add(alg.mul(a, alg.rb(b)), alg.scale(alg.weight(), alg.mul(a, b)));
    case DendKind::star:
      return alg.add(alg.mul(a, alg.rb(b)),
                     alg.add(alg.mul(alg.rb(a), b),
                             alg.scale(alg.weight(), alg.mul(a, b))));
  }
  throw DomainError("unknown dendriform operation");
}

// A two- or three-piece operation set over some linear space. dot is empty
// for a dialgebra pair.
template <class E>
struct DendOps {
  using Op = std::function<E(const E&, const E&)>;
  Op prec;
  Op succ;
  Op dot;

  bool has_dot() const { return static_cast<bool>(dot); }

  E star(const E& a, const E& b, const auto& space) const {
    E out = space.add(prec(a, b), succ(a, b));
    if (has_dot()) out = space.add(out, dot(a, b));
    return out;
  }
};

// (prec, succ, dot) carried by an operator-weighted algebra.
template <RotaBaxterAlgebra A>
DendOps<typename A::Element> induced_trialgebra_ops(const A& alg) {
  using E = typename A::Element;
  return DendOps<E>{
      [&alg](const E& a, const E& b) { return induced_op(alg, DendKind::prec, a, b); },
      [&alg](const E& a, const E& b) { return induced_op(alg, DendKind::succ, a, b); },
      [&alg](const E& a, const E& b) { return induced_op(alg, DendKind::dot, a, b); }};
}

// (prec, succ) pair; a dialgebra when the weight vanishes.
template <RotaBaxterAlgebra A>
DendOps<typename A::Element> induced_dialgebra_ops(const A& alg) {
  using E = typename A::Element;
  return DendOps<E>{
      [&alg](const E& a, const E& b) { return induced_op(alg, DendKind::prec, a, b); },
      [&alg](const E& a, const E& b) { return induced_op(alg, DendKind::succ, a, b); },
      nullptr};
}

// (prec_prime, succ) pair; a dialgebra for every weight.
template <RotaBaxterAlgebra A>
DendOps<typename A::Element> induced_prime_dialgebra_ops(const A& alg) {
  using E = typename A::Element;
  return DendOps<E>{
      [&alg](const E& a, const E& b) {
        return induced_op(alg, DendKind::prec_prime, a, b);
      },
      [&alg](const E& a, const E& b) { return induced_op(alg, DendKind::succ, a, b); },
      nullptr};
}

template <class E>
struct AxiomCheck {
  std::string axiom;
  E residual;
  bool pass;
};

template <class E>
struct AxiomReport {
  std::vector<AxiomCheck<E>> checks;
  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
  const AxiomCheck<E>* first_failure() const {
    for (const auto& c : checks) {
      if (!c.pass) return &c;
    }
    return nullptr;
  }
};

// The three two-piece axioms evaluated on one triple.
template <LinearSpace M>
AxiomReport<typename M::Element> check_dialgebra(const M& m,
                                                 const DendOps<typename M::Element>& ops,
                                                 const typename M::Element& x,
                                                 const typename M::Element& y,
                                                 const typename M::Element& z) {
  using E = typename M::Element;
  if (ops.has_dot()) {
    throw DomainError("dialgebra check requires a two-piece operation set");
  }
  auto record = [&](std::vector<AxiomCheck<E>>& checks, std::string name, E lhs, E rhs) {
    E residual = sub(m, lhs, rhs);
    bool ok = m.is_zero(residual);
    checks.push_back({std::move(name), std::move(residual), ok});
  };
  AxiomReport<E> report;
  E ystarz = m.add(ops.prec(y, z), ops.succ(y, z));
  E xstary = m.add(ops.prec(x, y), ops.succ(x, y));
  record(report.checks, "(x<y)<z = x<(y<z + y>z)", ops.prec(ops.prec(x, y), z),
         ops.prec(x, ystarz));
  record(report.checks, "(x>y)<z = x>(y<z)", ops.prec(ops.succ(x, y), z),
         ops.succ(x, ops.prec(y, z)));
  record(report.checks, "(x<y + x>y)>z = x>(y>z)", ops.succ(xstary, z),
         ops.succ(x, ops.succ(y, z)));
  return report;
}

// The seven three-piece axioms evaluated on one triple.
template <LinearSpace M>
AxiomReport<typename M::Element> check_trialgebra(
    const M& m, const DendOps<typename M::Element>& ops, const typename M::Element& x,
    const typename M::Element& y, const typename M::Element& z) {
  using E = typename M::Element;
  if (!ops.has_dot()) {
    throw DomainError("trialgebra check requires a three-piece operation set");
  }
  auto star = [&](const E& a, const E& b) { return ops.star(a, b, m); };
  auto record = [&](std::vector<AxiomCheck<E>>& checks, std::string name, E lhs, E rhs) {
    E residual = sub(m, lhs, rhs);
    bool ok = m.is_zero(residual);
    checks.push_back({std::move(name), std::move(residual), ok});
  };
  AxiomReport<E> report;
  record(report.checks, "(x<y)<z = x<(y*z)", ops.prec(ops.prec(x, y), z),
         ops.prec(x, star(y, z)));
  record(report.checks, "(x>y)<z = x>(y<z)", ops.prec(ops.succ(x, y), z),
         ops.succ(x, ops.prec(y, z)));
  record(report.checks, "(x*y)>z = x>(y>z)", ops.succ(star(x, y), z),
         ops.succ(x, ops.succ(y, z)));
  record(report.checks, "(x>y).z = x>(y.z)", ops.dot(ops.succ(x, y), z),
         ops.succ(x, ops.dot(y, z)));
  record(report.checks, "(x<y).z = x.(y>z)", ops.dot(ops.prec(x, y), z),
         ops.dot(x, ops.succ(y, z)));
  record(report.checks, "(x.y)<z = x.(y<z)", ops.prec(ops.dot(x, y), z),
         ops.dot(x, ops.prec(y, z)));
  record(report.checks, "(x.y).z = x.(y.z)", ops.dot(ops.dot(x, y), z),
         ops.dot(x, ops.dot(y, z)));
  return report;
}

// Associativity residual of the recombined product on one triple.
template <LinearSpace M>
typename M::Element star_residual(const M& m, const DendOps<typename M::Element>& ops,
                                  const typename M::Element& x,
                                  const typename M::Element& y,
                                  const typename M::Element& z) {
  auto star = [&](const auto& a, const auto& b) { return ops.star(a, b, m); };
  return sub(m, star(star(x, y), z), star(x, star(y, z)));
}

// Collapses a three-piece operation set to the two-piece one with
// prec' = prec + dot. Optionally spot-checks the three-piece axioms on the
// given sample triples first and refuses degenerate input.
template <LinearSpace M>
DendOps<typename M::Element> to_dialgebra(
    const M& m, const DendOps<typename M::Element>& tri,
    const std::vector<std::array<typename M::Element, 3>>& samples = {}) {
  using E = typename M::Element;
  if (!tri.has_dot()) {
    throw DomainError("to_dialgebra requires a three-piece operation set");
  }
  for (const auto& [x, y, z] : samples) {
    auto report = check_trialgebra(m, tri, x, y, z);
    if (!report.pass()) {
      throw DomainError("three-piece axioms fail on a sample: " +
                        report.first_failure()->axiom);
    }
  }
  DendOps<E> out;
  out.prec = [&m, prec = tri.prec, dot = tri.dot](const E& a, const E& b) {
    return m.add(prec(a, b), dot(a, b));
  };
  out.succ = tri.succ;
  out.dot = nullptr;
  return out;
}

}  // namespace rbax
