#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rbax/dendriform.hpp"
#include "rbax/finite_dendriform.hpp"
#include "rbax/free_rba.hpp"
#include "rbax/morphism.hpp"

namespace rbax {

// Alphabet with one generator per basis element of the structure.
Alphabet basis_alphabet(const FiniteDendriform& d);

// The dot product of a three-piece structure packaged as a finite-table
// coefficient algebra. Its associativity is one of the validated axioms.
BaseAlgebra dot_base(const FiniteDendriform& d);

// Free algebra the enveloping ideal of a trialgebra lives in: bracketed
// words over (D, dot).
FreeRba tri_envelope_context(const FiniteDendriform& d, const Rational& weight,
                             Limits limits = {});
// For a dialgebra the coefficient algebra is the free monoid on the basis.
FreeRba di_envelope_context(const FiniteDendriform& d, const Rational& weight,
                            Limits limits = {});

// A coordinate vector as a combination of one-letter words.
Element embed_coords(const FreeRba& ctx, const FiniteDendriform::Element& coords);

// The two enveloping-ideal generators attached to a basis pair (i, j).
// Trialgebra, inside tri_envelope_context:
//   g1 = j(x < y) - x [y]          g2 = j(x > y) - [x] y
// Dialgebra, inside di_envelope_context:
//   g1 = j(x < y) - x [y] - w x.y  g2 = j(x > y) - [x] y
// where x, y are the basis letters and j embeds coordinates as letters.
std::pair<Element, Element> ideal_generators(const FiniteDendriform& d,
                                             const FreeRba& ctx, std::size_t i,
                                             std::size_t j);

struct EnvelopeRow {
  std::string pair;
  std::string generator;
  std::string residual;
  bool pass;
};

struct EnvelopeReport {
  bool pass = true;
  std::vector<std::string> failures;  // validation problems, empty when clean
  std::vector<EnvelopeRow> rows;
};

// Checks that the structure's operations are exactly the ones the images
// inherit from the target operator algebra: validates the structure's
// axioms on every basis triple, builds the operator-respecting morphism
// fixed by the images (which checks weights and coefficient-algebra
// relations), then evaluates every ideal generator. A universal-envelope
// factorization exists precisely when all residuals vanish.
template <RotaBaxterAlgebra A>
EnvelopeReport verify_envelope(const FiniteDendriform& d, const FreeRba& ctx,
                               const A& oracle,
                               const std::vector<typename A::Element>& images,
                               std::size_t max_pairs = 0) {
  EnvelopeReport report;
  AxiomReport<FiniteDendriform::Element> axioms = d.validate();
  if (!axioms.pass()) {
    report.pass = false;
    for (const auto& c : axioms.checks) {
      if (!c.pass) {
        report.failures.push_back("axiom failure: " + c.axiom +
                                  ", residual = " + d.str(c.residual));
      }
    }
    return report;
  }
  try {
    RbaMorphism<A> f(ctx, oracle, images);
    std::size_t emitted = 0;
    for (std::size_t i = 0; i < d.dim(); ++i) {
      for (std::size_t j = 0; j < d.dim(); ++j) {
        if (max_pairs != 0 && emitted >= max_pairs) return report;
        auto [g1, g2] = ideal_generators(d, ctx, i, j);
        std::string pair = "(" + d.basis_names()[i] + ", " + d.basis_names()[j] + ")";
        for (const Element* g : {&g1, &g2}) {
          typename A::Element residual = f.apply(*g);
          bool ok = oracle.is_zero(residual);
          if (!ok) report.pass = false;
          report.rows.push_back(EnvelopeRow{pair, render_element(*g, ctx.alphabet()),
                                            oracle.str(residual), ok});
        }
        ++emitted;
      }
    }
  } catch (const DomainError& e) {
    report.pass = false;
    report.failures.push_back(e.what());
  }
  return report;
}

}  // namespace rbax
