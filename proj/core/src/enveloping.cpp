#include "rbax/enveloping.hpp"

#include "rbax/errors.hpp"

namespace rbax {

Alphabet basis_alphabet(const FiniteDendriform& d) {
  return Alphabet(d.basis_names());
}

BaseAlgebra dot_base(const FiniteDendriform& d) {
  if (d.kind() != FiniteDendriform::Kind::trialgebra) {
    throw DomainError("dot base requires a three-piece structure");
  }
  Alphabet a = basis_alphabet(d);
  BaseAlgebra::Table table;
  for (std::size_t i = 0; i < d.dim(); ++i) {
    for (std::size_t j = 0; j < d.dim(); ++j) {
      FiniteDendriform::Element coords = d.dot(d.basis(i), d.basis(j));
      BaseElement rhs;
      for (std::size_t k = 0; k < d.dim(); ++k) {
        if (!coords[k].is_zero()) {
          rhs.add_term(Letter(Generator{static_cast<std::uint32_t>(k)}), coords[k]);
        }
      }
      if (!rhs.is_zero()) {
        table[{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}] =
            std::move(rhs);
      }
    }
  }
  return BaseAlgebra::finite_table(std::move(a), std::move(table));
}

FreeRba tri_envelope_context(const FiniteDendriform& d, const Rational& weight,
                             Limits limits) {
  return FreeRba(dot_base(d), weight, limits);
}

FreeRba di_envelope_context(const FiniteDendriform& d, const Rational& weight,
                            Limits limits) {
  if (d.kind() != FiniteDendriform::Kind::dialgebra) {
    throw DomainError("dialgebra envelope context requires a two-piece structure");
  }
  return FreeRba(BaseAlgebra::free_monoid(basis_alphabet(d)), weight, limits);
}

Element embed_coords(const FreeRba& ctx, const FiniteDendriform::Element& coords) {
  Element out;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (!coords[k].is_zero()) {
      out.add_term(Word::letter(Letter(Generator{static_cast<std::uint32_t>(k)})),
                   coords[k]);
    }
  }
  return out;
}

std::pair<Element, Element> ideal_generators(const FiniteDendriform& d,
                                             const FreeRba& ctx, std::size_t i,
                                             std::size_t j) {
  if (ctx.alphabet().size() != d.dim()) {
    throw DomainError("context alphabet does not match the basis");
  }
  Element x = ctx.embed(Letter(Generator{static_cast<std::uint32_t>(i)}));
  Element y = ctx.embed(Letter(Generator{static_cast<std::uint32_t>(j)}));
  bool tri = d.kind() == FiniteDendriform::Kind::trialgebra;
  DendKind left_kind = tri ? DendKind::prec : DendKind::prec_prime;
  Element g1 = embed_coords(ctx, d.prec(d.basis(i), d.basis(j))) -
               induced_op(ctx, left_kind, x, y);
  Element g2 = embed_coords(ctx, d.succ(d.basis(i), d.basis(j))) -
               induced_op(ctx, DendKind::succ, x, y);
  return {std::move(g1), std::move(g2)};
}

}  // namespace rbax
