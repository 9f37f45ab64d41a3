#include "rbax/sampling.hpp"

#include "rbax/errors.hpp"

namespace rbax {

Rational random_coeff(Rng& rng, std::int64_t range) {
  std::int64_t n = rng.range(1, range);
  return Rational(rng.chance(1, 2) ? n : -n);
}

Rational random_rational(Rng& rng, std::int64_t num_range, std::int64_t den_range) {
  return Rational(rng.range(-num_range, num_range), rng.range(1, den_range));
}

Letter random_letter(Rng& rng, const BaseAlgebra& base, const WordSampleConfig& cfg) {
  std::size_t parts = 1;
  if (base.kind() == BaseKind::free_monoid && cfg.max_letter_parts > 1) {
    parts = 1 + rng.below(cfg.max_letter_parts);
  }
  std::vector<Generator> gens;
  gens.reserve(parts);
  for (std::size_t i = 0; i < parts; ++i) {
    gens.push_back(Generator{static_cast<std::uint32_t>(rng.below(base.alphabet().size()))});
  }
  return Letter(std::move(gens));
}

namespace {

Word random_word_depth(Rng& rng, const BaseAlgebra& base, const WordSampleConfig& cfg,
                       std::size_t depth_left) {
  std::size_t breadth = 1 + rng.below(cfg.max_breadth);
  bool letter_first = depth_left == 0 || rng.chance(1, 2);
  if (depth_left == 0) breadth = 1;
  std::vector<Factor> factors;
  factors.reserve(breadth);
  bool letter_next = letter_first;
  for (std::size_t i = 0; i < breadth; ++i) {
    if (letter_next) {
      factors.emplace_back(random_letter(rng, base, cfg));
    } else {
      factors.emplace_back(random_word_depth(rng, base, cfg, depth_left - 1));
    }
    letter_next = !letter_next;
  }
  return Word(std::move(factors));
}

}  // namespace

Word random_word(Rng& rng, const BaseAlgebra& base, const WordSampleConfig& cfg) {
  if (base.alphabet().empty()) throw DomainError("cannot sample over an empty alphabet");
  return random_word_depth(rng, base, cfg, cfg.max_depth);
}

Element random_element(Rng& rng, const FreeRba& ctx, const WordSampleConfig& cfg) {
  int terms = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(cfg.max_terms)));
  Element out;
  for (int i = 0; i < terms; ++i) {
    out.add_term(random_word(rng, ctx.base(), cfg), random_coeff(rng, cfg.coeff_range));
  }
  return out;
}

SequenceRba::Element random_sequence(Rng& rng, const SequenceRba& seq,
                                     std::int64_t range) {
  SequenceRba::Element out(seq.length());
  for (std::size_t i = 0; i < seq.length(); ++i) {
    out[i] = random_rational(rng, range, 3);
  }
  return out;
}

PolynomialRba::Element random_polynomial(Rng& rng, const PolynomialRba& poly,
                                         std::size_t max_degree, std::int64_t range) {
  PolynomialRba::Element out;
  for (std::size_t i = 0; i <= max_degree; ++i) {
    out = poly.add(out, poly.scale(random_rational(rng, range, 3), poly.monomial(i)));
  }
  return out;
}

BTreePtr random_btree(Rng& rng, const Alphabet& alphabet, std::size_t grade) {
  if (grade == 0) return BinaryTree::leaf();
  std::size_t left = rng.below(grade);
  Generator dec{static_cast<std::uint32_t>(rng.below(alphabet.size()))};
  return BinaryTree::graft(random_btree(rng, alphabet, left), dec,
                           random_btree(rng, alphabet, grade - 1 - left));
}

PTreePtr random_ptree(Rng& rng, const Alphabet& alphabet, std::size_t grade) {
  if (grade == 0) return PlanarTree::leaf();
  // split grade + 1 leaves into parts
  std::size_t leaves = grade + 1;
  std::size_t arity = 2 + rng.below(leaves - 1);
  std::vector<std::size_t> parts(arity, 1);
  for (std::size_t extra = leaves - arity; extra > 0; --extra) {
    parts[rng.below(arity)] += 1;
  }
  std::vector<PTreePtr> children;
  children.reserve(arity);
  for (std::size_t p : parts) {
    children.push_back(random_ptree(rng, alphabet, p - 1));
  }
  std::vector<Generator> decorations;
  decorations.reserve(arity - 1);
  for (std::size_t i = 0; i + 1 < arity; ++i) {
    decorations.push_back(Generator{static_cast<std::uint32_t>(rng.below(alphabet.size()))});
  }
  return PlanarTree::graft(std::move(children), std::move(decorations));
}

}  // namespace rbax
