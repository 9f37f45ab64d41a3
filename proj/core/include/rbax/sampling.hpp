#pragma once

#include <cstdint>
#include <random>

#include "rbax/enumerate.hpp"
#include "rbax/free_rba.hpp"
#include "rbax/oracles.hpp"
#include "rbax/trees.hpp"

namespace rbax {

// Deterministic random source. Draws reduce through modulo so the sequence
// of values is reproducible for a given seed everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed ^ 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : next() % n; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::size_t>(hi - lo + 1)));
  }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

struct WordSampleConfig {
  std::size_t max_depth = 2;
  std::size_t max_breadth = 3;
  std::size_t max_letter_parts = 2;  // only the tensor base uses more than 1
  int max_terms = 2;
  std::int64_t coeff_range = 3;
};

Letter random_letter(Rng& rng, const BaseAlgebra& base, const WordSampleConfig& cfg);
Word random_word(Rng& rng, const BaseAlgebra& base, const WordSampleConfig& cfg);
Element random_element(Rng& rng, const FreeRba& ctx, const WordSampleConfig& cfg);
Rational random_coeff(Rng& rng, std::int64_t range);
Rational random_rational(Rng& rng, std::int64_t num_range, std::int64_t den_range);

SequenceRba::Element random_sequence(Rng& rng, const SequenceRba& seq,
                                     std::int64_t range = 5);
PolynomialRba::Element random_polynomial(Rng& rng, const PolynomialRba& poly,
                                         std::size_t max_degree, std::int64_t range = 5);

BTreePtr random_btree(Rng& rng, const Alphabet& alphabet, std::size_t grade);
PTreePtr random_ptree(Rng& rng, const Alphabet& alphabet, std::size_t grade);

}  // namespace rbax
