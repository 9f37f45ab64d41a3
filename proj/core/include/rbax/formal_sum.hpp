#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "rbax/rational.hpp"

namespace rbax {

// Formal linear combination with exact rational coefficients, kept in
// canonical form: terms sorted by Less, keys unique, no zero coefficients.
template <class Key, class Less>
class FormalSum {
 public:
  using Term = std::pair<Key, Rational>;

  FormalSum() = default;
  explicit FormalSum(std::vector<Term> terms) : terms_(std::move(terms)) {
    canonicalize();
  }

  static FormalSum single(Key k, Rational c = Rational(1)) {
    FormalSum s;
    if (!c.is_zero()) s.terms_.emplace_back(std::move(k), std::move(c));
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  FormalSum& operator+=(const FormalSum& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
      terms_ = o.terms_;
      return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    Less less;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      if (less(terms_[i].first, o.terms_[j].first)) {
        merged.push_back(std::move(terms_[i++]));
      } else if (less(o.terms_[j].first, terms_[i].first)) {
        merged.push_back(o.terms_[j++]);
      } else {
        Rational c = terms_[i].second + o.terms_[j].second;
        if (!c.is_zero()) merged.emplace_back(std::move(terms_[i].first), std::move(c));
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
    for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
    terms_ = std::move(merged);
    return *this;
  }

  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }

  FormalSum operator-() const { return scaled(Rational(-1)); }

  FormalSum& operator-=(const FormalSum& o) { return *this += -o; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }

  FormalSum scaled(const Rational& c) const {
    FormalSum s;
    if (c.is_zero()) return s;
    s.terms_.reserve(terms_.size());
    for (const Term& t : terms_) s.terms_.emplace_back(t.first, t.second * c);
    return s;
  }

  void add_term(Key k, Rational c) {
    *this += single(std::move(k), std::move(c));
  }

  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    Less less;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].second != b.terms_[i].second) return false;
      const Key& ka = a.terms_[i].first;
      const Key& kb = b.terms_[i].first;
      if (less(ka, kb) || less(kb, ka)) return false;
    }
    return true;
  }

 private:
  void canonicalize() {
    Less less;
    std::stable_sort(terms_.begin(), terms_.end(),
                     [&](const Term& a, const Term& b) { return less(a.first, b.first); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!out.empty() && !less(out.back().first, t.first) &&
          !less(t.first, out.back().first)) {
        out.back().second += t.second;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

}  // namespace rbax
