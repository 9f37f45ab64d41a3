#include "rbax/oracles.hpp"

#include "rbax/errors.hpp"

namespace rbax {

SequenceRba::SequenceRba(std::size_t length, Rational weight)
    : length_(length), weight_(std::move(weight)) {
  if (length_ == 0) throw DomainError("sequence length must be positive");
}

void SequenceRba::check(const Element& a) const {
  if (a.size() != length_) throw DomainError("sequence length mismatch");
}

SequenceRba::Element SequenceRba::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out(length_);
  for (std::size_t i = 0; i < length_; ++i) out[i] = a[i] + b[i];
  return out;
}

SequenceRba::Element SequenceRba::scale(const Rational& c, const Element& a) const {
  check(a);
  Element out(length_);
  for (std::size_t i = 0; i < length_; ++i) out[i] = c * a[i];
  return out;
}

bool SequenceRba::is_zero(const Element& a) const {
  check(a);
  for (const Rational& r : a) {
    if (!r.is_zero()) return false;
  }
  return true;
}

SequenceRba::Element SequenceRba::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out(length_);
  for (std::size_t i = 0; i < length_; ++i) out[i] = a[i] * b[i];
  return out;
}

SequenceRba::Element SequenceRba::rb(const Element& a) const {
  check(a);
  Element out(length_, Rational(0));
  Rational acc(0);
  for (std::size_t i = 0; i < length_; ++i) {
    out[i] = weight_ * acc;
    acc += a[i];
  }
  return out;
}

SequenceRba::Element SequenceRba::basis(std::size_t i) const {
  if (i >= length_) throw DomainError("sequence basis index out of range");
  Element out(length_, Rational(0));
  out[i] = Rational(1);
  return out;
}

std::string SequenceRba::str(const Element& a) const {
  check(a);
  std::string out = "(";
  for (std::size_t i = 0; i < length_; ++i) {
    if (i > 0) out += ", ";
    out += a[i].str();
  }
  out += ")";
  return out;
}

PolynomialRba::PolynomialRba(std::optional<std::size_t> max_degree)
    : max_degree_(max_degree) {}

PolynomialRba::Element PolynomialRba::trim(Element a) const {
  if (max_degree_ && a.size() > *max_degree_ + 1) a.resize(*max_degree_ + 1);
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

PolynomialRba::Element PolynomialRba::add(const Element& a, const Element& b) const {
  Element out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(std::move(out));
}

PolynomialRba::Element PolynomialRba::scale(const Rational& c, const Element& a) const {
  Element out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return trim(std::move(out));
}

PolynomialRba::Element PolynomialRba::mul(const Element& a, const Element& b) const {
  if (a.empty() || b.empty()) return {};
  Element out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return trim(std::move(out));
}

PolynomialRba::Element PolynomialRba::rb(const Element& a) const {
  if (a.empty()) return {};
  Element out(a.size() + 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i + 1] = a[i] / Rational(static_cast<std::int64_t>(i) + 1);
  }
  return trim(std::move(out));
}

PolynomialRba::Element PolynomialRba::monomial(std::size_t degree, Rational coeff) const {
  if (max_degree_ && degree > *max_degree_) {
    throw DomainError("monomial degree exceeds the truncation bound");
  }
  Element out(degree + 1, Rational(0));
  out[degree] = std::move(coeff);
  return trim(std::move(out));
}

std::string PolynomialRba::str(const Element& a) const {
  if (a.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    Rational c = a[i];
    if (first) {
      if (c.sign() < 0) {
        out += '-';
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      c = c.abs();
    }
    if (i == 0) {
      out += c.str();
    } else {
      if (!c.is_one()) {
        out += c.str();
        out += '*';
      }
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    first = false;
  }
  return out;
}

}  // namespace rbax
