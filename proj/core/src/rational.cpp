#include "rbax/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "rbax/errors.hpp"

namespace rbax {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Wide n = num;
  Wide d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw DomainError("empty rational literal");
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  auto read_int = [&](std::string_view what) {
    if (i >= text.size() || text[i] < '0' || text[i] > '9') {
      throw DomainError("expected " + std::string(what) + " in rational literal '" +
                        std::string(text) + "'");
    }
    Wide v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > std::numeric_limits<std::int64_t>::max()) {
        throw std::overflow_error("rational literal overflow");
      }
      ++i;
    }
    return static_cast<std::int64_t>(v);
  };
  std::int64_t num = read_int("numerator");
  std::int64_t den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_int("denominator");
  }
  if (i != text.size()) {
    throw DomainError("trailing characters in rational literal '" + std::string(text) + "'");
  }
  return Rational(neg ? -num : num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-Wide(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  Wide n = Wide(num_) * o.den_ + Wide(o.num_) * den_;
  Wide d = Wide(den_) * o.den_;
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  Wide n = Wide(num_) * o.num_;
  Wide d = Wide(den_) * o.den_;
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("division by zero rational");
  Wide n = Wide(num_) * o.den_;
  Wide d = Wide(den_) * o.num_;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace rbax
