#include "rbax/element.hpp"

namespace rbax {

std::string render_element(const Element& e, const Alphabet& alphabet) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, coeff] : e.terms()) {
    Rational c = coeff;
    if (first) {
      if (c.sign() < 0) {
        out += '-';
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      c = c.abs();
    }
    if (!c.is_one()) {
      out += c.str();
      out += '*';
    }
    out += render_word(word, alphabet);
    first = false;
  }
  return out;
}

}  // namespace rbax
