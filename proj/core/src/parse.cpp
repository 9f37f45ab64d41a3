#include "rbax/parse.hpp"

#include <vector>

#include "lexer.hpp"
#include "rbax/errors.hpp"

namespace rbax {

namespace {

using detail::Lexer;
using detail::Tok;
using detail::Token;

Letter parse_letter(Lexer& lex, const BaseAlgebra& base) {
  Token first = lex.expect(Tok::ident, "generator name");
  std::vector<Generator> parts{base.alphabet().gen(first.text)};
  while (lex.accept(Tok::dot)) {
    Token part = lex.expect(Tok::ident, "generator name after '.'");
    parts.push_back(base.alphabet().gen(part.text));
  }
  Letter l(std::move(parts));
  base.check_letter(l);
  return l;
}

Word parse_word_body(Lexer& lex, const BaseAlgebra& base);

bool starts_factor(const Token& t) {
  return t.kind == Tok::ident || t.kind == Tok::lbracket;
}

Factor parse_factor(Lexer& lex, const BaseAlgebra& base) {
  const Token& t = lex.peek();
  if (t.kind == Tok::lbracket) {
    lex.next();
    Word inner = parse_word_body(lex, base);
    lex.expect(Tok::rbracket, "']'");
    return Factor(std::move(inner));
  }
  if (t.kind == Tok::ident && t.text == "R") {
    Lexer probe = lex;
    probe.next();
    if (probe.peek().kind == Tok::lparen) {
      lex.next();
      lex.next();
      Word inner = parse_word_body(lex, base);
      lex.expect(Tok::rparen, "')'");
      return Factor(std::move(inner));
    }
  }
  return Factor(parse_letter(lex, base));
}

Word parse_word_body(Lexer& lex, const BaseAlgebra& base) {
  std::size_t start = lex.peek().pos;
  std::vector<Factor> factors;
  if (!starts_factor(lex.peek())) {
    throw ParseError("expected a word factor", lex.peek().pos);
  }
  while (starts_factor(lex.peek())) {
    factors.push_back(parse_factor(lex, base));
  }
  try {
    return Word(std::move(factors));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), start);
  }
}

Rational parse_rational(Lexer& lex, bool negative) {
  Token num = lex.expect(Tok::integer, "number");
  std::int64_t n = 0;
  for (char c : num.text) {
    n = n * 10 + (c - '0');
    if (n < 0) throw ParseError("integer literal overflow", num.pos);
  }
  std::int64_t d = 1;
  if (lex.peek().kind == Tok::slash) {
    lex.next();
    Token den = lex.expect(Tok::integer, "denominator");
    d = 0;
    for (char c : den.text) {
      d = d * 10 + (c - '0');
      if (d < 0) throw ParseError("integer literal overflow", den.pos);
    }
  }
  return Rational(negative ? -n : n, d);
}

}  // namespace

Word parse_word(std::string_view text, const BaseAlgebra& base) {
  Lexer lex(text);
  Word w = parse_word_body(lex, base);
  if (lex.peek().kind != Tok::end) {
    throw ParseError("trailing input after word", lex.peek().pos);
  }
  return w;
}

Element parse_element(std::string_view text, const BaseAlgebra& base) {
  Lexer lex(text);
  Element out;
  bool negative = lex.accept(Tok::minus);
  while (true) {
    Rational coeff = negative ? Rational(-1) : Rational(1);
    if (lex.peek().kind == Tok::integer) {
      Rational r = parse_rational(lex, negative);
      if (r.is_zero() && lex.peek().kind != Tok::star) {
        // bare zero term
      } else {
        lex.expect(Tok::star, "'*' after coefficient");
        coeff = r;
        out.add_term(parse_word_body(lex, base), coeff);
      }
    } else {
      out.add_term(parse_word_body(lex, base), coeff);
    }
    if (lex.accept(Tok::plus)) {
      negative = false;
    } else if (lex.accept(Tok::minus)) {
      negative = true;
    } else {
      break;
    }
  }
  if (lex.peek().kind != Tok::end) {
    throw ParseError("trailing input after element", lex.peek().pos);
  }
  return out;
}

}  // namespace rbax
