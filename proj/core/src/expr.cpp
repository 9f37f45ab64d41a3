#include "rbax/expr.hpp"

#include <optional>
#include <variant>

#include "lexer.hpp"
#include "rbax/errors.hpp"

namespace rbax {

namespace {

using detail::Lexer;
using detail::Tok;
using detail::Token;

using Value = std::variant<Rational, Element>;

bool is_scalar(const Value& v) { return v.index() == 0; }

const Element& as_element(const Value& v, std::size_t pos) {
  if (is_scalar(v)) {
    throw ParseError("expected an element, found a bare scalar", pos);
  }
  return std::get<Element>(v);
}

class Evaluator {
 public:
  Evaluator(const FreeRba& ctx, std::string_view text, DendContext ops_context)
      : ctx_(ctx), lex_(text), ops_context_(ops_context) {}

  Element run() {
    std::size_t pos = lex_.peek().pos;
    Value v = sum();
    if (lex_.peek().kind != Tok::end) {
      throw ParseError("trailing input after expression", lex_.peek().pos);
    }
    return as_element(v, pos);
  }

 private:
  Value sum() {
    std::size_t pos = lex_.peek().pos;
    Value acc = product();
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      bool minus = lex_.next().kind == Tok::minus;
      Value rhs = product();
      if (is_scalar(acc) && is_scalar(rhs)) {
        Rational r = std::get<Rational>(rhs);
        acc = std::get<Rational>(acc) + (minus ? -r : r);
      } else if (!is_scalar(acc) && !is_scalar(rhs)) {
        const Element& e = std::get<Element>(rhs);
        acc = std::get<Element>(acc) + (minus ? -e : e);
      } else {
        throw ParseError("cannot add a scalar and an element", pos);
      }
    }
    return acc;
  }

  Value product() {
    Value acc = juxt();
    while (lex_.peek().kind == Tok::star) {
      std::size_t pos = lex_.next().pos;
      Value rhs = juxt();
      if (is_scalar(acc) && is_scalar(rhs)) {
        acc = std::get<Rational>(acc) * std::get<Rational>(rhs);
      } else if (is_scalar(acc)) {
        acc = std::get<Element>(rhs).scaled(std::get<Rational>(acc));
      } else if (is_scalar(rhs)) {
        acc = std::get<Element>(acc).scaled(std::get<Rational>(rhs));
      } else {
        acc = ctx_.mul(std::get<Element>(acc), as_element(rhs, pos));
      }
    }
    return acc;
  }

  Value juxt() {
    std::size_t pos = lex_.peek().pos;
    Value acc = unary();
    while (starts_primary(lex_.peek())) {
      std::size_t rhs_pos = lex_.peek().pos;
      Value rhs = unary();
      if (is_scalar(acc) || is_scalar(rhs)) {
        throw ParseError("cannot concatenate a scalar; use '*'", rhs_pos);
      }
      acc = concat_elements(std::get<Element>(acc), std::get<Element>(rhs), pos);
    }
    return acc;
  }

  Value unary() {
    if (lex_.accept(Tok::minus)) {
      Value v = unary();
      if (is_scalar(v)) return -std::get<Rational>(v);
      return std::get<Element>(v).scaled(Rational(-1));
    }
    return primary();
  }

  static bool starts_primary(const Token& t) {
    return t.kind == Tok::ident || t.kind == Tok::integer || t.kind == Tok::lbracket ||
           t.kind == Tok::lparen;
  }

  Value primary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::integer) {
      return rational();
    }
    if (t.kind == Tok::lbracket) {
      std::size_t pos = lex_.next().pos;
      Value inner = sum();
      lex_.expect(Tok::rbracket, "']'");
      return rb_apply(as_element(inner, pos));
    }
    if (t.kind == Tok::lparen) {
      lex_.next();
      Value inner = sum();
      lex_.expect(Tok::rparen, "')'");
      return inner;
    }
    if (t.kind == Tok::ident) {
      Lexer probe = lex_;
      probe.next();
      if (probe.peek().kind == Tok::lparen && is_function(t.text)) {
        return call(t.text);
      }
      return letter();
    }
    throw ParseError("expected an expression", t.pos);
  }

  static bool is_function(std::string_view name) {
    return name == "R" || name == "prec" || name == "succ" || name == "dot" ||
           name == "prec_prime" || name == "star";
  }

  Value call(std::string_view name) {
    lex_.next();
    lex_.expect(Tok::lparen, "'('");
    std::size_t pos = lex_.peek().pos;
    Value first = sum();
    if (name == "R") {
      lex_.expect(Tok::rparen, "')'");
      return rb_apply(as_element(first, pos));
    }
    lex_.expect(Tok::comma, "','");
    std::size_t pos2 = lex_.peek().pos;
    Value second = sum();
    lex_.expect(Tok::rparen, "')'");
    return induced_op(ctx_, parse_dend_kind(name), as_element(first, pos),
                      as_element(second, pos2), ops_context_);
  }

  Value letter() {
    Token first = lex_.expect(Tok::ident, "generator name");
    std::vector<Generator> parts{ctx_.alphabet().gen(first.text)};
    while (lex_.accept(Tok::dot)) {
      Token part = lex_.expect(Tok::ident, "generator name after '.'");
      parts.push_back(ctx_.alphabet().gen(part.text));
    }
    return ctx_.embed(Letter(std::move(parts)));
  }

  Value rational() {
    Token num = lex_.expect(Tok::integer, "number");
    Rational r = Rational::parse(num.text);
    if (lex_.peek().kind == Tok::slash) {
      lex_.next();
      Token den = lex_.expect(Tok::integer, "denominator");
      r = r / Rational::parse(den.text);
    }
    return r;
  }

  Element concat_elements(const Element& a, const Element& b, std::size_t pos) {
    Element out;
    for (const auto& [wa, ca] : a.terms()) {
      for (const auto& [wb, cb] : b.terms()) {
        try {
          out.add_term(concat_words(wa, wb), ca * cb);
        } catch (const DomainError& e) {
          throw ParseError(e.what(), pos);
        }
      }
    }
    return out;
  }

  const FreeRba& ctx_;
  Lexer lex_;
  DendContext ops_context_;
};

}  // namespace

Element eval_expression(const FreeRba& ctx, std::string_view text,
                        DendContext ops_context) {
  return Evaluator(ctx, text, ops_context).run();
}

}  // namespace rbax
