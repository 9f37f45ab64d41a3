#include "rbax/base_algebra.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "rbax/errors.hpp"

namespace rbax {

std::string to_string(BaseKind k) {
  switch (k) {
    case BaseKind::zero_product: return "zero";
    case BaseKind::free_monoid: return "tensor";
    case BaseKind::finite_table: return "table";
  }
  return "?";
}

std::string render_base_element(const BaseElement& e, const Alphabet& alphabet) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [letter, coeff] : e.terms()) {
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
    out += render_letter(letter, alphabet);
    first = false;
  }
  return out;
}

BaseAlgebra BaseAlgebra::zero_product(Alphabet a) {
  return BaseAlgebra(BaseKind::zero_product, std::move(a));
}

BaseAlgebra BaseAlgebra::free_monoid(Alphabet a) {
  return BaseAlgebra(BaseKind::free_monoid, std::move(a));
}

BaseAlgebra BaseAlgebra::finite_table(Alphabet a, Table t) {
  BaseAlgebra alg(BaseKind::finite_table, std::move(a));
  for (const auto& [key, value] : t) {
    if (key.first >= alg.alphabet_.size() || key.second >= alg.alphabet_.size()) {
      throw DomainError("table entry references generator outside the alphabet");
    }
    for (const auto& [letter, coeff] : value.terms()) {
      alg.check_letter(letter);
    }
  }
  alg.table_ = std::move(t);
  Report r = alg.validate();
  if (!r.pass) {
    throw DomainError("table product is not associative: " + r.witness);
  }
  return alg;
}

BaseAlgebra BaseAlgebra::load_table(Alphabet a, std::istream& in) {
  Table table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    std::string x;
    std::string y;
    std::string arrow;
    if (!(ls >> x >> y >> arrow) || arrow != "->") {
      throw ParseError("expected 'x y -> terms' in table line " + std::to_string(lineno), 0);
    }
    Generator gx = a.gen(x);
    Generator gy = a.gen(y);
    std::string rest;
    std::getline(ls, rest);
    BaseElement rhs;
    std::istringstream ts(rest);
    std::string token;
    Rational sign(1);
    bool expect_term = true;
    while (ts >> token) {
      if (token == "+") {
        sign = Rational(1);
        expect_term = true;
        continue;
      }
      if (token == "-") {
        sign = Rational(-1);
        expect_term = true;
        continue;
      }
      if (!expect_term) {
        throw ParseError("missing '+' between terms in table line " + std::to_string(lineno), 0);
      }
      Rational coeff = sign;
      std::string name = token;
      if (auto star = token.find('*'); star != std::string::npos) {
        coeff = sign * Rational::parse(token.substr(0, star));
        name = token.substr(star + 1);
      }
      if (name == "0" && coeff.abs().is_one()) {
        expect_term = false;
        sign = Rational(1);
        continue;
      }
      rhs.add_term(Letter(a.gen(name)), coeff);
      expect_term = false;
      sign = Rational(1);
    }
    table[{gx.index, gy.index}] = std::move(rhs);
  }
  return finite_table(std::move(a), std::move(table));
}

BaseAlgebra BaseAlgebra::load_table_file(Alphabet a, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open table file '" + path + "'");
  return load_table(std::move(a), in);
}

void BaseAlgebra::check_letter(const Letter& l) const {
  for (Generator g : l.parts()) {
    if (g.index >= alphabet_.size()) {
      throw DomainError("letter references generator outside the alphabet");
    }
  }
  if (kind_ != BaseKind::free_monoid && !l.simple()) {
    throw DomainError("multi-part letter '" + render_letter(l, alphabet_) +
                      "' requires the tensor base");
  }
}

BaseElement BaseAlgebra::mult(const Letter& a, const Letter& b) const {
  check_letter(a);
  check_letter(b);
  switch (kind_) {
    case BaseKind::zero_product:
      return BaseElement{};
    case BaseKind::free_monoid:
      return BaseElement::single(concat(a, b));
    case BaseKind::finite_table: {
      auto it = table_.find({a.parts()[0].index, b.parts()[0].index});
      if (it == table_.end()) return BaseElement{};
      return it->second;
    }
  }
  return BaseElement{};
}

BaseElement BaseAlgebra::mult(const BaseElement& a, const BaseElement& b) const {
  BaseElement out;
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      out += mult(la, lb).scaled(ca * cb);
    }
  }
  return out;
}

BaseAlgebra::Report BaseAlgebra::validate() const {
  if (kind_ != BaseKind::finite_table) return {};
  std::size_t n = alphabet_.size();
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::uint32_t k = 0; k < n; ++k) {
        Letter x{Generator{i}};
        Letter y{Generator{j}};
        Letter z{Generator{k}};
        BaseElement lhs = mult(mult(x, y), BaseElement::single(z));
        BaseElement rhs = mult(BaseElement::single(x), mult(y, z));
        if (!(lhs == rhs)) {
          return {false, "(" + alphabet_.name(Generator{i}) + ", " +
                             alphabet_.name(Generator{j}) + ", " +
                             alphabet_.name(Generator{k}) + "): (xy)z = " +
                             render_base_element(lhs, alphabet_) + ", x(yz) = " +
                             render_base_element(rhs, alphabet_)};
        }
      }
    }
  }
  return {};
}

}  // namespace rbax
