#include "rbax/finite_dendriform.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

#include "rbax/errors.hpp"
#include "rbax/oracles.hpp"

namespace rbax {

std::string to_string(FiniteDendriform::Kind k) {
  return k == FiniteDendriform::Kind::dialgebra ? "dialgebra" : "trialgebra";
}

namespace {

void check_table(const FiniteDendriform::Table& t, std::size_t n, const char* name) {
  if (t.size() != n) throw DomainError(std::string(name) + " table has wrong row count");
  for (const auto& row : t) {
    if (row.size() != n) {
      throw DomainError(std::string(name) + " table has wrong column count");
    }
    for (const auto& coords : row) {
      if (coords.size() != n) {
        throw DomainError(std::string(name) + " table entry has wrong coordinate count");
      }
    }
  }
}

}  // namespace

FiniteDendriform::FiniteDendriform(Kind kind, std::vector<std::string> basis, Table prec,
                                   Table succ, Table dot, Rational weight)
    : kind_(kind),
      names_(std::move(basis)),
      weight_(std::move(weight)),
      prec_(std::move(prec)),
      succ_(std::move(succ)),
      dot_(std::move(dot)) {
  if (names_.empty()) throw DomainError("empty basis");
  if (names_.size() > kMaxDim) {
    throw LimitError("basis size exceeds the validation cap of " +
                     std::to_string(kMaxDim));
  }
  std::size_t n = names_.size();
  check_table(prec_, n, "prec");
  check_table(succ_, n, "succ");
  if (kind_ == Kind::dialgebra) {
    if (!dot_.empty()) throw DomainError("dialgebra cannot carry a dot table");
  } else {
    check_table(dot_, n, "dot");
  }
}

FiniteDendriform::Element FiniteDendriform::basis(std::size_t i) const {
  if (i >= dim()) throw DomainError("basis index out of range");
  Element out = zero();
  out[i] = Rational(1);
  return out;
}

void FiniteDendriform::check(const Element& a) const {
  if (a.size() != dim()) throw DomainError("coordinate length mismatch");
}

FiniteDendriform::Element FiniteDendriform::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = a[i] + b[i];
  return out;
}

FiniteDendriform::Element FiniteDendriform::scale(const Rational& c,
                                                  const Element& a) const {
  check(a);
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = c * a[i];
  return out;
}

bool FiniteDendriform::is_zero(const Element& a) const {
  check(a);
  for (const Rational& r : a) {
    if (!r.is_zero()) return false;
  }
  return true;
}

FiniteDendriform::Element FiniteDendriform::apply_table(const Table& t, const Element& a,
                                                        const Element& b) const {
  check(a);
  check(b);
  Element out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Rational c = a[i] * b[j];
      const Element& coords = t[i][j];
      for (std::size_t k = 0; k < dim(); ++k) {
        if (!coords[k].is_zero()) out[k] += c * coords[k];
      }
    }
  }
  return out;
}

FiniteDendriform::Element FiniteDendriform::prec(const Element& a, const Element& b) const {
  return apply_table(prec_, a, b);
}

FiniteDendriform::Element FiniteDendriform::succ(const Element& a, const Element& b) const {
  return apply_table(succ_, a, b);
}

FiniteDendriform::Element FiniteDendriform::dot(const Element& a, const Element& b) const {
  if (kind_ != Kind::trialgebra) {
    throw DomainError("dot operation is not part of a dialgebra");
  }
  return apply_table(dot_, a, b);
}

DendOps<FiniteDendriform::Element> FiniteDendriform::ops() const {
  DendOps<Element> out;
  out.prec = [this](const Element& a, const Element& b) { return prec(a, b); };
  out.succ = [this](const Element& a, const Element& b) { return succ(a, b); };
  if (kind_ == Kind::trialgebra) {
    out.dot = [this](const Element& a, const Element& b) { return dot(a, b); };
  }
  return out;
}

AxiomReport<FiniteDendriform::Element> FiniteDendriform::validate() const {
  AxiomReport<Element> merged;
  DendOps<Element> o = ops();
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      for (std::size_t k = 0; k < dim(); ++k) {
        AxiomReport<Element> r =
            kind_ == Kind::trialgebra
                ? check_trialgebra(*this, o, basis(i), basis(j), basis(k))
                : check_dialgebra(*this, o, basis(i), basis(j), basis(k));
        for (auto& c : r.checks) {
          if (!c.pass) {
            c.axiom += " on (" + names_[i] + ", " + names_[j] + ", " + names_[k] + ")";
            merged.checks.push_back(std::move(c));
          }
        }
      }
    }
  }
  if (merged.checks.empty()) {
    merged.checks.push_back({"all axioms on all basis triples", zero(), true});
  }
  return merged;
}

std::string FiniteDendriform::str(const Element& a) const {
  check(a);
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
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
    if (!c.is_one()) {
      out += c.str();
      out += '*';
    }
    out += names_[i];
    first = false;
  }
  return first ? "0" : out;
}

FiniteDendriform FiniteDendriform::parse(std::istream& in) {
  std::optional<Kind> kind;
  Rational weight(0);
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  Table prec;
  Table succ;
  Table dot;
  bool saw_dot = false;

  auto parse_coords = [&](const std::string& rhs, std::size_t lineno) {
    Element coords(names.size(), Rational(0));
    std::istringstream ts(rhs);
    std::string token;
    Rational sign(1);
    while (ts >> token) {
      if (token == "+") {
        sign = Rational(1);
        continue;
      }
      if (token == "-") {
        sign = Rational(-1);
        continue;
      }
      Rational coeff = sign;
      std::string name = token;
      if (auto star = token.find('*'); star != std::string::npos) {
        coeff = sign * Rational::parse(token.substr(0, star));
        name = token.substr(star + 1);
      }
      sign = Rational(1);
      if (name == "0" && coeff.abs().is_one()) continue;
      auto it = index.find(name);
      if (it == index.end()) {
        throw ParseError("unknown basis element '" + name + "' on line " +
                             std::to_string(lineno),
                         0);
      }
      coords[it->second] += coeff;
    }
    return coords;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "kind") {
      std::string value;
      ls >> value;
      if (value == "dialgebra") {
        kind = Kind::dialgebra;
      } else if (value == "trialgebra") {
        kind = Kind::trialgebra;
      } else {
        throw ParseError("unknown kind '" + value + "' on line " + std::to_string(lineno),
                         0);
      }
      continue;
    }
    if (head == "weight") {
      std::string value;
      ls >> value;
      weight = Rational::parse(value);
      continue;
    }
    if (head == "basis") {
      std::string name;
      while (ls >> name) {
        if (!index.emplace(name, names.size()).second) {
          throw ParseError("duplicate basis element '" + name + "'", 0);
        }
        names.push_back(name);
      }
      std::size_t n = names.size();
      Element z(n, Rational(0));
      prec.assign(n, std::vector<Element>(n, z));
      succ.assign(n, std::vector<Element>(n, z));
      dot.assign(n, std::vector<Element>(n, z));
      continue;
    }
    if (head == "map" || head == "oracle") {
      // consumed by envelope loaders; ignored here
      continue;
    }
    std::string op;
    std::string right;
    std::string arrow;
    if (!(ls >> op >> right >> arrow) || arrow != "->") {
      throw ParseError("expected 'x OP y -> terms' on line " + std::to_string(lineno), 0);
    }
    if (names.empty()) {
      throw ParseError("structure constants before 'basis' line", 0);
    }
    auto li = index.find(head);
    auto ri = index.find(right);
    if (li == index.end() || ri == index.end()) {
      throw ParseError("unknown basis element on line " + std::to_string(lineno), 0);
    }
    std::string rhs;
    std::getline(ls, rhs);
    Element coords = parse_coords(rhs, lineno);
    if (op == "prec") {
      prec[li->second][ri->second] = std::move(coords);
    } else if (op == "succ") {
      succ[li->second][ri->second] = std::move(coords);
    } else if (op == "dot") {
      saw_dot = true;
      dot[li->second][ri->second] = std::move(coords);
    } else {
      throw ParseError("unknown operation '" + op + "' on line " + std::to_string(lineno),
                       0);
    }
  }
  if (!kind) throw ParseError("missing 'kind' line", 0);
  if (names.empty()) throw ParseError("missing 'basis' line", 0);
  if (*kind == Kind::dialgebra) {
    if (saw_dot) throw ParseError("dialgebra cannot carry dot structure constants", 0);
    dot.clear();
  }
  return FiniteDendriform(*kind, std::move(names), std::move(prec), std::move(succ),
                          std::move(dot), weight);
}

FiniteDendriform FiniteDendriform::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open structure file '" + path + "'");
  return parse(in);
}

namespace {

std::vector<std::string> indexed_names(const std::string& stem, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

FiniteDendriform::Element pad_coords(std::vector<Rational> v, std::size_t n) {
  v.resize(n, Rational(0));
  return v;
}

}  // namespace

FiniteDendriform FiniteDendriform::sequence_trialgebra(std::size_t n,
                                                       const Rational& weight) {
  SequenceRba seq(n, weight);
  Table prec(n, std::vector<Element>(n));
  Table succ(n, std::vector<Element>(n));
  Table dot(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      prec[i][j] = induced_op(seq, DendKind::prec, seq.basis(i), seq.basis(j));
      succ[i][j] = induced_op(seq, DendKind::succ, seq.basis(i), seq.basis(j));
      dot[i][j] = induced_op(seq, DendKind::dot, seq.basis(i), seq.basis(j));
    }
  }
  return FiniteDendriform(Kind::trialgebra, indexed_names("e", n), std::move(prec),
                          std::move(succ), std::move(dot), weight);
}

FiniteDendriform FiniteDendriform::sequence_prime_dialgebra(std::size_t n,
                                                            const Rational& weight) {
  SequenceRba seq(n, weight);
  Table prec(n, std::vector<Element>(n));
  Table succ(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      prec[i][j] = induced_op(seq, DendKind::prec_prime, seq.basis(i), seq.basis(j));
      succ[i][j] = induced_op(seq, DendKind::succ, seq.basis(i), seq.basis(j));
    }
  }
  return FiniteDendriform(Kind::dialgebra, indexed_names("e", n), std::move(prec),
                          std::move(succ), Table{}, weight);
}

FiniteDendriform FiniteDendriform::poly_dialgebra(std::size_t max_degree) {
  PolynomialRba poly(max_degree);
  std::size_t n = max_degree + 1;
  Table prec(n, std::vector<Element>(n));
  Table succ(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      prec[i][j] =
          pad_coords(induced_op(poly, DendKind::prec, poly.monomial(i), poly.monomial(j)),
                     n);
      succ[i][j] =
          pad_coords(induced_op(poly, DendKind::succ, poly.monomial(i), poly.monomial(j)),
                     n);
    }
  }
  return FiniteDendriform(Kind::dialgebra, indexed_names("t", n), std::move(prec),
                          std::move(succ), Table{}, Rational(0));
}

}  // namespace rbax
