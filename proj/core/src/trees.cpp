#include "rbax/trees.hpp"

#include <algorithm>

#include "lexer.hpp"
#include "rbax/errors.hpp"

namespace rbax {

const BTreePtr& BinaryTree::leaf() {
  static const BTreePtr instance(new BinaryTree());
  return instance;
}

BinaryTree::BinaryTree(BTreePtr l, Generator d, BTreePtr r)
    : left_(std::move(l)),
      right_(std::move(r)),
      dec_(d),
      vertices_(1 + left_->vertices_ + right_->vertices_) {}

BTreePtr BinaryTree::graft(BTreePtr left, Generator decoration, BTreePtr right) {
  if (!left || !right) throw DomainError("null subtree");
  return BTreePtr(new BinaryTree(std::move(left), decoration, std::move(right)));
}

const BTreePtr& BinaryTree::left() const {
  if (is_leaf()) throw DomainError("leaf has no subtrees");
  return left_;
}

const BTreePtr& BinaryTree::right() const {
  if (is_leaf()) throw DomainError("leaf has no subtrees");
  return right_;
}

Generator BinaryTree::decoration() const {
  if (is_leaf()) throw DomainError("leaf has no decoration");
  return dec_;
}

const PTreePtr& PlanarTree::leaf() {
  static const PTreePtr instance(new PlanarTree());
  return instance;
}

PlanarTree::PlanarTree(std::vector<PTreePtr> ch, std::vector<Generator> ds)
    : children_(std::move(ch)), decorations_(std::move(ds)), leaves_(0) {
  for (const PTreePtr& c : children_) leaves_ += c->leaves_;
}

PTreePtr PlanarTree::graft(std::vector<PTreePtr> children,
                           std::vector<Generator> decorations) {
  if (children.size() < 2) {
    throw DomainError("planar vertex needs at least two children");
  }
  if (decorations.size() + 1 != children.size()) {
    throw DomainError("planar vertex needs one decoration per gap");
  }
  for (const PTreePtr& c : children) {
    if (!c) throw DomainError("null subtree");
  }
  return PTreePtr(new PlanarTree(std::move(children), std::move(decorations)));
}

const std::vector<PTreePtr>& PlanarTree::children() const {
  if (is_leaf()) throw DomainError("leaf has no subtrees");
  return children_;
}

const std::vector<Generator>& PlanarTree::decorations() const {
  if (is_leaf()) throw DomainError("leaf has no decorations");
  return decorations_;
}

std::strong_ordering compare_btrees(const BinaryTree& a, const BinaryTree& b) {
  if (auto c = a.vertices() <=> b.vertices(); c != 0) return c;
  if (a.is_leaf()) return std::strong_ordering::equal;
  if (auto c = a.decoration() <=> b.decoration(); c != 0) return c;
  if (auto c = compare_btrees(*a.left(), *b.left()); c != 0) return c;
  return compare_btrees(*a.right(), *b.right());
}

std::strong_ordering compare_ptrees(const PlanarTree& a, const PlanarTree& b) {
  if (auto c = a.leaves() <=> b.leaves(); c != 0) return c;
  if (a.is_leaf()) return std::strong_ordering::equal;
  if (auto c = a.children().size() <=> b.children().size(); c != 0) return c;
  for (std::size_t i = 0; i < a.decorations().size(); ++i) {
    if (auto c = a.decorations()[i] <=> b.decorations()[i]; c != 0) return c;
  }
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (auto c = compare_ptrees(*a.children()[i], *b.children()[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

BTreeSum btree_star_tt(const BTreePtr& t, const BTreePtr& u);

BTreeSum btree_star_ext_tt(const BTreePtr& s, const BTreePtr& t) {
  if (s->is_leaf()) return BTreeSum::single(t);
  if (t->is_leaf()) return BTreeSum::single(s);
  return btree_star_tt(s, t);
}

// t < u grafts u into the rightmost gap below the root of t: the root and
// left subtree stay, the right subtree is star-multiplied with u.
BTreeSum btree_prec_tt(const BTreePtr& t, const BTreePtr& u) {
  BTreeSum mid = btree_star_ext_tt(t->right(), u);
  std::vector<BTreeSum::Term> out;
  out.reserve(mid.size());
  for (const auto& [w, c] : mid.terms()) {
    out.emplace_back(BinaryTree::graft(t->left(), t->decoration(), w), c);
  }
  return BTreeSum(std::move(out));
}

BTreeSum btree_succ_tt(const BTreePtr& t, const BTreePtr& u) {
  BTreeSum mid = btree_star_ext_tt(t, u->left());
  std::vector<BTreeSum::Term> out;
  out.reserve(mid.size());
  for (const auto& [w, c] : mid.terms()) {
    out.emplace_back(BinaryTree::graft(w, u->decoration(), u->right()), c);
  }
  return BTreeSum(std::move(out));
}

BTreeSum btree_star_tt(const BTreePtr& t, const BTreePtr& u) {
  return btree_prec_tt(t, u) + btree_succ_tt(t, u);
}

PTreeSum ptree_star_tt(const PTreePtr& t, const PTreePtr& u);

PTreeSum ptree_star_ext_tt(const PTreePtr& s, const PTreePtr& t) {
  if (s->is_leaf()) return PTreeSum::single(t);
  if (t->is_leaf()) return PTreeSum::single(s);
  return ptree_star_tt(s, t);
}

PTreeSum ptree_graft_last(const PTreePtr& t, const PTreeSum& mid) {
  std::vector<PTreeSum::Term> out;
  out.reserve(mid.size());
  for (const auto& [w, c] : mid.terms()) {
    std::vector<PTreePtr> children = t->children();
    children.back() = w;
    out.emplace_back(PlanarTree::graft(std::move(children), t->decorations()), c);
  }
  return PTreeSum(std::move(out));
}

PTreeSum ptree_graft_first(const PTreePtr& u, const PTreeSum& mid) {
  std::vector<PTreeSum::Term> out;
  out.reserve(mid.size());
  for (const auto& [w, c] : mid.terms()) {
    std::vector<PTreePtr> children = u->children();
    children.front() = w;
    out.emplace_back(PlanarTree::graft(std::move(children), u->decorations()), c);
  }
  return PTreeSum(std::move(out));
}

PTreeSum ptree_prec_tt(const PTreePtr& t, const PTreePtr& u) {
  return ptree_graft_last(t, ptree_star_ext_tt(t->children().back(), u));
}

PTreeSum ptree_succ_tt(const PTreePtr& t, const PTreePtr& u) {
  return ptree_graft_first(u, ptree_star_ext_tt(t, u->children().front()));
}

// t . u fuses the two roots: t keeps its children except the last, u keeps
// its children except the first, and the two dropped children are star-
// multiplied (a leaf pair collapses to a leaf) to fill the middle gap.
PTreeSum ptree_dot_tt(const PTreePtr& t, const PTreePtr& u) {
  const PTreePtr& a = t->children().back();
  const PTreePtr& b = u->children().front();
  PTreeSum mid = a->is_leaf() && b->is_leaf() ? PTreeSum::single(PlanarTree::leaf())
                                              : ptree_star_ext_tt(a, b);
  std::vector<Generator> decorations = t->decorations();
  decorations.insert(decorations.end(), u->decorations().begin(),
                     u->decorations().end());
  std::vector<PTreeSum::Term> out;
  out.reserve(mid.size());
  for (const auto& [w, c] : mid.terms()) {
    std::vector<PTreePtr> children(t->children().begin(), t->children().end() - 1);
    children.push_back(w);
    children.insert(children.end(), u->children().begin() + 1, u->children().end());
    out.emplace_back(PlanarTree::graft(std::move(children), decorations), c);
  }
  return PTreeSum(std::move(out));
}

PTreeSum ptree_star_tt(const PTreePtr& t, const PTreePtr& u) {
  return ptree_prec_tt(t, u) + ptree_succ_tt(t, u) + ptree_dot_tt(t, u);
}

template <class Sum, class Fn>
Sum bilinear(const Sum& a, const Sum& b, Fn&& tt, bool allow_leaf) {
  Sum out;
  for (const auto& [ta, ca] : a.terms()) {
    if (!allow_leaf && ta->is_leaf()) {
      throw DomainError("tree operation is undefined on the leaf");
    }
    for (const auto& [tb, cb] : b.terms()) {
      if (!allow_leaf && tb->is_leaf()) {
        throw DomainError("tree operation is undefined on the leaf");
      }
      out += tt(ta, tb).scaled(ca * cb);
    }
  }
  return out;
}

}  // namespace

BTreeSum btree_op(DendKind kind, const BTreeSum& a, const BTreeSum& b) {
  switch (kind) {
    case DendKind::prec:
      return bilinear(a, b, btree_prec_tt, false);
    case DendKind::succ:
      return bilinear(a, b, btree_succ_tt, false);
    case DendKind::star:
      return bilinear(a, b, btree_star_tt, false);
    case DendKind::dot:
    case DendKind::prec_prime:
      break;
  }
  throw DomainError("operation '" + to_string(kind) + "' is not part of the binary family");
}

PTreeSum ptree_op(DendKind kind, const PTreeSum& a, const PTreeSum& b) {
  switch (kind) {
    case DendKind::prec:
      return bilinear(a, b, ptree_prec_tt, false);
    case DendKind::succ:
      return bilinear(a, b, ptree_succ_tt, false);
    case DendKind::dot:
      return bilinear(a, b, ptree_dot_tt, false);
    case DendKind::star:
      return bilinear(a, b, ptree_star_tt, false);
    case DendKind::prec_prime:
      break;
  }
  throw DomainError("operation '" + to_string(kind) + "' is not part of the planar family");
}

BTreeSum btree_star_unital(const BTreeSum& a, const BTreeSum& b) {
  return bilinear(a, b, btree_star_ext_tt, true);
}

PTreeSum ptree_star_unital(const PTreeSum& a, const PTreeSum& b) {
  return bilinear(a, b, ptree_star_ext_tt, true);
}

Word phi(const BinaryTree& t) {
  if (t.is_leaf()) throw DomainError("the leaf has no word image");
  std::vector<Factor> factors;
  if (!t.left()->is_leaf()) factors.emplace_back(phi(*t.left()));
  factors.emplace_back(Letter(t.decoration()));
  if (!t.right()->is_leaf()) factors.emplace_back(phi(*t.right()));
  return Word(std::move(factors));
}

Word phi(const BTreePtr& t) { return phi(*t); }

Word psi(const PlanarTree& t) {
  if (t.is_leaf()) throw DomainError("the leaf has no word image");
  std::vector<Factor> factors;
  std::vector<Generator> run;
  auto flush = [&] {
    if (!run.empty()) {
      factors.emplace_back(Letter(run));
      run.clear();
    }
  };
  if (!t.children().front()->is_leaf()) {
    factors.emplace_back(psi(*t.children().front()));
  }
  for (std::size_t i = 0; i < t.decorations().size(); ++i) {
    run.push_back(t.decorations()[i]);
    const PTreePtr& gap = t.children()[i + 1];
    if (!gap->is_leaf()) {
      flush();
      factors.emplace_back(psi(*gap));
    }
  }
  flush();
  return Word(std::move(factors));
}

Word psi(const PTreePtr& t) { return psi(*t); }

DendOps<BTreeSum> btree_ops() {
  return DendOps<BTreeSum>{
      [](const BTreeSum& a, const BTreeSum& b) { return btree_op(DendKind::prec, a, b); },
      [](const BTreeSum& a, const BTreeSum& b) { return btree_op(DendKind::succ, a, b); },
      nullptr};
}

DendOps<PTreeSum> ptree_ops() {
  return DendOps<PTreeSum>{
      [](const PTreeSum& a, const PTreeSum& b) { return ptree_op(DendKind::prec, a, b); },
      [](const PTreeSum& a, const PTreeSum& b) { return ptree_op(DendKind::succ, a, b); },
      [](const PTreeSum& a, const PTreeSum& b) { return ptree_op(DendKind::dot, a, b); }};
}

Element phi_image(const BTreeSum& s) {
  Element out;
  for (const auto& [t, c] : s.terms()) out.add_term(phi(t), c);
  return out;
}

Element psi_image(const PTreeSum& s) {
  Element out;
  for (const auto& [t, c] : s.terms()) out.add_term(psi(t), c);
  return out;
}

namespace {

bool no_forbidden_patterns(const std::vector<Factor>& factors, bool reject_two_sided) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Factor& f = factors[i];
    if (!f.is_bracket()) continue;
    const Word& inner = f.bracket();
    if (inner.breadth() == 1 && inner.factors()[0].is_bracket()) return false;
    if (reject_two_sided && i > 0 && i + 1 < factors.size()) return false;
    if (!no_forbidden_patterns(inner.factors(), reject_two_sided)) return false;
  }
  return true;
}

void require_simple_letters(const Word& w) {
  for (const Factor& f : w.factors()) {
    if (f.is_letter()) {
      if (!f.letter().simple()) {
        throw DomainError("diword test requires single-generator letters");
      }
    } else {
      require_simple_letters(f.bracket());
    }
  }
}

}  // namespace

bool is_diword(const Word& w) {
  require_simple_letters(w);
  if (w.breadth() == 1 && w.factors()[0].is_bracket()) return false;
  return no_forbidden_patterns(w.factors(), true);
}

bool is_triword(const Word& w) {
  if (w.breadth() == 1 && w.factors()[0].is_bracket()) return false;
  return no_forbidden_patterns(w.factors(), false);
}

std::vector<BTreePtr> enumerate_binary_trees(std::size_t grade, const Alphabet& alphabet,
                                             std::size_t cap) {
  std::vector<std::vector<BTreePtr>> by_grade;
  by_grade.push_back({BinaryTree::leaf()});
  std::size_t total = 1;
  for (std::size_t n = 1; n <= grade; ++n) {
    std::vector<BTreePtr> level;
    for (std::size_t i = 0; i + 1 <= n; ++i) {
      std::size_t j = n - 1 - i;
      for (const BTreePtr& l : by_grade[i]) {
        for (std::uint32_t g = 0; g < alphabet.size(); ++g) {
          for (const BTreePtr& r : by_grade[j]) {
            level.push_back(BinaryTree::graft(l, Generator{g}, r));
            if (++total > cap) {
              throw LimitError("tree enumeration exceeded the collection cap");
            }
          }
        }
      }
    }
    by_grade.push_back(std::move(level));
  }
  std::vector<BTreePtr> out = std::move(by_grade[grade]);
  std::sort(out.begin(), out.end(), BTreeLess{});
  return out;
}

namespace {

// Splits `total` leaves into at least two ordered positive parts and emits
// every decorated root for each split.
void planar_roots(const std::vector<std::vector<PTreePtr>>& by_grade,
                  const Alphabet& alphabet, std::size_t total, std::size_t cap,
                  std::size_t& count, std::vector<PTreePtr>& acc,
                  std::vector<PTreePtr>& out) {
  if (total == 0) {
    if (acc.size() < 2) return;
    std::size_t k = acc.size() - 1;
    std::vector<Generator> decorations(k);
    std::vector<std::uint32_t> idx(k, 0);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) decorations[i] = Generator{idx[i]};
      out.push_back(PlanarTree::graft(acc, decorations));
      if (++count > cap) {
        throw LimitError("tree enumeration exceeded the collection cap");
      }
      std::size_t pos = k;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < alphabet.size()) break;
        idx[pos] = 0;
        if (pos == 0) return;
      }
    }
  }
  std::size_t limit = acc.empty() ? total - 1 : total;
  for (std::size_t take = 1; take <= limit; ++take) {
    for (const PTreePtr& child : by_grade[take - 1]) {
      acc.push_back(child);
      planar_roots(by_grade, alphabet, total - take, cap, count, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<PTreePtr> enumerate_planar_trees(std::size_t grade, const Alphabet& alphabet,
                                             std::size_t cap) {
  std::vector<std::vector<PTreePtr>> by_grade;
  by_grade.push_back({PlanarTree::leaf()});
  std::size_t count = 1;
  for (std::size_t n = 1; n <= grade; ++n) {
    std::vector<PTreePtr> level;
    std::vector<PTreePtr> acc;
    planar_roots(by_grade, alphabet, n + 1, cap, count, acc, level);
    by_grade.push_back(std::move(level));
  }
  std::vector<PTreePtr> out = std::move(by_grade[grade]);
  std::sort(out.begin(), out.end(), PTreeLess{});
  return out;
}

namespace {

using detail::Lexer;
using detail::Tok;
using detail::Token;

BTreePtr parse_btree_body(Lexer& lex, const Alphabet& alphabet) {
  if (lex.accept(Tok::bar)) return BinaryTree::leaf();
  lex.expect(Tok::lparen, "'(' or '|'");
  BTreePtr left = parse_btree_body(lex, alphabet);
  lex.expect(Tok::caret, "'^'");
  Token name = lex.expect(Tok::ident, "decoration name");
  BTreePtr right = parse_btree_body(lex, alphabet);
  lex.expect(Tok::rparen, "')'");
  return BinaryTree::graft(std::move(left), alphabet.gen(name.text), std::move(right));
}

PTreePtr parse_ptree_body(Lexer& lex, const Alphabet& alphabet) {
  if (lex.accept(Tok::bar)) return PlanarTree::leaf();
  Token v = lex.expect(Tok::ident, "'V' or '|'");
  if (v.text != "V") throw ParseError("expected 'V'", v.pos);
  lex.expect(Tok::lparen, "'('");
  std::vector<PTreePtr> children;
  std::vector<Generator> decorations;
  children.push_back(parse_ptree_body(lex, alphabet));
  do {
    lex.expect(Tok::comma, "','");
    Token name = lex.expect(Tok::ident, "decoration name");
    decorations.push_back(alphabet.gen(name.text));
    lex.expect(Tok::comma, "','");
    children.push_back(parse_ptree_body(lex, alphabet));
  } while (lex.peek().kind == Tok::comma);
  lex.expect(Tok::rparen, "')'");
  return PlanarTree::graft(std::move(children), std::move(decorations));
}

}  // namespace

BTreePtr parse_binary_tree(std::string_view text, const Alphabet& alphabet) {
  Lexer lex(text);
  BTreePtr t = parse_btree_body(lex, alphabet);
  if (lex.peek().kind != Tok::end) {
    throw ParseError("trailing input after tree", lex.peek().pos);
  }
  return t;
}

PTreePtr parse_planar_tree(std::string_view text, const Alphabet& alphabet) {
  Lexer lex(text);
  PTreePtr t = parse_ptree_body(lex, alphabet);
  if (lex.peek().kind != Tok::end) {
    throw ParseError("trailing input after tree", lex.peek().pos);
  }
  return t;
}

std::string render_tree(const BinaryTree& t, const Alphabet& alphabet) {
  if (t.is_leaf()) return "|";
  return "(" + render_tree(*t.left(), alphabet) + "^" + alphabet.name(t.decoration()) +
         render_tree(*t.right(), alphabet) + ")";
}

std::string render_tree(const PlanarTree& t, const Alphabet& alphabet) {
  if (t.is_leaf()) return "|";
  std::string out = "V(";
  out += render_tree(*t.children()[0], alphabet);
  for (std::size_t i = 0; i < t.decorations().size(); ++i) {
    out += ',';
    out += alphabet.name(t.decorations()[i]);
    out += ',';
    out += render_tree(*t.children()[i + 1], alphabet);
  }
  out += ')';
  return out;
}

namespace {

template <class Sum, class Render>
std::string render_sum(const Sum& s, Render&& render) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, coeff] : s.terms()) {
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
    out += render(*t);
    first = false;
  }
  return out;
}

}  // namespace

std::string render_btree_sum(const BTreeSum& s, const Alphabet& alphabet) {
  return render_sum(s, [&](const BinaryTree& t) { return render_tree(t, alphabet); });
}

std::string render_ptree_sum(const PTreeSum& s, const Alphabet& alphabet) {
  return render_sum(s, [&](const PlanarTree& t) { return render_tree(t, alphabet); });
}

}  // namespace rbax
