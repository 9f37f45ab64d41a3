#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rbax/dendriform.hpp"
#include "rbax/element.hpp"
#include "rbax/formal_sum.hpp"
#include "rbax/word.hpp"

namespace rbax {

class BinaryTree;
using BTreePtr = std::shared_ptr<const BinaryTree>;

// Planar binary tree with decorated internal vertices. Grade = number of
// internal vertices; a tree of grade n has n + 1 leaves.
class BinaryTree {
 public:
  static const BTreePtr& leaf();
  static BTreePtr graft(BTreePtr left, Generator decoration, BTreePtr right);

  bool is_leaf() const { return vertices_ == 0; }
  const BTreePtr& left() const;
  const BTreePtr& right() const;
  Generator decoration() const;
  std::size_t vertices() const { return vertices_; }
  std::size_t leaves() const { return vertices_ + 1; }

 private:
  BinaryTree() = default;
  BinaryTree(BTreePtr l, Generator d, BTreePtr r);

  BTreePtr left_;
  BTreePtr right_;
  Generator dec_{};
  std::size_t vertices_ = 0;
};

class PlanarTree;
using PTreePtr = std::shared_ptr<const PlanarTree>;

// Planar rooted tree whose internal vertices have at least two children; a
// vertex with k + 1 children carries k decorations, one per gap. Grade =
// number of leaves minus one; the total decoration count equals the grade.
class PlanarTree {
 public:
  static const PTreePtr& leaf();
  static PTreePtr graft(std::vector<PTreePtr> children,
                        std::vector<Generator> decorations);

  bool is_leaf() const { return leaves_ == 1 && children_.empty(); }
  const std::vector<PTreePtr>& children() const;
  const std::vector<Generator>& decorations() const;
  std::size_t leaves() const { return leaves_; }
  std::size_t grade() const { return leaves_ - 1; }

 private:
  PlanarTree() : leaves_(1) {}
  PlanarTree(std::vector<PTreePtr> ch, std::vector<Generator> ds);

  std::vector<PTreePtr> children_;
  std::vector<Generator> decorations_;
  std::size_t leaves_;
};

std::strong_ordering compare_btrees(const BinaryTree& a, const BinaryTree& b);
std::strong_ordering compare_ptrees(const PlanarTree& a, const PlanarTree& b);

struct BTreeLess {
  bool operator()(const BTreePtr& a, const BTreePtr& b) const {
    return a != b && compare_btrees(*a, *b) == std::strong_ordering::less;
  }
};
struct PTreeLess {
  bool operator()(const PTreePtr& a, const PTreePtr& b) const {
    return a != b && compare_ptrees(*a, *b) == std::strong_ordering::less;
  }
};

using BTreeSum = FormalSum<BTreePtr, BTreeLess>;
using PTreeSum = FormalSum<PTreePtr, PTreeLess>;

// Grafting recursions for the two-piece splitting on binary trees. prec and
// succ reject leaf summands on either side; star is their sum. prec_prime
// and dot are not part of the binary family.
BTreeSum btree_op(DendKind kind, const BTreeSum& a, const BTreeSum& b);
// Three-piece splitting on planar trees; star = prec + succ + dot.
PTreeSum ptree_op(DendKind kind, const PTreeSum& a, const PTreeSum& b);

// star extended by the leaf as a unit on both sides.
BTreeSum btree_star_unital(const BTreeSum& a, const BTreeSum& b);
PTreeSum ptree_star_unital(const PTreeSum& a, const PTreeSum& b);

// The spans of non-leaf trees as linear spaces, for running axiom checks.
struct BTreeSpace {
  using Element = BTreeSum;
  Element zero() const { return {}; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element scale(const Rational& c, const Element& a) const { return a.scaled(c); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
};
struct PTreeSpace {
  using Element = PTreeSum;
  Element zero() const { return {}; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element scale(const Rational& c, const Element& a) const { return a.scaled(c); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
};

// The grafting operations packaged as operation sets: a two-piece set on
// binary trees, a three-piece set on planar trees.
DendOps<BTreeSum> btree_ops();
DendOps<PTreeSum> ptree_ops();

// Word of a binary tree: bracketed left image, root letter, bracketed right
// image, leaf sides dropped. Lands on words over the zero-product base.
// Rejects the leaf.
Word phi(const BinaryTree& t);
Word phi(const BTreePtr& t);

// Word of a planar tree: bracketed child images separated by the gap
// decorations; decorations whose gap child is a leaf merge into one
// multi-part letter. Lands on words over the tensor base. Rejects the leaf.
Word psi(const PlanarTree& t);
Word psi(const PTreePtr& t);

// Linear extensions of phi and psi to formal sums of trees.
Element phi_image(const BTreeSum& s);
Element psi_image(const PTreeSum& s);

// Image characterization for phi: single-generator letters, the word is not
// one top-level bracket, no bracket wrapping a lone bracket, and no bracket
// with letters on both sides, at every nesting level. Throws DomainError on
// multi-part letters.
bool is_diword(const Word& w);
// Image characterization for psi: drops the two-sided-letters restriction
// and admits multi-part letters.
bool is_triword(const Word& w);

// All decorated trees of the given grade, canonically ordered.
std::vector<BTreePtr> enumerate_binary_trees(std::size_t grade, const Alphabet& alphabet,
                                             std::size_t cap = 500000);
std::vector<PTreePtr> enumerate_planar_trees(std::size_t grade, const Alphabet& alphabet,
                                             std::size_t cap = 500000);

// btree := '|' | '(' btree '^' ident btree ')'
BTreePtr parse_binary_tree(std::string_view text, const Alphabet& alphabet);
// ptree := '|' | 'V(' ptree (',' ident ',' ptree)+ ')'
PTreePtr parse_planar_tree(std::string_view text, const Alphabet& alphabet);

std::string render_tree(const BinaryTree& t, const Alphabet& alphabet);
std::string render_tree(const PlanarTree& t, const Alphabet& alphabet);
std::string render_btree_sum(const BTreeSum& s, const Alphabet& alphabet);
std::string render_ptree_sum(const PTreeSum& s, const Alphabet& alphabet);

}  // namespace rbax
