#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "rbax/enumerate.hpp"
#include "rbax/parse.hpp"
#include "rbax/sampling.hpp"
#include "rbax/trees.hpp"

using namespace rbax;

namespace {

const Alphabet& xyz() {
  static Alphabet a({"x", "y", "z"});
  return a;
}

BTreePtr bt(const std::string& text) { return parse_binary_tree(text, xyz()); }
PTreePtr pt(const std::string& text) { return parse_planar_tree(text, xyz()); }

std::string phi_text(const std::string& tree) {
  return render_word(phi(bt(tree)), xyz());
}

std::string psi_text(const std::string& tree) {
  return render_word(psi(pt(tree)), xyz());
}

std::string op_text(DendKind kind, const std::string& a, const std::string& b) {
  BTreeSum r = btree_op(kind, BTreeSum::single(bt(a)), BTreeSum::single(bt(b)));
  return render_btree_sum(r, xyz());
}

std::string pop_text(DendKind kind, const std::string& a, const std::string& b) {
  PTreeSum r = ptree_op(kind, PTreeSum::single(pt(a)), PTreeSum::single(pt(b)));
  return render_ptree_sum(r, xyz());
}

}  // namespace

TEST_CASE("tree text round-trips") {
  for (const char* text : {"|", "(|^x|)", "((|^x|)^y|)", "(|^x(|^y|))",
                           "((|^x|)^y(|^z|))", "(((|^z|)^z|)^z(|^z|))"}) {
    BTreePtr t = bt(text);
    CHECK(render_tree(*t, xyz()) == text);
  }
  for (const char* text :
       {"|", "V(|,x,|)", "V(|,x,|,y,|)", "V(V(|,x,|),y,|)", "V(|,x,V(|,y,|),z,|)",
        "V(V(|,x,|,y,|),z,V(|,x,|))"}) {
    PTreePtr t = pt(text);
    CHECK(render_tree(*t, xyz()) == text);
  }
}

TEST_CASE("tree parsing rejects malformed text") {
  CHECK_THROWS_AS(bt("(|^w|)"), DomainError);
  CHECK_THROWS_AS(bt("(|^x"), ParseError);
  CHECK_THROWS_AS(bt("(|x|)"), ParseError);
  CHECK_THROWS_AS(bt(""), ParseError);
  CHECK_THROWS_AS(bt("(|^x|) junk"), ParseError);
  CHECK_THROWS_AS(pt("V(|)"), ParseError);
  CHECK_THROWS_AS(pt("V(|,x)"), ParseError);
  CHECK_THROWS_AS(pt("V(|,x,|"), ParseError);
  CHECK_THROWS_AS(pt("V(|,w,|)"), DomainError);
}

TEST_CASE("grades count internal structure") {
  CHECK(bt("|")->vertices() == 0);
  CHECK(bt("((|^x|)^y(|^z|))")->vertices() == 3);
  CHECK(bt("((|^x|)^y(|^z|))")->leaves() == 4);
  CHECK(pt("|")->grade() == 0);
  CHECK(pt("V(|,x,|,y,|)")->grade() == 2);
  CHECK(pt("V(|,x,V(|,y,|),z,|)")->leaves() == 4);
  CHECK(pt("V(|,x,V(|,y,|),z,|)")->decorations().size() == 2);
}

TEST_CASE("binary tree counts follow the Catalan numbers") {
  const std::size_t catalan[] = {1, 1, 2, 5, 14};
  Alphabet one({"x"});
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(enumerate_binary_trees(n, one).size() == catalan[n]);
  }
  std::size_t scale = 1;
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(enumerate_binary_trees(n, xyz()).size() == catalan[n] * scale);
    scale *= 3;
  }
}

TEST_CASE("planar tree counts follow the super-Catalan numbers") {
  const std::size_t super[] = {1, 1, 3, 11, 45};
  Alphabet one({"x"});
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(enumerate_planar_trees(n, one).size() == super[n]);
  }
  CHECK(enumerate_planar_trees(2, xyz()).size() == 3 * 9);
  CHECK(enumerate_planar_trees(3, xyz()).size() == 11 * 27);
}

TEST_CASE("enumeration is strictly ordered and capped") {
  auto binary = enumerate_binary_trees(3, xyz());
  for (std::size_t i = 1; i < binary.size(); ++i) {
    CHECK(compare_btrees(*binary[i - 1], *binary[i]) == std::strong_ordering::less);
  }
  auto planar = enumerate_planar_trees(3, xyz());
  for (std::size_t i = 1; i < planar.size(); ++i) {
    CHECK(compare_ptrees(*planar[i - 1], *planar[i]) == std::strong_ordering::less);
  }
  CHECK_THROWS_AS(enumerate_binary_trees(4, xyz(), 100), LimitError);
  CHECK_THROWS_AS(enumerate_planar_trees(4, xyz(), 100), LimitError);
}

TEST_CASE("word image of binary trees") {
  CHECK(phi_text("(|^x|)") == "x");
  CHECK(phi_text("((|^x|)^y|)") == "[x] y");
  CHECK(phi_text("(|^x(|^y|))") == "x [y]");
  CHECK(phi_text("((|^x|)^y(|^z|))") == "[x] y [z]");
  CHECK(phi_text("(((|^x|)^y|)^z|)") == "[[x] y] z");
  CHECK_THROWS_AS(phi(BinaryTree::leaf()), DomainError);
}

TEST_CASE("word image of planar trees") {
  CHECK(psi_text("V(|,x,|)") == "x");
  CHECK(psi_text("V(|,x,|,y,|)") == "x.y");
  CHECK(psi_text("V(V(|,x,|),y,|)") == "[x] y");
  CHECK(psi_text("V(|,x,V(|,y,|))") == "x [y]");
  CHECK(psi_text("V(|,x,V(|,y,|),z,|)") == "x [y] z");
  CHECK(psi_text("V(|,x,|,y,V(|,z,|))") == "x.y [z]");
  CHECK(psi_text("V(V(|,x,|),y,|,z,|)") == "[x] y.z");
  CHECK(psi_text("V(V(|,x,|),y,V(|,z,|))") == "[x] y [z]");
  CHECK_THROWS_AS(psi(PlanarTree::leaf()), DomainError);
}

TEST_CASE("grafting operations on binary trees") {
  CHECK(op_text(DendKind::prec, "(|^x|)", "(|^y|)") == "(|^x(|^y|))");
  CHECK(op_text(DendKind::succ, "(|^x|)", "(|^y|)") == "((|^x|)^y|)");
  CHECK(op_text(DendKind::star, "(|^x|)", "(|^y|)") == "(|^x(|^y|)) + ((|^x|)^y|)");
  CHECK(op_text(DendKind::prec, "((|^x|)^y|)", "(|^z|)") == "((|^x|)^y(|^z|))");
  CHECK_THROWS_AS(btree_op(DendKind::dot, BTreeSum::single(bt("(|^x|)")),
                           BTreeSum::single(bt("(|^y|)"))),
                  DomainError);
  CHECK_THROWS_AS(btree_op(DendKind::prec_prime, BTreeSum::single(bt("(|^x|)")),
                           BTreeSum::single(bt("(|^y|)"))),
                  DomainError);
  CHECK_THROWS_AS(btree_op(DendKind::prec, BTreeSum::single(BinaryTree::leaf()),
                           BTreeSum::single(bt("(|^y|)"))),
                  DomainError);
}

TEST_CASE("grafting operations on planar trees") {
  CHECK(pop_text(DendKind::dot, "V(|,x,|)", "V(|,y,|)") == "V(|,x,|,y,|)");
  CHECK(pop_text(DendKind::prec, "V(|,x,|)", "V(|,y,|)") == "V(|,x,V(|,y,|))");
  CHECK(pop_text(DendKind::succ, "V(|,x,|)", "V(|,y,|)") == "V(V(|,x,|),y,|)");
  CHECK(pop_text(DendKind::star, "V(|,x,|)", "V(|,y,|)") ==
        "V(|,x,V(|,y,|)) + V(V(|,x,|),y,|) + V(|,x,|,y,|)");
  CHECK(pop_text(DendKind::dot, "V(|,x,V(|,y,|))", "V(|,z,|)") ==
        "V(|,x,V(|,y,|),z,|)");
  CHECK_THROWS_AS(ptree_op(DendKind::prec, PTreeSum::single(PlanarTree::leaf()),
                           PTreeSum::single(pt("V(|,y,|)"))),
                  DomainError);
}

TEST_CASE("the leaf is a unit for the extended star only") {
  BTreeSum t = BTreeSum::single(bt("((|^x|)^y|)"));
  BTreeSum leaf = BTreeSum::single(BinaryTree::leaf());
  CHECK(btree_star_unital(leaf, t) == t);
  CHECK(btree_star_unital(t, leaf) == t);
  PTreeSum p = PTreeSum::single(pt("V(|,x,|,y,|)"));
  PTreeSum pleaf = PTreeSum::single(PlanarTree::leaf());
  CHECK(ptree_star_unital(pleaf, p) == p);
  CHECK(ptree_star_unital(p, pleaf) == p);
}

TEST_CASE("word images intertwine grafting and the induced operations") {
  Alphabet two({"x", "y"});
  FreeRba zero_ctx(BaseAlgebra::zero_product(two), Rational(0));
  FreeRba tensor_ctx(BaseAlgebra::free_monoid(two), Rational(1));
  Rng rng(73);
  for (int i = 0; i < 40; ++i) {
    BTreePtr a = random_btree(rng, two, 1 + rng.below(3));
    BTreePtr b = random_btree(rng, two, 1 + rng.below(3));
    for (DendKind kind : {DendKind::prec, DendKind::succ}) {
      Element lhs =
          phi_image(btree_op(kind, BTreeSum::single(a), BTreeSum::single(b)));
      Element rhs = induced_op(zero_ctx, kind, phi_image(BTreeSum::single(a)),
                               phi_image(BTreeSum::single(b)));
      CHECK(lhs == rhs);
    }
    PTreePtr c = random_ptree(rng, two, 1 + rng.below(3));
    PTreePtr d = random_ptree(rng, two, 1 + rng.below(3));
    for (DendKind kind : {DendKind::prec, DendKind::succ, DendKind::dot}) {
      Element lhs = psi_image(ptree_op(kind, PTreeSum::single(c), PTreeSum::single(d)));
      Element rhs = induced_op(tensor_ctx, kind, psi_image(PTreeSum::single(c)),
                               psi_image(PTreeSum::single(d)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("grafted trees satisfy the splitting axioms") {
  Alphabet two({"x", "y"});
  Rng rng(79);
  BTreeSpace bspace;
  DendOps<BTreeSum> bops = btree_ops();
  for (int i = 0; i < 25; ++i) {
    BTreeSum x = BTreeSum::single(random_btree(rng, two, 1 + rng.below(3)));
    BTreeSum y = BTreeSum::single(random_btree(rng, two, 1 + rng.below(3)));
    BTreeSum z = BTreeSum::single(random_btree(rng, two, 1 + rng.below(3)));
    auto report = check_dialgebra(bspace, bops, x, y, z);
    if (const auto* fail = report.first_failure()) {
      INFO(fail->axiom);
      CHECK(report.pass());
    }
  }
  PTreeSpace pspace;
  DendOps<PTreeSum> pops = ptree_ops();
  for (int i = 0; i < 25; ++i) {
    PTreeSum x = PTreeSum::single(random_ptree(rng, two, 1 + rng.below(3)));
    PTreeSum y = PTreeSum::single(random_ptree(rng, two, 1 + rng.below(3)));
    PTreeSum z = PTreeSum::single(random_ptree(rng, two, 1 + rng.below(3)));
    auto report = check_trialgebra(pspace, pops, x, y, z);
    if (const auto* fail = report.first_failure()) {
      INFO(fail->axiom);
      CHECK(report.pass());
    }
  }
}

TEST_CASE("image words are recognized") {
  BaseAlgebra zero = BaseAlgebra::zero_product(xyz());
  BaseAlgebra tensor = BaseAlgebra::free_monoid(xyz());
  auto di = [&](const std::string& text) { return is_diword(parse_word(text, zero)); };
  auto tri = [&](const std::string& text) {
    return is_triword(parse_word(text, tensor));
  };
  CHECK(di("x"));
  CHECK(di("[x] y"));
  CHECK(di("x [y]"));
  CHECK(di("[x] y [z]"));
  CHECK(di("[[x] y] z"));
  CHECK_FALSE(di("[x]"));
  CHECK_FALSE(di("[[x] y]"));
  CHECK_FALSE(di("x [y] z"));
  CHECK_FALSE(di("[[x]] y"));
  CHECK_FALSE(di("x [[x] y [z]] y"));
  CHECK_THROWS_AS(is_diword(parse_word("x.y", tensor)), DomainError);

  CHECK(tri("x"));
  CHECK(tri("x.y"));
  CHECK(tri("x [y] z"));
  CHECK(tri("x.y [z]"));
  CHECK(tri("[x] y.z"));
  CHECK(tri("x [y.z [x]] y"));
  CHECK(tri("x [[x] y] z"));
  CHECK_FALSE(tri("[x]"));
  CHECK_FALSE(tri("[x.y]"));
  CHECK_FALSE(tri("[[x]] y"));
  CHECK_FALSE(tri("x [[y]] z"));
}

TEST_CASE("image characterization matches the enumerated images") {
  Alphabet two({"x", "y"});
  BaseAlgebra zero = BaseAlgebra::zero_product(two);
  BaseAlgebra tensor = BaseAlgebra::free_monoid(two);
  for (std::size_t n = 1; n <= 3; ++n) {
    std::set<std::string> binary_images;
    for (const BTreePtr& t : enumerate_binary_trees(n, two)) {
      CHECK(binary_images.insert(render_word(phi(t), two)).second);
    }
    WordEnumConfig cfg;
    cfg.max_letters = n;
    cfg.max_depth = n;
    std::set<std::string> predicate_words;
    for (const Word& w : enumerate_words(zero, cfg)) {
      if (w.letter_count() == n && is_diword(w)) {
        predicate_words.insert(render_word(w, two));
      }
    }
    CHECK(binary_images == predicate_words);

    std::set<std::string> planar_images;
    for (const PTreePtr& t : enumerate_planar_trees(n, two)) {
      CHECK(planar_images.insert(render_word(psi(t), two)).second);
    }
    std::set<std::string> tri_predicate;
    for (const Word& w : enumerate_words(tensor, cfg)) {
      if (w.letter_count() == n && is_triword(w)) {
        tri_predicate.insert(render_word(w, two));
      }
    }
    CHECK(planar_images == tri_predicate);
  }
}
