#pragma once

#include <string>
#include <vector>

#include "rbax/algebra_concepts.hpp"
#include "rbax/errors.hpp"
#include "rbax/free_rba.hpp"

namespace rbax {

// The operator-respecting algebra morphism out of the free algebra fixed by
// a choice of generator images: letters map through the base, brackets map
// through the target operator, factors multiply in order.
//
// Requires equal weights. For bases with relations (zero product, finite
// table) the images must satisfy those relations in the target; this is
// checked on every generator pair up front and reported with a witness.
template <RotaBaxterAlgebra A>
class RbaMorphism {
 public:
  using Target = typename A::Element;

  RbaMorphism(const FreeRba& src, const A& dst, std::vector<Target> images)
      : src_(&src), dst_(&dst), images_(std::move(images)) {
    if (!(Rational(dst.weight()) == src.weight())) {
      throw DomainError("weight mismatch between free algebra and target");
    }
    if (images_.size() != src.alphabet().size()) {
      throw DomainError("generator image count does not match the alphabet");
    }
    validate_base_relations();
  }

  Target apply_letter(const Letter& l) const {
    Target out = images_.at(l.parts()[0].index);
    for (std::size_t i = 1; i < l.parts().size(); ++i) {
      out = dst_->mul(out, images_.at(l.parts()[i].index));
    }
    return out;
  }

  Target apply_word(const Word& w) const {
    Target out = apply_factor(w.factors()[0]);
    for (std::size_t i = 1; i < w.factors().size(); ++i) {
      out = dst_->mul(out, apply_factor(w.factors()[i]));
    }
    return out;
  }

  Target apply(const Element& e) const {
    Target out = dst_->zero();
    for (const auto& [w, c] : e.terms()) {
      out = dst_->add(out, dst_->scale(c, apply_word(w)));
    }
    return out;
  }

 private:
  Target apply_factor(const Factor& f) const {
    if (f.is_letter()) return apply_letter(f.letter());
    return dst_->rb(apply_word(f.bracket()));
  }

  void validate_base_relations() const {
    const BaseAlgebra& base = src_->base();
    if (base.kind() == BaseKind::free_monoid) return;
    std::size_t n = base.alphabet().size();
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        Letter x{Generator{i}};
        Letter y{Generator{j}};
        Target image_of_product = apply_base(base.mult(x, y));
        Target product_of_images = dst_->mul(images_[i], images_[j]);
        if (!equal(*dst_, image_of_product, product_of_images)) {
          throw DomainError("generator images break base multiplicativity on (" +
                            base.alphabet().name(Generator{i}) + ", " +
                            base.alphabet().name(Generator{j}) + ")");
        }
      }
    }
  }

  Target apply_base(const BaseElement& e) const {
    Target out = dst_->zero();
    for (const auto& [l, c] : e.terms()) {
      out = dst_->add(out, dst_->scale(c, apply_letter(l)));
    }
    return out;
  }

  const FreeRba* src_;
  const A* dst_;
  std::vector<Target> images_;
};

template <RotaBaxterAlgebra A>
typename A::Element eval_morphism(const FreeRba& ctx, const A& dst,
                                  const std::vector<typename A::Element>& gen_map,
                                  const Element& e) {
  return RbaMorphism<A>(ctx, dst, gen_map).apply(e);
}

}  // namespace rbax
