#pragma once

// The three graded connected Hopf algebras on packed words, behind one
// interface, with counit and antipode.

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "wpp/linear.hpp"

namespace wpp {

enum class Algebra {
  weak_plane_posets,  // H_WPP: poset product, open-set coproduct
  wqsym_shuffle,      // WQSym with the shifted shuffle and value split
  wqsym_dot,          // WQSym with the quasi-shuffle and value split
};

std::string_view to_string(Algebra a);
std::optional<Algebra> parse_algebra(std::string_view name);

struct HopfStructure {
  std::string name;
  std::function<ModuleElement(const PackedWord&, const PackedWord&)> product;
  std::function<TensorElement(const PackedWord&)> coproduct;
};

HopfStructure hopf_structure(Algebra a);

ModuleElement multiply(const HopfStructure& h, const ModuleElement& x,
                       const ModuleElement& y);
TensorElement comultiply(const HopfStructure& h, const ModuleElement& x);

// Coefficient of the empty word.
Coeff counit(const ModuleElement& x);

// S(ε) = ε and S(w) = -w - sum S(w') w'' over the reduced coproduct.
ModuleElement antipode(const HopfStructure& h, const ModuleElement& x);

// m ∘ (S ⊗ id) ∘ Δ and m ∘ (id ⊗ S) ∘ Δ.
ModuleElement left_convolution(const HopfStructure& h, const ModuleElement& x);
ModuleElement right_convolution(const HopfStructure& h, const ModuleElement& x);

}  // namespace wpp
