#pragma once

// Products and coproduct on packed words.
//
// Both products concatenate positions: a term is a word w = w' w'' with
// pack(w') = u and pack(w'') = v. The shifted shuffle keeps the two value
// ranges disjoint (the values of u and of v shifted by max(u) are shuffled);
// the quasi-shuffle also lets values of u and v coincide.

#include "wpp/linear.hpp"
#include "wpp/packed_word.hpp"

namespace wpp {

ModuleElement shifted_shuffle(const PackedWord& u, const PackedWord& v);
ModuleElement shifted_shuffle(const ModuleElement& x, const ModuleElement& y);

ModuleElement qshuffle(const PackedWord& u, const PackedWord& v);
ModuleElement qshuffle(const ModuleElement& x, const ModuleElement& y);

// Value split: sum over k = 0..max(w) of (letters <= k) ⊗ pack(letters > k),
// each side keeping position order.
TensorElement delta_wqsym(const PackedWord& w);
TensorElement delta_wqsym(const ModuleElement& x);

}  // namespace wpp
