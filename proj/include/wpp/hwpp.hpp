#pragma once

// The Hopf algebra of weak plane posets, in the basis P_w indexed by packed
// words through dp. Every operation goes through the posets themselves and
// reads the result back with pack_poset.

#include "wpp/linear.hpp"
#include "wpp/packed_word.hpp"

namespace wpp {

// P_u P_v = P_w with w = pack_poset(product(dp(u), dp(v))).
PackedWord hwpp_product(const PackedWord& u, const PackedWord& v);
ModuleElement hwpp_product(const ModuleElement& x, const ModuleElement& y);

// Sum over open sets O of dp(w) of P_{w restricted off O} ⊗ P_{w on O}.
TensorElement hwpp_coproduct(const PackedWord& w);
TensorElement hwpp_coproduct(const ModuleElement& x);

// Number of pictures between dp(u) and dp(v).
Coeff pairing(const PackedWord& u, const PackedWord& v);
Coeff pairing(const ModuleElement& x, const ModuleElement& y);

}  // namespace wpp
