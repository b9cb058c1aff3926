#include "wpp/hwpp.hpp"

#include "wpp/posets.hpp"

namespace wpp {

PackedWord hwpp_product(const PackedWord& u, const PackedWord& v) {
  return pack_poset(product(dp(u), dp(v)));
}

ModuleElement hwpp_product(const ModuleElement& x, const ModuleElement& y) {
  return bilinear(x, y, [](const PackedWord& u, const PackedWord& v) {
    return basis(hwpp_product(u, v));
  });
}

TensorElement hwpp_coproduct(const PackedWord& w) {
  TensorElement out;
  for (const auto& [rest, open] : coproduct_terms(dp(w))) {
    out.add(WordPair(pack_poset(rest), pack_poset(open)), 1);
  }
  return out;
}

TensorElement hwpp_coproduct(const ModuleElement& x) {
  return linear_to_tensor(x, [](const PackedWord& w) { return hwpp_coproduct(w); });
}

Coeff pairing(const PackedWord& u, const PackedWord& v) {
  if (u.size() != v.size()) return 0;
  return static_cast<Coeff>(count_pictures(dp(u), dp(v)));
}

Coeff pairing(const ModuleElement& x, const ModuleElement& y) {
  Coeff total = 0;
  for (const auto& [u, a] : x) {
    for (const auto& [v, b] : y) {
      if (u.size() != v.size()) continue;
      total = checked_add(total, checked_mul(checked_mul(a, b), pairing(u, v)));
    }
  }
  return total;
}

}  // namespace wpp
