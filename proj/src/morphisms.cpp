#include "wpp/morphisms.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <utility>

#include "wpp/error.hpp"
#include "wpp/hwpp.hpp"
#include "wpp/orders.hpp"
#include "wpp/posets.hpp"

namespace wpp {

namespace {

ModuleElement sum_of(const std::vector<PackedWord>& words) {
  ModuleElement out;
  for (const auto& w : words) out.add(w, 1);
  return out;
}

// Möbius function mu(a, b) for the fixed endpoint `a` and every b >= a
// (upward == true) or for the fixed top `a` and every b <= a.
std::vector<std::pair<std::size_t, Coeff>> mobius_from(const WordOrder& order,
                                                       std::size_t a,
                                                       bool upward) {
  std::vector<std::size_t> interval =
      upward ? order.up_set(a) : order.down_set(a);
  auto below = [&](std::size_t x, std::size_t y) {
    return upward ? order.leq(x, y) : order.leq(y, x);
  };
  // Order the interval by the number of interval elements beneath, which
  // strictly increases along the order.
  std::vector<std::pair<std::size_t, std::size_t>> keyed;
  for (std::size_t y : interval) {
    std::size_t rank = 0;
    for (std::size_t x : interval) rank += below(x, y);
    keyed.emplace_back(rank, y);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::pair<std::size_t, Coeff>> mu;
  for (auto [rank, y] : keyed) {
    Coeff value = y == a ? 1 : 0;
    for (auto [x, m] : mu) {
      if (below(x, y)) value = checked_add(value, -m);
    }
    mu.emplace_back(y, value);
  }
  return mu;
}

ModuleElement invert_zeta(const PackedWord& w, WordOrderKind kind, bool upward) {
  const WordOrder& order = word_order(w.size(), kind);
  ModuleElement out;
  for (auto [b, m] : mobius_from(order, order.index_of(w), upward)) {
    out.add(order.basis()[b], m);
  }
  return out;
}

void require_degree(std::size_t n) {
  if (n > kMaxMatrixDegree) {
    throw CapacityError("matrix of degree " + std::to_string(n) +
                        " exceeds the limit of " +
                        std::to_string(kMaxMatrixDegree));
  }
}

IntMatrix map_matrix(std::size_t n, ModuleElement (*map)(const PackedWord&)) {
  auto basis_words = enumerate(n);
  IntMatrix m(basis_words);
  for (std::size_t c = 0; c < basis_words.size(); ++c) {
    for (const auto& [w, coeff] : map(basis_words[c])) {
      auto it = std::lower_bound(basis_words.begin(), basis_words.end(), w);
      m.at(static_cast<std::size_t>(it - basis_words.begin()), c) = coeff;
    }
  }
  return m;
}

constexpr std::array<std::pair<MatrixKind, std::string_view>, 8> kKindNames{{
    {MatrixKind::phi, "phi"},
    {MatrixKind::phi_prime, "phiprime"},
    {MatrixKind::psi, "psi"},
    {MatrixKind::phi_inverse, "phi-inverse"},
    {MatrixKind::psi_inverse, "psi-inverse"},
    {MatrixKind::pairing, "pairing"},
    {MatrixKind::pairing_shuffle, "pairing-shuffle"},
    {MatrixKind::pairing_dot, "pairing-dot"},
}};

}  // namespace

ModuleElement phi(const PackedWord& f) { return sum_of(lin_extensions(dp(f))); }
ModuleElement phi(const ModuleElement& x) {
  return linear_map(x, [](const PackedWord& f) { return phi(f); });
}

ModuleElement psi(const PackedWord& f) {
  ModuleElement out;
  for_each_packed_word(f.size(), [&](const PackedWord& g) {
    if (prec(g, f)) out.add(g, 1);
  });
  return out;
}
ModuleElement psi(const ModuleElement& x) {
  return linear_map(x, [](const PackedWord& f) { return psi(f); });
}

ModuleElement phi_prime(const PackedWord& f) {
  return sum_of(weak_lin_extensions(dp(f)));
}
ModuleElement phi_prime(const ModuleElement& x) {
  return linear_map(x, [](const PackedWord& f) { return phi_prime(f); });
}

// phi(P_f) sums the up-set of f, so phi^-1(g) = sum_{h >= g} mu(g, h) P_h.
ModuleElement phi_inverse(const PackedWord& g) {
  return invert_zeta(g, WordOrderKind::lin, true);
}
ModuleElement phi_inverse(const ModuleElement& x) {
  return linear_map(x, [](const PackedWord& g) { return phi_inverse(g); });
}

// psi(f) sums the down-set of f, so psi^-1(f) = sum_{g ⪯ f} mu(g, f) g.
ModuleElement psi_inverse(const PackedWord& f) {
  return invert_zeta(f, WordOrderKind::fm, false);
}
ModuleElement psi_inverse(const ModuleElement& x) {
  return linear_map(x, [](const PackedWord& f) { return psi_inverse(f); });
}

ModuleElement phi_prime_inverse(const ModuleElement& x) {
  return phi_inverse(psi_inverse(x));
}

Coeff induced_pairing(const PackedWord& u, const PackedWord& v, Via via) {
  if (u.size() != v.size()) return 0;
  auto inverse = [via](const PackedWord& w) {
    return via == Via::phi ? phi_inverse(w) : phi_prime_inverse(basis(w));
  };
  return pairing(inverse(u), inverse(v));
}

std::string_view to_string(MatrixKind kind) {
  for (auto [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view name) {
  for (auto [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

IntMatrix matrix_of(MatrixKind kind, std::size_t n) {
  require_degree(n);
  switch (kind) {
    case MatrixKind::phi:
      return map_matrix(n, [](const PackedWord& f) { return phi(f); });
    case MatrixKind::phi_prime:
      return map_matrix(n, [](const PackedWord& f) { return phi_prime(f); });
    case MatrixKind::psi:
      return map_matrix(n, [](const PackedWord& f) { return psi(f); });
    case MatrixKind::phi_inverse:
      return map_matrix(n, [](const PackedWord& f) { return phi_inverse(f); });
    case MatrixKind::psi_inverse:
      return map_matrix(n, [](const PackedWord& f) { return psi_inverse(f); });
    case MatrixKind::pairing: {
      auto words = enumerate(n);
      IntMatrix m(words);
      for (std::size_t r = 0; r < words.size(); ++r) {
        for (std::size_t c = 0; c < words.size(); ++c) {
          m.at(r, c) = pairing(words[r], words[c]);
        }
      }
      return m;
    }
    case MatrixKind::pairing_shuffle:
    case MatrixKind::pairing_dot: {
      // <u, v> = sum_{a,b} inv(a, u) <P_a, P_b> inv(b, v): inv^T B inv.
      IntMatrix const inv =
          kind == MatrixKind::pairing_shuffle
              ? matrix_of(MatrixKind::phi_inverse, n)
              : matrix_of(MatrixKind::phi_inverse, n) *
                    matrix_of(MatrixKind::psi_inverse, n);
      return inv.transposed() * matrix_of(MatrixKind::pairing, n) * inv;
    }
  }
  throw std::invalid_argument("unknown matrix kind");
}

}  // namespace wpp
