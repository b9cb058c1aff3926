#pragma once

// Finitely supported integer combinations of packed words and of pairs of
// packed words. Arithmetic is checked: overflow throws std::overflow_error.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "wpp/packed_word.hpp"

namespace wpp {

using Coeff = std::int64_t;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

template <typename Key>
class FreeModule {
 public:
  using map_type = std::map<Key, Coeff>;

  FreeModule() = default;
  explicit FreeModule(Key key, Coeff c = 1) { add(std::move(key), c); }

  void add(const Key& key, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  const map_type& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  FreeModule& operator+=(const FreeModule& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  FreeModule& operator-=(const FreeModule& other) {
    for (const auto& [k, c] : other.terms_) add(k, checked_mul(c, -1));
    return *this;
  }
  friend FreeModule operator+(FreeModule a, const FreeModule& b) { return a += b; }
  friend FreeModule operator-(FreeModule a, const FreeModule& b) { return a -= b; }
  friend FreeModule operator-(const FreeModule& a) { return Coeff{-1} * a; }
  friend FreeModule operator*(Coeff s, const FreeModule& a) {
    FreeModule out;
    if (s == 0) return out;
    for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, checked_mul(s, c));
    return out;
  }

  friend bool operator==(const FreeModule&, const FreeModule&) = default;

 private:
  map_type terms_;
};

// Combination of packed words (read in whichever basis the caller means).
using ModuleElement = FreeModule<PackedWord>;
using WordPair = std::pair<PackedWord, PackedWord>;
// Combination of ordered pairs: the tensor square.
using TensorElement = FreeModule<WordPair>;

inline ModuleElement basis(const PackedWord& w) { return ModuleElement(w); }
inline TensorElement tensor(const PackedWord& a, const PackedWord& b) {
  return TensorElement(WordPair(a, b));
}

// Extends f: PackedWord -> ModuleElement linearly.
template <typename F>
ModuleElement linear_map(const ModuleElement& x, F&& f) {
  ModuleElement out;
  for (const auto& [w, c] : x) out += c * f(w);
  return out;
}

// Extends f: PackedWord -> TensorElement linearly.
template <typename F>
TensorElement linear_to_tensor(const ModuleElement& x, F&& f) {
  TensorElement out;
  for (const auto& [w, c] : x) out += c * f(w);
  return out;
}

// Extends f: (PackedWord, PackedWord) -> ModuleElement bilinearly.
template <typename F>
ModuleElement bilinear(const ModuleElement& x, const ModuleElement& y, F&& f) {
  ModuleElement out;
  for (const auto& [u, a] : x) {
    for (const auto& [v, b] : y) out += checked_mul(a, b) * f(u, v);
  }
  return out;
}

// (f ⊗ g)(t) for linear maps given on basis words.
template <typename F, typename G>
TensorElement tensor_map(const TensorElement& t, F&& f, G&& g) {
  TensorElement out;
  for (const auto& [pair, c] : t) {
    ModuleElement const left = f(pair.first);
    ModuleElement const right = g(pair.second);
    for (const auto& [u, a] : left) {
      for (const auto& [v, b] : right) {
        out.add(WordPair(u, v), checked_mul(c, checked_mul(a, b)));
      }
    }
  }
  return out;
}

// Product in the tensor square: (a ⊗ b)(c ⊗ d) = ac ⊗ bd.
template <typename Mul>
TensorElement tensor_product(const TensorElement& s, const TensorElement& t,
                             Mul&& mul) {
  TensorElement out;
  for (const auto& [p, c1] : s) {
    for (const auto& [q, c2] : t) {
      ModuleElement const left = mul(p.first, q.first);
      ModuleElement const right = mul(p.second, q.second);
      Coeff const c = checked_mul(c1, c2);
      for (const auto& [u, a] : left) {
        for (const auto& [v, b] : right) {
          out.add(WordPair(u, v), checked_mul(c, checked_mul(a, b)));
        }
      }
    }
  }
  return out;
}

// Homogeneous component of degree n.
ModuleElement component(const ModuleElement& x, std::size_t n);

// "2*12 - 21 + ()" style; "0" for the zero element.
std::string to_string(const ModuleElement& x);
std::string to_string(const TensorElement& t);
std::ostream& operator<<(std::ostream& os, const ModuleElement& x);
std::ostream& operator<<(std::ostream& os, const TensorElement& t);

}  // namespace wpp
