#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wpp {

// Ground sets are [0, n) internally with n at most kMaxGroundSet.
inline constexpr std::size_t kMaxGroundSet = 32;

// A subset of a ground set [0, n), as a bit mask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static Subset full(std::size_t n) {
    return Subset(n >= 32 ? ~std::uint32_t{0}
                          : (std::uint32_t{1} << n) - 1);
  }
  static Subset of(std::initializer_list<std::size_t> elements) {
    Subset s;
    for (auto e : elements) {
      s.insert(e);
    }
    return s;
  }

  bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  void insert(std::size_t i) { bits_ |= std::uint32_t{1} << i; }
  std::size_t size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }
  bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  Subset complement(std::size_t n) const { return Subset(full(n).bits_ & ~bits_); }
  std::vector<std::size_t> elements() const;

  friend Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend bool operator==(Subset, Subset) = default;
  friend auto operator<=>(Subset, Subset) = default;

 private:
  std::uint32_t bits_ = 0;
};

// A binary relation on [0, n), stored as one bit row per element:
// row(i) = { j : i R j }.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n);

  static Relation identity(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  bool operator()(std::size_t i, std::size_t j) const { return rows_[i].contains(j); }
  void insert(std::size_t i, std::size_t j) { rows_[i].insert(j); }
  Subset row(std::size_t i) const { return rows_[i]; }

  Relation transposed() const;
  Relation transitive_closure() const;
  // Relation on [0, |x|) induced through the increasing enumeration of x.
  Relation restricted(Subset x) const;
  // Relation with element i renamed to relabel[i].
  Relation relabeled(const std::vector<std::size_t>& relabel) const;

  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;
  bool is_partial_order() const {
    return is_reflexive() && is_antisymmetric() && is_transitive();
  }

  friend bool operator==(const Relation&, const Relation&) = default;

  friend Relation operator|(const Relation& a, const Relation& b);
  friend Relation operator&(const Relation& a, const Relation& b);

 private:
  std::vector<Subset> rows_;
};

}  // namespace wpp
