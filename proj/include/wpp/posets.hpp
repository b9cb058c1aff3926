#pragma once

// Double posets and weak plane posets.
//
// A double poset is a finite set with two partial orders <=1 and <=2. It is
// weak plane when no two distinct elements are related by both orders and
// the union of the two orders, written ≼ here, is a total quasi-order. Every
// weak plane poset then carries the total order ≪ given by
// (y <=1 x or x <=2 y), which labels it canonically.
//
// Elements are 0-based indices into [0, n).

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wpp/packed_word.hpp"
#include "wpp/relation.hpp"

namespace wpp {

class DoublePoset {
 public:
  DoublePoset() = default;

  // Both relations must be partial orders on the same ground set.
  DoublePoset(Relation order1, Relation order2);

  // Builds the orders as reflexive-transitive closures of the given pairs.
  static DoublePoset from_pairs(
      std::size_t n,
      const std::vector<std::pair<std::size_t, std::size_t>>& pairs1,
      const std::vector<std::pair<std::size_t, std::size_t>>& pairs2);

  std::size_t size() const { return order1_.size(); }
  bool leq1(std::size_t i, std::size_t j) const { return order1_(i, j); }
  bool leq2(std::size_t i, std::size_t j) const { return order2_(i, j); }
  const Relation& order1() const { return order1_; }
  const Relation& order2() const { return order2_; }

  // Element i becomes relabel[i]; relabel must be a permutation of [0, n).
  DoublePoset relabeled(const std::vector<std::size_t>& relabel) const;

  friend bool operator==(const DoublePoset&, const DoublePoset&) = default;

 private:
  Relation order1_;
  Relation order2_;
};

// Which defining condition of a weak plane poset fails, with 0-based
// witness elements.
struct AxiomViolation {
  // 1: some x != y has x <=1 y and x <=2 y.      witness (x, y)
  // 2: ≼ is not total (witness (x, y)) or not transitive (witness (x, y, z)).
  int axiom = 0;
  std::vector<std::size_t> witness;
  std::string message;
};

class WeakPlanePoset {
 public:
  // The empty poset.
  WeakPlanePoset() = default;

  const DoublePoset& base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  bool leq1(std::size_t i, std::size_t j) const { return base_.leq1(i, j); }
  bool leq2(std::size_t i, std::size_t j) const { return base_.leq2(i, j); }

  // x ≼ y iff x <=1 y or x <=2 y.
  bool precsim(std::size_t i, std::size_t j) const { return quasi_(i, j); }
  bool equiv(std::size_t i, std::size_t j) const {
    return quasi_(i, j) && quasi_(j, i);
  }
  // x ≪ y iff y <=1 x or x <=2 y.
  bool ll(std::size_t i, std::size_t j) const { return total_(i, j); }

  const Relation& quasi_order() const { return quasi_; }
  const Relation& total_order() const { return total_; }

  // ≡-classes listed in increasing ≼ order, each sorted.
  std::vector<std::vector<std::size_t>> classes() const;

  friend bool operator==(const WeakPlanePoset& a, const WeakPlanePoset& b) {
    return a.base_ == b.base_;
  }

 private:
  friend std::variant<WeakPlanePoset, AxiomViolation> check_weak_plane(
      const DoublePoset& p);

  DoublePoset base_;
  Relation quasi_;
  Relation total_;
};

using WeakPlaneCheck = std::variant<WeakPlanePoset, AxiomViolation>;

WeakPlaneCheck check_weak_plane(const DoublePoset& p);

// As check_weak_plane, but a violation is thrown as a ValidationError.
WeakPlanePoset as_weak_plane(const DoublePoset& p);

// True iff every ≡-class is a singleton.
bool is_plane(const WeakPlanePoset& p);

// The weak plane poset of a packed word w:
//   i <=1 j  iff  i >= j and w(i) <= w(j)
//   i <=2 j  iff  i <= j and w(i) <= w(j)
WeakPlanePoset dp(const PackedWord& w);

// Isomorphic copy whose ≪ is the natural order of [0, n).
WeakPlanePoset canonicalize(const WeakPlanePoset& p);

// Inverse of dp on isomorphism classes.
PackedWord pack_poset(const WeakPlanePoset& p);

bool isomorphic(const WeakPlanePoset& p, const WeakPlanePoset& q);

// Disjoint union with q shifted by p.size(); <=2 also gains every pair
// (i in p, j in q).
DoublePoset product(const DoublePoset& p, const DoublePoset& q);
WeakPlanePoset product(const WeakPlanePoset& p, const WeakPlanePoset& q);

// The <=1-up-closed subsets, in increasing order of their bit masks.
std::vector<Subset> open_sets(const DoublePoset& p);
bool is_open(const DoublePoset& p, Subset x);

DoublePoset restrict(const DoublePoset& p, Subset x);
WeakPlanePoset restrict(const WeakPlanePoset& p, Subset x);

// (restrict to complement of O, restrict to O) for every open set O, both
// factors canonicalized, in the order of open_sets().
std::vector<std::pair<WeakPlanePoset, WeakPlanePoset>> coproduct_terms(
    const WeakPlanePoset& p);

// Swaps the two orders.
DoublePoset iota(const DoublePoset& p);
WeakPlanePoset iota(const WeakPlanePoset& p);

// Bijections f: p -> q with (i <=1 j => f(i) <=2 f(j)) and
// (f(i) <=1 f(j) => i <=2 j).
std::size_t count_pictures(const DoublePoset& p, const DoublePoset& q);
inline std::size_t count_pictures(const WeakPlanePoset& p,
                                  const WeakPlanePoset& q) {
  return count_pictures(p.base(), q.base());
}

}  // namespace wpp
