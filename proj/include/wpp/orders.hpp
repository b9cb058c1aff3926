#pragma once

// Orders on PW(n), linear and weak linear extensions of weak plane posets,
// and covering graphs of the two orders.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wpp/packed_word.hpp"
#include "wpp/posets.hpp"

namespace wpp {

// f <= g iff
//   (1) i >= j and f(i) <= f(j)  =>  g(i) <= g(j)
//   (2) g(i) = g(j)              =>  f(i) = f(j)
// Throws ValidationError if the lengths differ.
bool leq_lin(const PackedWord& f, const PackedWord& g);

// g ⪯ f iff
//   (1) f(i) <= f(j)             =>  g(i) <= g(j)
//   (2) i < j and f(i) > f(j)    =>  g(i) > g(j)
// so that psi(f) is the sum of the g with prec(g, f).
bool prec(const PackedWord& g, const PackedWord& f);

// Pairs (i, j), 0-based, with i < j and f(i) > f(j).
std::vector<std::pair<std::size_t, std::size_t>> inversion_set(
    const PackedWord& f);

// Surjections f with (i <=1 j => f(i) <= f(j)) and (f(i) = f(j) => i ≡ j),
// read on the canonical labeling of p; sorted lexicographically.
std::vector<PackedWord> lin_extensions(const WeakPlanePoset& p);

// As lin_extensions, but only <=1-related elements are kept in distinct
// fibers unless equivalent.
std::vector<PackedWord> weak_lin_extensions(const WeakPlanePoset& p);

enum class WordOrderKind { lin, fm };

std::string_view to_string(WordOrderKind kind);

inline constexpr std::size_t kMaxOrderDegree = 6;

// A partial order on PW(n) with its full relation matrix.
class WordOrder {
 public:
  WordOrder(std::size_t n, WordOrderKind kind);

  std::size_t degree() const { return n_; }
  WordOrderKind kind() const { return kind_; }
  const std::vector<PackedWord>& basis() const { return basis_; }
  std::size_t index_of(const PackedWord& w) const;
  // basis[a] <= basis[b]
  bool leq(std::size_t a, std::size_t b) const {
    return (rows_[a * words_ + b / 64] >> (b % 64)) & 1u;
  }
  // Indices b with basis[a] <= basis[b], increasing.
  std::vector<std::size_t> up_set(std::size_t a) const;
  // Indices a with basis[a] <= basis[b], increasing.
  std::vector<std::size_t> down_set(std::size_t b) const;

  // Covering pairs (a, b) as basis indices, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  std::size_t n_;
  WordOrderKind kind_;
  std::vector<PackedWord> basis_;
  std::size_t words_;                // 64-bit words per row
  std::vector<std::uint64_t> rows_;  // rows_[a * words_ + ...] = up-set bits
};

// Shared instance per (n, kind); n <= kMaxOrderDegree.
const WordOrder& word_order(std::size_t n, WordOrderKind kind);

struct HasseDiagram {
  std::size_t n = 0;
  WordOrderKind kind = WordOrderKind::lin;
  std::vector<PackedWord> nodes;                           // lexicographic
  std::vector<std::pair<PackedWord, PackedWord>> edges;    // (lower, upper)
};

HasseDiagram hasse(std::size_t n, WordOrderKind kind);

// One node per word, one edge lower -> upper per covering pair.
std::string to_dot(const HasseDiagram& h);

}  // namespace wpp
