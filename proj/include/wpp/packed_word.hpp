#pragma once

// Packed words: words over {1, ..., k} using every letter at least once.
// A packed word of length n is the value sequence of a surjection [n] -> [k].

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wpp {

using Letter = std::uint32_t;

class PackedWord {
 public:
  PackedWord() = default;

  // Throws ValidationError unless the letters form a packed word.
  explicit PackedWord(std::vector<Letter> letters);
  PackedWord(std::initializer_list<Letter> letters)
      : PackedWord(std::vector<Letter>(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  // The largest letter k; 0 for the empty word.
  Letter max_letter() const noexcept { return max_; }

  // 0-based access.
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Compact digit form ("212312") when k <= 9, comma-separated otherwise.
  // The empty word prints as "".
  std::string to_string() const;

  // Accepts either textual form; commas select the comma-separated form.
  static PackedWord parse(std::string_view text);

  friend bool operator==(const PackedWord&, const PackedWord&) = default;

  // Graded lexicographic: shorter words first, then lexicographic letters.
  friend std::strong_ordering operator<=>(const PackedWord& a,
                                          const PackedWord& b);

 private:
  std::vector<Letter> letters_;
  Letter max_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PackedWord& w);

// Ordered set partition of [n]; block p holds the 1-based positions of
// letter p + 1.
struct OrderedSetPartition {
  std::vector<std::vector<std::size_t>> blocks;

  friend bool operator==(const OrderedSetPartition&,
                         const OrderedSetPartition&) = default;
};

bool is_packed(std::span<const Letter> word);

// Replaces each letter by its rank among the distinct letters present.
PackedWord pack(std::span<const Letter> word);

// Parses a word that need not be packed ("5,2,5,9" or "5259").
std::vector<Letter> parse_letters(std::string_view text);

// Largest length accepted by enumerate().
inline constexpr std::size_t kMaxEnumerationLength = 9;

// All packed words of length n in lexicographic order.
std::vector<PackedWord> enumerate(std::size_t n);

// Streams the packed words of length n, lexicographically, to the visitor.
void for_each_packed_word(std::size_t n,
                          const std::function<void(const PackedWord&)>& visit);

// Number of packed words of length n (ordered Bell / Fubini number).
std::uint64_t fubini(std::size_t n);

OrderedSetPartition to_quasi_order(const PackedWord& w);
PackedWord from_quasi_order(const OrderedSetPartition& p);

}  // namespace wpp
