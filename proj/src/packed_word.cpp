#include "wpp/packed_word.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "wpp/error.hpp"

namespace wpp {

namespace {

Letter max_of(std::span<const Letter> word) {
  return word.empty() ? 0 : *std::max_element(word.begin(), word.end());
}

}  // namespace

bool is_packed(std::span<const Letter> word) {
  Letter const k = max_of(word);
  if (k > word.size()) {
    return false;
  }
  std::vector<bool> seen(k + 1, false);
  for (Letter x : word) {
    if (x == 0) {
      return false;
    }
    seen[x] = true;
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

PackedWord::PackedWord(std::vector<Letter> letters)
    : letters_(std::move(letters)), max_(max_of(letters_)) {
  if (!is_packed(letters_)) {
    std::string text;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      text += (i ? "," : "") + std::to_string(letters_[i]);
    }
    throw ValidationError("not a packed word: " + text);
  }
}

std::strong_ordering operator<=>(const PackedWord& a, const PackedWord& b) {
  if (auto c = a.size() <=> b.size(); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(),
                                                b.end());
}

std::string PackedWord::to_string() const {
  std::string out;
  if (max_ <= 9) {
    for (Letter x : letters_) {
      out += static_cast<char>('0' + x);
    }
    return out;
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) {
      out += ',';
    }
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw ValidationError("malformed word '" + std::string(text) +
                              "': expected digits 1-9");
      }
      out.push_back(static_cast<Letter>(c - '0'));
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find(',', start);
    if (stop == std::string_view::npos) {
      stop = text.size();
    }
    std::string_view field = text.substr(start, stop - start);
    Letter value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() ||
        ptr != field.data() + field.size() || value == 0) {
      throw ValidationError("malformed word '" + std::string(text) +
                            "': bad letter '" + std::string(field) + "'");
    }
    out.push_back(value);
    start = stop + 1;
  }
  return out;
}

PackedWord PackedWord::parse(std::string_view text) {
  return PackedWord(parse_letters(text));
}

std::ostream& operator<<(std::ostream& os, const PackedWord& w) {
  return os << (w.empty() ? std::string("()") : w.to_string());
}

PackedWord pack(std::span<const Letter> word) {
  std::vector<Letter> distinct(word.begin(), word.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  std::vector<Letter> out;
  out.reserve(word.size());
  for (Letter x : word) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), x);
    out.push_back(static_cast<Letter>(it - distinct.begin()) + 1);
  }
  return PackedWord(std::move(out));
}

namespace {

// Depth-first in increasing letter order. A prefix is extended only while
// the letters still missing below its maximum fit in the remaining slots,
// so every leaf is a packed word.
class Enumerator {
 public:
  Enumerator(std::size_t n, const std::function<void(const PackedWord&)>& visit)
      : n_(n), visit_(visit), count_(n + 2, 0) {
    word_.reserve(n);
  }

  void run() { extend(0, 0); }

 private:
  void extend(Letter max, std::size_t missing) {
    std::size_t const remaining = n_ - word_.size();
    if (remaining == 0) {
      visit_(PackedWord(word_));
      return;
    }
    for (Letter x = 1; x <= n_; ++x) {
      Letter new_max = std::max(max, x);
      std::size_t new_missing = missing;
      if (x > max) {
        new_missing += x - max - 1;
      } else if (count_[x] == 0) {
        --new_missing;
      }
      if (new_missing > remaining - 1) {
        continue;
      }
      word_.push_back(x);
      ++count_[x];
      extend(new_max, new_missing);
      --count_[x];
      word_.pop_back();
    }
  }

  std::size_t n_;
  const std::function<void(const PackedWord&)>& visit_;
  std::vector<Letter> word_;
  std::vector<std::size_t> count_;
};

}  // namespace

void for_each_packed_word(std::size_t n,
                          const std::function<void(const PackedWord&)>& visit) {
  if (n > kMaxEnumerationLength) {
    throw CapacityError("enumeration of packed words of length " +
                        std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kMaxEnumerationLength));
  }
  Enumerator(n, visit).run();
}

std::vector<PackedWord> enumerate(std::size_t n) {
  std::vector<PackedWord> out;
  if (n <= kMaxEnumerationLength) {
    out.reserve(fubini(n));
  }
  for_each_packed_word(n, [&](const PackedWord& w) { out.push_back(w); });
  return out;
}

std::uint64_t fubini(std::size_t n) {
  // a(m) = sum_{j=1..m} C(m, j) a(m - j)
  std::vector<std::uint64_t> a(n + 1, 0);
  a[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    std::uint64_t binom = 1;
    for (std::size_t j = 1; j <= m; ++j) {
      binom = binom * (m - j + 1) / j;
      a[m] += binom * a[m - j];
    }
  }
  return a[n];
}

OrderedSetPartition to_quasi_order(const PackedWord& w) {
  OrderedSetPartition p;
  p.blocks.resize(w.max_letter());
  for (std::size_t i = 0; i < w.size(); ++i) {
    p.blocks[w[i] - 1].push_back(i + 1);
  }
  return p;
}

PackedWord from_quasi_order(const OrderedSetPartition& p) {
  std::size_t n = 0;
  for (const auto& block : p.blocks) {
    if (block.empty()) {
      throw ValidationError("ordered set partition has an empty block");
    }
    n += block.size();
  }
  std::vector<Letter> letters(n, 0);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    for (std::size_t pos : p.blocks[b]) {
      if (pos == 0 || pos > n) {
        throw ValidationError("position " + std::to_string(pos) +
                              " outside [1, " + std::to_string(n) + "]");
      }
      if (letters[pos - 1] != 0) {
        throw ValidationError("position " + std::to_string(pos) +
                              " occurs in two blocks");
      }
      letters[pos - 1] = static_cast<Letter>(b + 1);
    }
  }
  return PackedWord(std::move(letters));
}

}  // namespace wpp
