#include "wpp/orders.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "wpp/error.hpp"

namespace wpp {

namespace {

void require_same_length(const PackedWord& f, const PackedWord& g) {
  if (f.size() != g.size()) {
    throw ValidationError("words " + f.to_string() + " and " + g.to_string() +
                          " have different lengths");
  }
}

// Backtracking over value assignments f(0), f(1), ... in 1..n; `allowed`
// vets each new value against every earlier one, and prefixes that can no
// longer become packed are cut.
template <typename PairTest>
std::vector<PackedWord> surjections(std::size_t n, PairTest allowed) {
  std::vector<PackedWord> out;
  std::vector<Letter> f;
  std::vector<std::size_t> count(n + 2, 0);
  f.reserve(n);
  auto extend = [&](auto&& self, Letter max, std::size_t missing) -> void {
    std::size_t const i = f.size();
    if (i == n) {
      out.emplace_back(f);
      return;
    }
    for (Letter x = 1; x <= n; ++x) {
      std::size_t new_missing = missing;
      if (x > max) {
        new_missing += x - max - 1;
      } else if (count[x] == 0) {
        --new_missing;
      }
      if (new_missing > n - i - 1) {
        continue;
      }
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = allowed(i, x, j, f[j]);
      }
      if (!ok) {
        continue;
      }
      f.push_back(x);
      ++count[x];
      self(self, std::max(max, x), new_missing);
      --count[x];
      f.pop_back();
    }
  };
  extend(extend, 0, 0);
  return out;
}

}  // namespace

bool leq_lin(const PackedWord& f, const PackedWord& g) {
  require_same_length(f, g);
  std::size_t const n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i >= j && f[i] <= f[j] && g[i] > g[j]) {
        return false;
      }
      if (g[i] == g[j] && f[i] != f[j]) {
        return false;
      }
    }
  }
  return true;
}

bool prec(const PackedWord& g, const PackedWord& f) {
  require_same_length(f, g);
  std::size_t const n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (f[i] <= f[j] && g[i] > g[j]) {
        return false;
      }
      if (i < j && f[i] > f[j] && g[i] <= g[j]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> inversion_set(
    const PackedWord& f) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[i] > f[j]) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::vector<PackedWord> lin_extensions(const WeakPlanePoset& p) {
  WeakPlanePoset const c = canonicalize(p);
  return surjections(c.size(), [&](std::size_t i, Letter fi, std::size_t j,
                                   Letter fj) {
    if (c.leq1(i, j) && fi > fj) return false;
    if (c.leq1(j, i) && fj > fi) return false;
    return fi != fj || c.equiv(i, j);
  });
}

std::vector<PackedWord> weak_lin_extensions(const WeakPlanePoset& p) {
  WeakPlanePoset const c = canonicalize(p);
  return surjections(c.size(), [&](std::size_t i, Letter fi, std::size_t j,
                                   Letter fj) {
    if (c.leq1(i, j) && fi > fj) return false;
    if (c.leq1(j, i) && fj > fi) return false;
    bool const related = c.leq1(i, j) || c.leq1(j, i);
    return !related || fi != fj || c.equiv(i, j);
  });
}

std::string_view to_string(WordOrderKind kind) {
  return kind == WordOrderKind::lin ? "lin" : "fm";
}

WordOrder::WordOrder(std::size_t n, WordOrderKind kind)
    : n_(n), kind_(kind) {
  if (n > kMaxOrderDegree) {
    throw CapacityError("order on PW(" + std::to_string(n) +
                        ") exceeds the degree limit of " +
                        std::to_string(kMaxOrderDegree));
  }
  basis_ = enumerate(n);
  std::size_t const size = basis_.size();
  words_ = (size + 63) / 64;
  rows_.assign(size * words_, 0);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      bool const below = kind == WordOrderKind::lin
                             ? leq_lin(basis_[a], basis_[b])
                             : prec(basis_[a], basis_[b]);
      if (below) {
        rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
      }
    }
  }
}

std::size_t WordOrder::index_of(const PackedWord& w) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), w);
  if (it == basis_.end() || *it != w) {
    throw ValidationError("word " + w.to_string() + " is not in PW(" +
                          std::to_string(n_) + ")");
  }
  return static_cast<std::size_t>(it - basis_.begin());
}

std::vector<std::size_t> WordOrder::up_set(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    if (leq(a, b)) out.push_back(b);
  }
  return out;
}

std::vector<std::size_t> WordOrder::down_set(std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    if (leq(a, b)) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> WordOrder::covers() const {
  // a < b is a cover iff no c has a < c < b: collect the strict up-sets of
  // a's strict successors and keep the successors outside them.
  std::size_t const size = basis_.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<std::uint64_t> reach(words_);
  for (std::size_t a = 0; a < size; ++a) {
    std::fill(reach.begin(), reach.end(), 0);
    for (std::size_t c = 0; c < size; ++c) {
      if (c == a || !leq(a, c)) continue;
      const std::uint64_t* row = &rows_[c * words_];
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = row[w];
        if (w == c / 64) bits &= ~(std::uint64_t{1} << (c % 64));
        reach[w] |= bits;
      }
    }
    for (std::size_t b = 0; b < size; ++b) {
      if (b != a && leq(a, b) && !((reach[b / 64] >> (b % 64)) & 1u)) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

const WordOrder& word_order(std::size_t n, WordOrderKind kind) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, WordOrderKind>,
                  std::unique_ptr<WordOrder>>
      cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, kind}];
  if (!slot) {
    slot = std::make_unique<WordOrder>(n, kind);
  }
  return *slot;
}

HasseDiagram hasse(std::size_t n, WordOrderKind kind) {
  const WordOrder& order = word_order(n, kind);
  HasseDiagram h;
  h.n = n;
  h.kind = kind;
  h.nodes = order.basis();
  for (auto [a, b] : order.covers()) {
    h.edges.emplace_back(h.nodes[a], h.nodes[b]);
  }
  return h;
}

std::string to_dot(const HasseDiagram& h) {
  auto label = [](const PackedWord& w) { return "\"" + w.to_string() + "\""; };
  std::ostringstream out;
  out << "digraph \"PW(" << h.n << ", " << to_string(h.kind) << ")\" {\n";
  for (const auto& w : h.nodes) {
    out << "  " << label(w) << ";\n";
  }
  for (const auto& [lower, upper] : h.edges) {
    out << "  " << label(lower) << " -> " << label(upper) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wpp
