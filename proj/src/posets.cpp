#include "wpp/posets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wpp/error.hpp"
#include "wpp/fault.hpp"

namespace wpp {

namespace {

std::string one_based(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

DoublePoset::DoublePoset(Relation order1, Relation order2)
    : order1_(std::move(order1)), order2_(std::move(order2)) {
  if (order1_.size() != order2_.size()) {
    throw ValidationError("the two orders live on ground sets of different "
                          "sizes");
  }
  if (!order1_.is_partial_order()) {
    throw ValidationError("rel1 is not a partial order");
  }
  if (!order2_.is_partial_order()) {
    throw ValidationError("rel2 is not a partial order");
  }
}

DoublePoset DoublePoset::from_pairs(
    std::size_t n,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs1,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs2) {
  auto build = [n](const auto& pairs, const char* name) {
    Relation r = Relation::identity(n);
    for (auto [i, j] : pairs) {
      if (i >= n || j >= n) {
        throw ValidationError(std::string(name) + " pair (" + one_based(i) +
                              "," + one_based(j) + ") outside [1, " +
                              std::to_string(n) + "]");
      }
      r.insert(i, j);
    }
    r = r.transitive_closure();
    if (!r.is_antisymmetric()) {
      throw ValidationError(std::string(name) + " contains a cycle");
    }
    return r;
  };
  return DoublePoset(build(pairs1, "rel1"), build(pairs2, "rel2"));
}

DoublePoset DoublePoset::relabeled(const std::vector<std::size_t>& relabel) const {
  return DoublePoset(order1_.relabeled(relabel), order2_.relabeled(relabel));
}

std::vector<std::vector<std::size_t>> WeakPlanePoset::classes() const {
  // Elements with the same number of ≼-predecessors are equivalent.
  std::size_t const n = size();
  Relation const below = quasi_.transposed();
  std::vector<std::pair<std::size_t, std::size_t>> keyed;
  for (std::size_t i = 0; i < n; ++i) {
    keyed.emplace_back(below.row(i).size(), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < keyed.size(); ++a) {
    if (a == 0 || keyed[a].first != keyed[a - 1].first) {
      out.emplace_back();
    }
    out.back().push_back(keyed[a].second);
  }
  return out;
}

WeakPlaneCheck check_weak_plane(const DoublePoset& p) {
  std::size_t const n = p.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && p.leq1(x, y) && p.leq2(x, y)) {
        return AxiomViolation{1, {x, y},
                              "axiom (1) fails: " + one_based(x) +
                                  " <=1 " + one_based(y) + " and " +
                                  one_based(x) + " <=2 " + one_based(y)};
      }
    }
  }
  Relation const quasi = p.order1() | p.order2();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!quasi(x, y) && !quasi(y, x)) {
        return AxiomViolation{2, {x, y},
                              "axiom (2) fails: " + one_based(x) + " and " +
                                  one_based(y) + " are incomparable"};
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y : quasi.row(x).elements()) {
      for (std::size_t z : quasi.row(y).elements()) {
        if (!quasi(x, z)) {
          return AxiomViolation{
              2, {x, y, z},
              "axiom (2) fails: " + one_based(x) + " ≼ " + one_based(y) +
                  " ≼ " + one_based(z) + " but not " + one_based(x) + " ≼ " +
                  one_based(z)};
        }
      }
    }
  }
  Relation total = p.order1().transposed() | p.order2();
  if (!total.is_partial_order()) {
    // Cannot happen once (1) and (2) hold.
    throw std::logic_error("≪ is not an order on a weak plane poset");
  }
  WeakPlanePoset out;
  out.base_ = p;
  out.quasi_ = quasi;
  out.total_ = std::move(total);
  return out;
}

WeakPlanePoset as_weak_plane(const DoublePoset& p) {
  auto check = check_weak_plane(p);
  if (auto* v = std::get_if<AxiomViolation>(&check)) {
    throw ValidationError("not a weak plane poset: " + v->message);
  }
  return std::get<WeakPlanePoset>(std::move(check));
}

bool is_plane(const WeakPlanePoset& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p.equiv(i, j)) {
        return false;
      }
    }
  }
  return true;
}

WeakPlanePoset dp(const PackedWord& w) {
  std::size_t const n = w.size();
  Relation r1(n);
  Relation r2(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (w[i] <= w[j]) {
        if (i >= j) {
          r1.insert(i, j);
        }
        if (i <= j) {
          r2.insert(i, j);
        }
      }
    }
  }
  return as_weak_plane(DoublePoset(std::move(r1), std::move(r2)));
}

WeakPlanePoset canonicalize(const WeakPlanePoset& p) {
  // ≪ is total, so an element's rank is its number of strict predecessors.
  Relation const before = p.total_order().transposed();
  std::vector<std::size_t> rank(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    rank[i] = before.row(i).size() - 1;
  }
  return as_weak_plane(p.base().relabeled(rank));
}

PackedWord pack_poset(const WeakPlanePoset& p) {
  WeakPlanePoset const c = canonicalize(p);
  Relation const below = c.quasi_order().transposed();
  std::vector<Letter> counts(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    counts[i] = static_cast<Letter>(below.row(i).size());
  }
  return pack(counts);
}

bool isomorphic(const WeakPlanePoset& p, const WeakPlanePoset& q) {
  return canonicalize(p) == canonicalize(q);
}

DoublePoset product(const DoublePoset& p, const DoublePoset& q) {
  std::size_t const np = p.size();
  std::size_t const n = np + q.size();
  Relation r1(n);
  Relation r2(n);
  for (auto [i, j] : p.order1().strict_pairs()) r1.insert(i, j);
  for (auto [i, j] : p.order2().strict_pairs()) r2.insert(i, j);
  for (auto [i, j] : q.order1().strict_pairs()) r1.insert(np + i, np + j);
  for (auto [i, j] : q.order2().strict_pairs()) r2.insert(np + i, np + j);
  bool const reversed = active_fault() == Fault::product_cross_relation;
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = np; j < n; ++j) {
      if (reversed) {
        r2.insert(j, i);
      } else {
        r2.insert(i, j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    r1.insert(i, i);
    r2.insert(i, i);
  }
  return DoublePoset(std::move(r1), std::move(r2));
}

WeakPlanePoset product(const WeakPlanePoset& p, const WeakPlanePoset& q) {
  return as_weak_plane(product(p.base(), q.base()));
}

bool is_open(const DoublePoset& p, Subset x) {
  // Open sets are <=1-up-closed; the fault flips them to down-closed.
  Relation const& order = active_fault() == Fault::open_set_predicate
                              ? p.order1().transposed()
                              : p.order1();
  for (std::size_t i : x.elements()) {
    if (!order.row(i).is_subset_of(x)) {
      return false;
    }
  }
  return true;
}

std::vector<Subset> open_sets(const DoublePoset& p) {
  constexpr std::size_t kMaxOpenSetScan = 24;
  std::size_t const n = p.size();
  if (n > kMaxOpenSetScan) {
    throw CapacityError("open set scan over " + std::to_string(n) +
                        " elements exceeds the limit of " +
                        std::to_string(kMaxOpenSetScan));
  }
  std::vector<Subset> out;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    if (is_open(p, Subset(bits))) {
      out.push_back(Subset(bits));
    }
  }
  return out;
}

DoublePoset restrict(const DoublePoset& p, Subset x) {
  if (!x.is_subset_of(Subset::full(p.size()))) {
    throw ValidationError("restriction set has elements outside [1, " +
                          std::to_string(p.size()) + "]");
  }
  return DoublePoset(p.order1().restricted(x), p.order2().restricted(x));
}

WeakPlanePoset restrict(const WeakPlanePoset& p, Subset x) {
  return as_weak_plane(restrict(p.base(), x));
}

std::vector<std::pair<WeakPlanePoset, WeakPlanePoset>> coproduct_terms(
    const WeakPlanePoset& p) {
  std::vector<std::pair<WeakPlanePoset, WeakPlanePoset>> out;
  for (Subset open : open_sets(p.base())) {
    out.emplace_back(canonicalize(restrict(p, open.complement(p.size()))),
                     canonicalize(restrict(p, open)));
  }
  return out;
}

DoublePoset iota(const DoublePoset& p) {
  return DoublePoset(p.order2(), p.order1());
}

WeakPlanePoset iota(const WeakPlanePoset& p) {
  return as_weak_plane(iota(p.base()));
}

namespace {

// Assigns images in index order of p, pruning the domains of unassigned
// elements after every choice.
class PictureCounter {
 public:
  PictureCounter(const DoublePoset& p, const DoublePoset& q)
      : p_(p), q_(q), n_(p.size()),
        reflect_(active_fault() != Fault::picture_condition) {}

  std::size_t count() {
    std::vector<Subset> domains(n_, Subset::full(n_));
    return extend(0, Subset(), domains);
  }

 private:
  // Can i -> a and k -> b coexist in a picture?
  bool compatible(std::size_t i, std::size_t a, std::size_t k,
                  std::size_t b) const {
    if (p_.leq1(i, k) && !q_.leq2(a, b)) return false;
    if (p_.leq1(k, i) && !q_.leq2(b, a)) return false;
    if (reflect_) {
      if (q_.leq1(a, b) && !p_.leq2(i, k)) return false;
      if (q_.leq1(b, a) && !p_.leq2(k, i)) return false;
    }
    return true;
  }

  std::size_t extend(std::size_t i, Subset used,
                     const std::vector<Subset>& domains) {
    if (i == n_) {
      return 1;
    }
    std::size_t total = 0;
    Subset const choices = domains[i] & used.complement(n_);
    for (std::size_t a : choices.elements()) {
      std::vector<Subset> next = domains;
      bool dead = false;
      for (std::size_t k = i + 1; k < n_ && !dead; ++k) {
        Subset kept;
        for (std::size_t b : next[k].elements()) {
          if (b != a && compatible(i, a, k, b)) {
            kept.insert(b);
          }
        }
        next[k] = kept;
        dead = kept.empty();
      }
      if (dead) {
        continue;
      }
      Subset used_next = used;
      used_next.insert(a);
      total += extend(i + 1, used_next, next);
    }
    return total;
  }

  const DoublePoset& p_;
  const DoublePoset& q_;
  std::size_t n_;
  bool reflect_;
};

}  // namespace

std::size_t count_pictures(const DoublePoset& p, const DoublePoset& q) {
  if (p.size() != q.size()) {
    return 0;
  }
  return PictureCounter(p, q).count();
}

}  // namespace wpp
