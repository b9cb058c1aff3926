#include "wpp/relation.hpp"

#include <cassert>

#include "wpp/error.hpp"

namespace wpp {

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

Relation::Relation(std::size_t n) : rows_(n) {
  if (n > kMaxGroundSet) {
    throw CapacityError("ground set of size " + std::to_string(n) +
                        " exceeds the limit of " +
                        std::to_string(kMaxGroundSet));
  }
}

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.insert(i, i);
  }
  return r;
}

Relation Relation::transposed() const {
  Relation t(size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : rows_[i].elements()) {
      t.insert(j, i);
    }
  }
  return t;
}

Relation Relation::transitive_closure() const {
  Relation c = *this;
  // Warshall on bit rows.
  for (std::size_t k = 0; k < size(); ++k) {
    for (std::size_t i = 0; i < size(); ++i) {
      if (c.rows_[i].contains(k)) {
        c.rows_[i] = c.rows_[i] | c.rows_[k];
      }
    }
  }
  return c;
}

Relation Relation::restricted(Subset x) const {
  auto const elems = x.elements();
  assert(elems.empty() || elems.back() < size());
  Relation r(elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if ((*this)(elems[a], elems[b])) {
        r.insert(a, b);
      }
    }
  }
  return r;
}

Relation Relation::relabeled(const std::vector<std::size_t>& relabel) const {
  Relation r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : rows_[i].elements()) {
      r.insert(relabel[i], relabel[j]);
    }
  }
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : rows_[i].elements()) {
      if (i != j) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

bool Relation::is_reflexive() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (!rows_[i].contains(i)) {
      return false;
    }
  }
  return true;
}

bool Relation::is_transitive() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : rows_[i].elements()) {
      if (!rows_[j].is_subset_of(rows_[i])) {
        return false;
      }
    }
  }
  return true;
}

bool Relation::is_antisymmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : rows_[i].elements()) {
      if (i != j && rows_[j].contains(i)) {
        return false;
      }
    }
  }
  return true;
}

Relation operator|(const Relation& a, const Relation& b) {
  assert(a.size() == b.size());
  Relation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.rows_[i] = a.rows_[i] | b.rows_[i];
  }
  return r;
}

Relation operator&(const Relation& a, const Relation& b) {
  assert(a.size() == b.size());
  Relation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.rows_[i] = a.rows_[i] & b.rows_[i];
  }
  return r;
}

}  // namespace wpp
