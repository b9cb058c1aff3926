#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wpp/error.hpp"
#include "wpp/posets.hpp"

using namespace wpp;

namespace {

PackedWord W(const char* s) { return PackedWord::parse(s); }

DoublePoset make(std::size_t n,
                 std::vector<std::pair<std::size_t, std::size_t>> r1,
                 std::vector<std::pair<std::size_t, std::size_t>> r2) {
  return DoublePoset::from_pairs(n, r1, r2);
}

}  // namespace

TEST_SUITE_BEGIN("posets");

TEST_CASE("double poset construction validates orders") {
  Relation cyc = Relation::identity(2);
  cyc.insert(0, 1);
  cyc.insert(1, 0);
  CHECK_THROWS_AS(DoublePoset(cyc, Relation::identity(2)), ValidationError);
  CHECK_THROWS_AS(DoublePoset(Relation(2), Relation::identity(2)),
                  ValidationError);
  CHECK_THROWS_AS(make(2, {{0, 1}, {1, 0}}, {}), ValidationError);
  CHECK_THROWS_AS(make(2, {{0, 2}}, {}), ValidationError);
  // Pairs are closed transitively.
  CHECK(make(3, {{0, 1}, {1, 2}}, {}).leq1(0, 2));
}

TEST_CASE("check_weak_plane") {
  SUBCASE("singleton") {
    CHECK(std::holds_alternative<WeakPlanePoset>(
        check_weak_plane(make(1, {}, {}))));
  }
  SUBCASE("dp(21) is accepted with ≪ the natural order") {
    auto r = check_weak_plane(make(2, {{1, 0}}, {}));
    REQUIRE(std::holds_alternative<WeakPlanePoset>(r));
    auto const& p = std::get<WeakPlanePoset>(r);
    CHECK(p.ll(0, 1));
    CHECK_FALSE(p.ll(1, 0));
  }
  SUBCASE("discrete orders violate axiom 2") {
    auto r = check_weak_plane(make(2, {}, {}));
    REQUIRE(std::holds_alternative<AxiomViolation>(r));
    auto const& v = std::get<AxiomViolation>(r);
    CHECK(v.axiom == 2);
    CHECK(v.witness == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("a pair related by both orders violates axiom 1") {
    auto r = check_weak_plane(make(2, {{0, 1}}, {{0, 1}}));
    REQUIRE(std::holds_alternative<AxiomViolation>(r));
    CHECK(std::get<AxiomViolation>(r).axiom == 1);
    CHECK(std::get<AxiomViolation>(r).witness == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("non-transitive ≼ violates axiom 2 with a triple") {
    // 1 <=1 2, 2 <=2 3, 3 <=1 1: every pair comparable but 1 ≼ 3 fails.
    auto r = check_weak_plane(make(3, {{0, 1}, {2, 0}}, {{1, 2}}));
    REQUIRE(std::holds_alternative<AxiomViolation>(r));
    auto const& v = std::get<AxiomViolation>(r);
    CHECK(v.axiom == 2);
    CHECK(v.witness.size() == 3);
  }
  CHECK_THROWS_AS(as_weak_plane(make(2, {}, {})), ValidationError);
}

TEST_CASE("is_plane") {
  CHECK(is_plane(dp(W("12"))));
  CHECK_FALSE(is_plane(dp(W("11"))));
  CHECK(is_plane(WeakPlanePoset()));
}

TEST_CASE("dp small cases") {
  auto const p1 = dp(W("1"));
  CHECK(p1.size() == 1);
  CHECK(p1.base().order1().strict_pairs().empty());
  CHECK(p1.base().order2().strict_pairs().empty());

  auto const p21 = dp(W("21"));
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(p21.base().order1().strict_pairs() == Pairs{{1, 0}});
  CHECK(p21.base().order2().strict_pairs().empty());

  auto const p11 = dp(W("11"));
  CHECK(p11.base().order1().strict_pairs() == Pairs{{1, 0}});
  CHECK(p11.base().order2().strict_pairs() == Pairs{{0, 1}});
}

TEST_CASE("dp: ≼ follows the letters and ≪ the positions") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_packed_word(n, [n](const PackedWord& w) {
      auto const p = dp(w);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(p.precsim(i, j) == (w[i] <= w[j]));
          CHECK(p.ll(i, j) == (i <= j));
        }
      }
    });
  }
}

TEST_CASE("pack_poset") {
  CHECK(pack_poset(WeakPlanePoset()) == PackedWord());
  CHECK(pack_poset(dp(W("212312"))) == W("212312"));
  CHECK(pack_poset(product(dp(W("1")), dp(W("21")))) == W("132"));
}

TEST_CASE("bijection: pack_poset inverts dp") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_packed_word(n, [](const PackedWord& w) {
      CHECK(pack_poset(dp(w)) == w);
    });
  }
}

TEST_CASE("canonicalize recovers dp(w) from relabeled copies") {
  std::mt19937 rng(11);
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_packed_word(n, [&](const PackedWord& w) {
      auto const p = dp(w);
      CHECK(canonicalize(p) == p);
      auto const shuffled =
          as_weak_plane(p.base().relabeled(oracle::random_permutation(n, rng)));
      CHECK(canonicalize(shuffled) == p);
      CHECK(canonicalize(canonicalize(shuffled)) == canonicalize(shuffled));
      CHECK(pack_poset(shuffled) == w);
    });
  }
}

TEST_CASE("dp is faithful up to isomorphism") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto const words = enumerate(n);
    for (const auto& u : words) {
      for (const auto& v : words) {
        CHECK(isomorphic(dp(u), dp(v)) == (u == v));
      }
    }
  }
}

TEST_CASE("product") {
  auto const p = dp(W("212"));
  CHECK(product(p, WeakPlanePoset()) == p);
  CHECK(product(WeakPlanePoset(), p) == p);
  CHECK(pack_poset(product(dp(W("1")), dp(W("1")))) == W("12"));
  CHECK(pack_poset(product(dp(W("1")), dp(W("21")))) == W("132"));
}

TEST_CASE("product preserves weak-plane-ness and is associative") {
  for (std::size_t a = 0; a <= 5; ++a) {
    for (std::size_t b = 0; a + b <= 5; ++b) {
      for (const auto& u : enumerate(a)) {
        for (const auto& v : enumerate(b)) {
          DoublePoset const uv = product(dp(u).base(), dp(v).base());
          CHECK(std::holds_alternative<WeakPlanePoset>(check_weak_plane(uv)));
          for (std::size_t c = 0; a + b + c <= 5; ++c) {
            for (const auto& w : enumerate(c)) {
              auto const x = dp(u), y = dp(v), z = dp(w);
              CHECK(product(product(x, y), z) == product(x, product(y, z)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("open sets") {
  CHECK(open_sets(DoublePoset()) == std::vector<Subset>{Subset()});
  CHECK(open_sets(dp(W("12")).base()).size() == 4);
  CHECK(open_sets(dp(W("21")).base()) ==
        std::vector<Subset>{Subset(), Subset::of({0}), Subset::of({0, 1})});
}

TEST_CASE("open sets form a lattice containing ∅ and the whole set") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_packed_word(n, [n](const PackedWord& w) {
      auto const opens = open_sets(dp(w).base());
      auto has = [&](Subset s) {
        return std::find(opens.begin(), opens.end(), s) != opens.end();
      };
      CHECK(has(Subset()));
      CHECK(has(Subset::full(n)));
      for (Subset a : opens) {
        for (Subset b : opens) {
          CHECK(has(a | b));
          CHECK(has(a & b));
        }
      }
    });
  }
}

TEST_CASE("restrict") {
  auto const p = dp(W("212312"));
  CHECK(restrict(p, Subset::full(6)) == p);
  CHECK(pack_poset(restrict(p, Subset::of({1, 3}))) == W("12"));
  CHECK(restrict(p.base(), Subset()) == DoublePoset());
  CHECK_THROWS_AS(restrict(dp(W("12")).base(), Subset::of({2})), ValidationError);
  // Every restriction of a weak plane poset is weak plane.
  for (std::uint32_t bits = 0; bits < 64; ++bits) {
    CHECK(std::holds_alternative<WeakPlanePoset>(
        check_weak_plane(restrict(p.base(), Subset(bits)))));
  }
}

TEST_CASE("coproduct terms") {
  auto const empty = coproduct_terms(WeakPlanePoset());
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].first.size() == 0);
  CHECK(empty[0].second.size() == 0);

  auto words_of = [](const WeakPlanePoset& p) {
    std::multiset<std::pair<PackedWord, PackedWord>> out;
    for (const auto& [a, b] : coproduct_terms(p)) {
      out.emplace(pack_poset(a), pack_poset(b));
    }
    return out;
  };
  using Terms = std::multiset<std::pair<PackedWord, PackedWord>>;
  CHECK(words_of(dp(W("12"))) == Terms{{W("12"), W("")},
                                       {W("1"), W("1")},
                                       {W("1"), W("1")},
                                       {W(""), W("12")}});
  CHECK(words_of(dp(W("21"))) ==
        Terms{{W("21"), W("")}, {W("1"), W("1")}, {W(""), W("21")}});
  // Factors come back canonical.
  for (const auto& [a, b] : coproduct_terms(dp(W("2131")))) {
    CHECK(canonicalize(a) == a);
    CHECK(canonicalize(b) == b);
  }
}

TEST_CASE("iota") {
  auto const p12 = dp(W("12"));
  CHECK(iota(iota(p12)) == p12);
  CHECK(iota(WeakPlanePoset()).size() == 0);
  auto const i12 = iota(p12);
  CHECK(i12.leq1(0, 1));
  CHECK(i12.ll(1, 0));
  CHECK(pack_poset(i12) == W("21"));
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_packed_word(n, [](const PackedWord& w) {
      auto const p = dp(w);
      CHECK(std::holds_alternative<WeakPlanePoset>(check_weak_plane(iota(p.base()))));
      CHECK(iota(iota(p)) == p);
    });
  }
}

TEST_CASE("count_pictures") {
  CHECK(count_pictures(dp(W("11")), dp(W("11"))) == 1);
  CHECK(count_pictures(dp(W("12")), dp(W("12"))) == 2);
  CHECK(count_pictures(dp(W("21")), dp(W("21"))) == 0);
  CHECK(count_pictures(dp(W("1")), dp(W("12"))) == 0);
  CHECK(count_pictures(WeakPlanePoset(), WeakPlanePoset()) == 1);
}

TEST_CASE("count_pictures agrees with n! enumeration and is symmetric") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto const words = enumerate(n);
    for (const auto& u : words) {
      for (const auto& v : words) {
        auto const p = dp(u), q = dp(v);
        std::size_t const c = count_pictures(p, q);
        CHECK(c == oracle::count_pictures(p.base(), q.base()));
        CHECK(c == count_pictures(q, p));
      }
    }
  }
  // Spot checks in degree 6 against the brute force.
  std::mt19937 rng(3);
  auto const words6 = enumerate(6);
  for (int trial = 0; trial < 40; ++trial) {
    auto const& u = words6[rng() % words6.size()];
    auto const& v = words6[rng() % words6.size()];
    CHECK(count_pictures(dp(u), dp(v)) ==
          oracle::count_pictures(dp(u).base(), dp(v).base()));
  }
}

// Over all double posets on at most three elements: a total ≪ forces axiom 1
// but not axiom 2.
TEST_CASE("a total ≪ implies axiom 1 but not axiom 2") {
  bool found_witness = false;
  for (std::size_t n = 0; n <= 3; ++n) {
    auto const orders = oracle::partial_orders(n);
    for (const auto& r1 : orders) {
      for (const auto& r2 : orders) {
        DoublePoset const p(r1, r2);
        Relation const ll = r1.transposed() | r2;
        bool total = ll.is_partial_order();
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) total &= ll(x, y) || ll(y, x);
        if (!total) continue;
        auto const check = check_weak_plane(p);
        if (auto* v = std::get_if<AxiomViolation>(&check)) {
          CHECK(v->axiom != 1);
          found_witness = true;
        }
      }
    }
  }
  CHECK(found_witness);
  // Smallest witness: 1 <=1 2 and 2 <=2 3 <=2 1.
  DoublePoset const w = make(3, {{0, 1}}, {{1, 0}, {1, 2}, {2, 0}});
  auto const check = check_weak_plane(w);
  REQUIRE(std::holds_alternative<AxiomViolation>(check));
  CHECK(std::get<AxiomViolation>(check).axiom == 2);
}

TEST_SUITE_END();
