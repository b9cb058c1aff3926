#include "doctest.h"
#include "oracles.hpp"
#include "wpp/hwpp.hpp"

using namespace wpp;

namespace {
PackedWord W(const char* s) { return PackedWord::parse(s); }
}  // namespace

TEST_SUITE_BEGIN("hwpp");

TEST_CASE("product examples") {
  CHECK(hwpp_product(W("1"), W("1")) == W("12"));
  CHECK(hwpp_product(W("1"), W("21")) == W("132"));
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& w : enumerate(n)) {
      CHECK(hwpp_product(PackedWord(), w) == w);
      CHECK(hwpp_product(w, PackedWord()) == w);
    }
  }
  ModuleElement const x = basis(W("1")) + 2 * basis(W("21"));
  CHECK(hwpp_product(basis(PackedWord()), x) == x);
}

TEST_CASE("product degrees add and the product is associative") {
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; a + b <= 4; ++b) {
      for (std::size_t c = 0; a + b + c <= 4; ++c) {
        for (const auto& u : enumerate(a)) {
          for (const auto& v : enumerate(b)) {
            CHECK(hwpp_product(u, v).size() == a + b);
            for (const auto& w : enumerate(c)) {
              CHECK(hwpp_product(hwpp_product(u, v), w) ==
                    hwpp_product(u, hwpp_product(v, w)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("coproduct examples") {
  CHECK(hwpp_coproduct(PackedWord()) == tensor(PackedWord(), PackedWord()));
  CHECK(hwpp_coproduct(W("12")) == tensor(W("12"), PackedWord()) +
                                       2 * tensor(W("1"), W("1")) +
                                       tensor(PackedWord(), W("12")));
  CHECK(hwpp_coproduct(W("21")) == tensor(W("21"), PackedWord()) +
                                       tensor(W("1"), W("1")) +
                                       tensor(PackedWord(), W("21")));
}

TEST_CASE("coproduct term count equals the number of open sets") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& w : enumerate(n)) {
      Coeff total = 0;
      for (const auto& [pair, c] : hwpp_coproduct(w)) {
        CHECK(pair.first.size() + pair.second.size() == n);
        total += c;
      }
      CHECK(total == static_cast<Coeff>(open_sets(dp(w).base()).size()));
    }
  }
}

TEST_CASE("pairing examples") {
  CHECK(pairing(W("12"), W("12")) == 2);
  CHECK(pairing(W("1"), PackedWord()) == 0);
  CHECK(pairing(W("12"), PackedWord()) == 0);
  CHECK(pairing(PackedWord(), PackedWord()) == 1);
  CHECK(pairing(basis(W("11")) + basis(W("12")), basis(W("21"))) == 1);
  CHECK(pairing(3 * basis(W("12")), basis(W("12")) - basis(W("11"))) == 3);
}

TEST_CASE("degree-2 pairing matrix") {
  auto const b = enumerate(2);
  std::vector<std::vector<Coeff>> m;
  for (const auto& r : b) {
    m.emplace_back();
    for (const auto& c : b) m.back().push_back(pairing(r, c));
  }
  CHECK(m == std::vector<std::vector<Coeff>>{{1, 1, 0}, {1, 2, 1}, {0, 1, 0}});
}

TEST_CASE("pairing matches brute-force pictures") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& u : enumerate(n)) {
      for (const auto& v : enumerate(n)) {
        CHECK(pairing(u, v) ==
              static_cast<Coeff>(oracle::count_pictures(dp(u).base(), dp(v).base())));
      }
    }
  }
}

TEST_SUITE_END();
