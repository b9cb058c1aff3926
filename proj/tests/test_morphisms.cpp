#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "wpp/error.hpp"
#include "wpp/hwpp.hpp"
#include "wpp/morphisms.hpp"
#include "wpp/orders.hpp"
#include "wpp/wqsym.hpp"

using namespace wpp;

namespace {

PackedWord W(const char* s) { return PackedWord::parse(s); }

ModuleElement sum(std::initializer_list<const char*> xs) {
  ModuleElement out;
  for (const char* x : xs) out.add(W(x), 1);
  return out;
}

using Rows = std::vector<std::vector<Coeff>>;

// Images of basis words, built from the brute-force extension filters.
ModuleElement phi_oracle(const PackedWord& f) {
  ModuleElement out;
  for (const auto& g : oracle::extensions(dp(f), false)) out.add(g, 1);
  return out;
}

ModuleElement phi_prime_oracle(const PackedWord& f) {
  ModuleElement out;
  for (const auto& g : oracle::extensions(dp(f), true)) out.add(g, 1);
  return out;
}

TensorElement tensor_apply(const TensorElement& t,
                           ModuleElement (*f)(const PackedWord&)) {
  return tensor_map(t, f, f);
}

}  // namespace

TEST_SUITE_BEGIN("morphisms");

TEST_CASE("map examples") {
  CHECK(phi(PackedWord()) == basis(PackedWord()));
  CHECK(phi(W("11")) == sum({"11", "21"}));
  CHECK(phi(W("21")) == sum({"21"}));
  CHECK(psi(W("12")) == sum({"11", "12"}));
  CHECK(phi_prime(PackedWord()) == basis(PackedWord()));
  CHECK(phi_prime(W("12")) == sum({"11", "12", "21"}));
  CHECK(phi_prime(W("21")) == sum({"21"}));
  CHECK(phi_inverse(PackedWord()) == basis(PackedWord()));
  CHECK(phi_inverse(W("21")) == basis(W("21")));
  CHECK(phi_inverse(W("11")) == basis(W("11")) - basis(W("21")));
}

TEST_CASE("maps agree with the extension oracles") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& f : enumerate(n)) {
      CHECK(phi(f) == phi_oracle(f));
      CHECK(phi_prime(f) == phi_prime_oracle(f));
      CHECK(phi_prime(f) == psi(phi(f)));
    }
  }
}

TEST_CASE("degree-2 matrices") {
  CHECK(matrix_of(MatrixKind::phi, 2).to_rows() == Rows{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
  CHECK(matrix_of(MatrixKind::phi_prime, 2).to_rows() ==
        Rows{{1, 1, 0}, {0, 1, 0}, {1, 1, 1}});
  CHECK(matrix_of(MatrixKind::pairing, 2).to_rows() ==
        Rows{{1, 1, 0}, {1, 2, 1}, {0, 1, 0}});
  CHECK(matrix_of(MatrixKind::pairing_shuffle, 2).to_rows() ==
        Rows{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  CHECK(matrix_of(MatrixKind::pairing_dot, 2).to_rows() ==
        Rows{{1, -1, 0}, {-1, 1, 1}, {0, 1, 0}});
  CHECK(matrix_of(MatrixKind::phi, 0).to_rows() == Rows{{1}});
  CHECK(matrix_of(MatrixKind::phi, 2).row_basis() == enumerate(2));
  CHECK_THROWS_AS(matrix_of(MatrixKind::phi, kMaxMatrixDegree + 1), CapacityError);
}

TEST_CASE("matrix kind names round-trip") {
  for (auto k : {MatrixKind::phi, MatrixKind::phi_prime, MatrixKind::psi,
                 MatrixKind::phi_inverse, MatrixKind::psi_inverse, MatrixKind::pairing,
                 MatrixKind::pairing_shuffle, MatrixKind::pairing_dot}) {
    CHECK(parse_matrix_kind(to_string(k)) == k);
  }
  CHECK_FALSE(parse_matrix_kind("chi").has_value());
}

TEST_CASE("induced pairings") {
  CHECK(induced_pairing(W("11"), W("12"), Via::phi_prime) == -1);
  CHECK(induced_pairing(PackedWord(), PackedWord(), Via::phi) == 1);
  CHECK(induced_pairing(PackedWord(), PackedWord(), Via::phi_prime) == 1);
  for (std::size_t n = 0; n <= 3; ++n) {
    auto const b = enumerate(n);
    auto const ms = matrix_of(MatrixKind::pairing_shuffle, n);
    auto const md = matrix_of(MatrixKind::pairing_dot, n);
    for (std::size_t r = 0; r < b.size(); ++r) {
      for (std::size_t c = 0; c < b.size(); ++c) {
        CHECK(ms.at(r, c) == induced_pairing(b[r], b[c], Via::phi));
        CHECK(md.at(r, c) == induced_pairing(b[r], b[c], Via::phi_prime));
        CHECK(ms.at(r, c) == pairing(phi_inverse(b[r]), phi_inverse(b[c])));
      }
    }
  }
}

TEST_CASE("inverses") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& w : enumerate(n)) {
      CHECK(phi(phi_inverse(w)) == basis(w));
      CHECK(phi_inverse(phi(w)) == basis(w));
      CHECK(psi(psi_inverse(w)) == basis(w));
      CHECK(psi_inverse(psi(w)) == basis(w));
      CHECK(phi_prime(phi_prime_inverse(basis(w))) == basis(w));
      CHECK(phi_prime_inverse(phi_prime(w)) == basis(w));
    }
  }
  for (std::size_t n = 0; n <= kMaxMatrixDegree; ++n) {
    auto const id = IntMatrix::identity(enumerate(n));
    CHECK(matrix_of(MatrixKind::phi, n) * matrix_of(MatrixKind::phi_inverse, n) == id);
    CHECK(matrix_of(MatrixKind::psi, n) * matrix_of(MatrixKind::psi_inverse, n) == id);
  }
  CHECK_THROWS_AS(phi_inverse(PackedWord::parse("1234567")), CapacityError);
}

TEST_CASE("matrix shapes in the lexicographic basis") {
  for (std::size_t n = 0; n <= kMaxMatrixDegree; ++n) {
    auto const m_phi = matrix_of(MatrixKind::phi, n);
    auto const m_psi = matrix_of(MatrixKind::psi, n);
    auto const m_phip = matrix_of(MatrixKind::phi_prime, n);
    CHECK(m_phi.is_lower_unitriangular());
    CHECK(m_psi.is_upper_unitriangular());
    CHECK(m_psi * m_phi == m_phip);
    CHECK(m_phip.determinant() == "1");
  }
  // phi' is a product of a lower and an upper unitriangular matrix and is
  // not itself triangular in this basis.
  auto const m2 = matrix_of(MatrixKind::phi_prime, 2);
  CHECK_FALSE(m2.is_lower_unitriangular());
  CHECK_FALSE(m2.is_upper_unitriangular());
}

TEST_CASE("nondegenerate pairings") {
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(matrix_of(MatrixKind::pairing, n).determinant() != "0");
    CHECK(matrix_of(MatrixKind::pairing_shuffle, n).determinant() != "0");
    CHECK(matrix_of(MatrixKind::pairing_dot, n).determinant() != "0");
  }
}

TEST_CASE("phi and phi' are algebra and coalgebra morphisms") {
  for (std::size_t a = 0; a <= 4; ++a) {
    for (const auto& u : enumerate(a)) {
      CHECK(tensor_apply(hwpp_coproduct(u), &phi_oracle) ==
            delta_wqsym(phi_oracle(u)));
      CHECK(tensor_apply(hwpp_coproduct(u), &phi_prime_oracle) ==
            delta_wqsym(phi_prime_oracle(u)));
      for (std::size_t b = 0; a + b <= 4; ++b) {
        for (const auto& v : enumerate(b)) {
          PackedWord const uv = hwpp_product(u, v);
          CHECK(phi_oracle(uv) ==
                bilinear(phi_oracle(u), phi_oracle(v),
                         [](const PackedWord& x, const PackedWord& y) {
                           return oracle::concatenation_product(x, y, true);
                         }));
          CHECK(phi_prime_oracle(uv) ==
                bilinear(phi_prime_oracle(u), phi_prime_oracle(v),
                         [](const PackedWord& x, const PackedWord& y) {
                           return oracle::concatenation_product(x, y, false);
                         }));
        }
      }
    }
  }
}

TEST_CASE("psi intertwines the two WQSym structures") {
  auto psi_word = [](const PackedWord& w) { return psi(w); };
  for (std::size_t a = 0; a <= 4; ++a) {
    for (const auto& u : enumerate(a)) {
      CHECK(tensor_map(delta_wqsym(u), psi_word, psi_word) == delta_wqsym(psi(u)));
      for (std::size_t b = 0; a + b <= 4; ++b) {
        for (const auto& v : enumerate(b)) {
          CHECK(psi(shifted_shuffle(u, v)) == qshuffle(psi(u), psi(v)));
        }
      }
    }
  }
}

// With positions interleaved instead of values, phi stops being a morphism.
TEST_CASE("phi does not intertwine the positional interleaving") {
  bool broken = false;
  for (const auto& u : enumerate(1)) {
    for (const auto& v : enumerate(2)) {
      ModuleElement const lhs = phi(hwpp_product(u, v));
      ModuleElement const rhs =
          bilinear(phi(u), phi(v), [](const PackedWord& x, const PackedWord& y) {
            return oracle::positional_shuffle(x, y);
          });
      broken |= lhs != rhs;
    }
  }
  CHECK(broken);
}

TEST_SUITE_END();
