#pragma once

// Exhaustive small-degree checks of the algebraic identities. Each check
// stops at its first counterexample.

#include <cstddef>
#include <string>
#include <vector>

#include "wpp/hopf.hpp"

namespace wpp {

struct CheckReport {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
};

bool all_passed(const std::vector<CheckReport>& reports);

inline constexpr std::size_t kMaxVerifyDegree = 5;

// Unit, associativity, coassociativity, counit and Δ(xy) = Δ(x)Δ(y) over
// all basis elements of total degree <= n_max.
std::vector<CheckReport> verify_hopf(const HopfStructure& h, std::size_t n_max);

// m(S ⊗ id)Δ = m(id ⊗ S)Δ = unit ∘ counit on basis words of degree <= n_max.
CheckReport verify_antipode(const HopfStructure& h, std::size_t n_max);

// pack_poset(dp(w)) = w for |w| <= n_max; dp injective up to isomorphism
// for |w| <= min(n_max, 4).
CheckReport verify_bijection(std::size_t n_max);

// phi, psi, phi_prime intertwine products and coproducts (total degree
// <= n_max); phi' = psi ∘ phi and phi^-1 ∘ phi = id as matrices; triangular
// shapes of phi and psi.
std::vector<CheckReport> verify_morphisms(std::size_t n_max);

// Symmetry and Hopf adjunction of the picture pairing (total degree
// <= n_max), nonzero determinants for degrees <= min(n_max, 4).
std::vector<CheckReport> verify_pairing(std::size_t n_max);

// Lin/WLin against the word orders, disjointness of the decomposition, the
// orders being partial orders, and inversion containment on permutations.
std::vector<CheckReport> verify_orders(std::size_t n_max);

// The printed degree-2 matrices, the PW(2)/PW(3) covering graphs and the
// degree-2 products.
std::vector<CheckReport> verify_goldens();

// Everything above at max_degree (bounded by kMaxVerifyDegree).
std::vector<CheckReport> run_invariant_suite(std::size_t max_degree);

}  // namespace wpp
