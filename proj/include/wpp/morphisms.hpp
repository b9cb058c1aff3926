#pragma once

// The maps between H_WPP and the two WQSym structures:
//   phi:       H_WPP -> (WQSym, shifted shuffle)   P_f -> sum over Lin(dp(f))
//   psi:       (WQSym, shuffle) -> (WQSym, dot)    f   -> sum of g ⪯ f
//   phi_prime: H_WPP -> (WQSym, dot)               P_f -> sum over WLin(dp(f))
// and their inverses, obtained by Möbius inversion on the orders of PW(n).

#include <cstddef>
#include <optional>
#include <string_view>

#include "wpp/linear.hpp"
#include "wpp/matrix.hpp"
#include "wpp/packed_word.hpp"

namespace wpp {

ModuleElement phi(const PackedWord& f);
ModuleElement phi(const ModuleElement& x);

ModuleElement psi(const PackedWord& f);
ModuleElement psi(const ModuleElement& x);

ModuleElement phi_prime(const PackedWord& f);
ModuleElement phi_prime(const ModuleElement& x);

// Degreewise inverses; words longer than kMaxOrderDegree are rejected.
ModuleElement phi_inverse(const PackedWord& g);
ModuleElement phi_inverse(const ModuleElement& x);
ModuleElement psi_inverse(const PackedWord& g);
ModuleElement psi_inverse(const ModuleElement& x);
ModuleElement phi_prime_inverse(const ModuleElement& x);

enum class Via { phi, phi_prime };

// <map^-1(u), map^-1(v)> computed in H_WPP.
Coeff induced_pairing(const PackedWord& u, const PackedWord& v, Via via);

enum class MatrixKind {
  phi,
  phi_prime,
  psi,
  phi_inverse,
  psi_inverse,
  pairing,          // H_WPP pairing on the P basis
  pairing_shuffle,  // induced on WQSym through phi
  pairing_dot,      // induced on WQSym through phi_prime
};

std::string_view to_string(MatrixKind kind);
std::optional<MatrixKind> parse_matrix_kind(std::string_view name);

inline constexpr std::size_t kMaxMatrixDegree = 5;

// Lexicographic PW(n) on both sides. Maps: column c is the image of basis
// word c. Pairings: entry (r, c) = <r, c>.
IntMatrix matrix_of(MatrixKind kind, std::size_t n);

}  // namespace wpp
