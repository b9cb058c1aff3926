#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wpp/linear.hpp"
#include "wpp/packed_word.hpp"

namespace wpp {

// Integer matrix whose rows and columns are labeled by packed words. For a
// linear map, column c holds the image of col_basis[c] expanded on
// row_basis.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::vector<PackedWord> row_basis, std::vector<PackedWord> col_basis);
  // Square matrix sharing one basis.
  explicit IntMatrix(std::vector<PackedWord> basis);

  static IntMatrix identity(std::vector<PackedWord> basis);

  std::size_t rows() const { return row_basis_.size(); }
  std::size_t cols() const { return col_basis_.size(); }
  const std::vector<PackedWord>& row_basis() const { return row_basis_; }
  const std::vector<PackedWord>& col_basis() const { return col_basis_; }
  bool is_square_on_one_basis() const { return row_basis_ == col_basis_; }

  Coeff& at(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }

  std::vector<std::vector<Coeff>> to_rows() const;
  IntMatrix transposed() const;

  // Lower triangular with ones on the diagonal.
  bool is_lower_unitriangular() const;
  bool is_upper_unitriangular() const;

  // Exact determinant in decimal.
  std::string determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::vector<PackedWord> row_basis_;
  std::vector<PackedWord> col_basis_;
  std::vector<Coeff> entries_;
};

// Aligned text with the basis as header row and column.
std::string to_text(const IntMatrix& m);

}  // namespace wpp
