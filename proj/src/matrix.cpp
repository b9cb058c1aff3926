#include "wpp/matrix.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "wpp/error.hpp"

namespace wpp {

IntMatrix::IntMatrix(std::vector<PackedWord> row_basis,
                     std::vector<PackedWord> col_basis)
    : row_basis_(std::move(row_basis)),
      col_basis_(std::move(col_basis)),
      entries_(row_basis_.size() * col_basis_.size(), 0) {}

IntMatrix::IntMatrix(std::vector<PackedWord> basis)
    : IntMatrix(basis, basis) {}

IntMatrix IntMatrix::identity(std::vector<PackedWord> basis) {
  IntMatrix m(std::move(basis));
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = 1;
  return m;
}

std::vector<std::vector<Coeff>> IntMatrix::to_rows() const {
  std::vector<std::vector<Coeff>> out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    out[r].assign(entries_.begin() + r * cols(),
                  entries_.begin() + (r + 1) * cols());
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(col_basis_, row_basis_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

bool IntMatrix::is_lower_unitriangular() const {
  if (rows() != cols()) return false;
  for (std::size_t r = 0; r < rows(); ++r) {
    if (at(r, r) != 1) return false;
    for (std::size_t c = r + 1; c < cols(); ++c) {
      if (at(r, c) != 0) return false;
    }
  }
  return true;
}

bool IntMatrix::is_upper_unitriangular() const {
  return transposed().is_lower_unitriangular();
}

std::string IntMatrix::determinant() const {
  using boost::multiprecision::cpp_int;
  if (rows() != cols()) {
    throw ValidationError("determinant of a non-square matrix");
  }
  std::size_t const n = rows();
  if (n == 0) return "1";
  // Fraction-free Bareiss elimination.
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = at(r, c);
  }
  int sign = 1;
  cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return "0";
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  cpp_int det = a[n - 1][n - 1] * sign;
  return det.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.col_basis_ != b.row_basis_) {
    throw ValidationError("matrix product over mismatched bases");
  }
  IntMatrix out(a.row_basis_, b.col_basis_);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Coeff const x = a.at(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b.at(k, c) == 0) continue;
        out.at(r, c) = checked_add(out.at(r, c), checked_mul(x, b.at(k, c)));
      }
    }
  }
  return out;
}

std::string to_text(const IntMatrix& m) {
  auto label = [](const PackedWord& w) {
    return w.empty() ? std::string("()") : w.to_string();
  };
  std::size_t width = 1;
  for (const auto& w : m.col_basis()) width = std::max(width, label(w).size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      width = std::max(width, std::to_string(m.at(r, c)).size());
    }
  }
  std::size_t head = 1;
  for (const auto& w : m.row_basis()) head = std::max(head, label(w).size());
  std::ostringstream out;
  auto pad = [&out](const std::string& s, std::size_t w) {
    out << std::string(w - s.size(), ' ') << s;
  };
  pad("", head);
  for (const auto& w : m.col_basis()) {
    out << ' ';
    pad(label(w), width);
  }
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    pad(label(m.row_basis()[r]), head);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out << ' ';
      pad(std::to_string(m.at(r, c)), width);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace wpp
