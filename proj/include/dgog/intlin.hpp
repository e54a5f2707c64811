#pragma once

#include "dgog/integer.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dgog {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Throws Parse for ragged input.
  static IntMatrix from_rows(std::vector<std::vector<Integer>> const& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Integer const& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  /// Entrywise absolute value.
  IntMatrix abs() const;
  /// Exact determinant by fraction-free elimination; requires a square matrix.
  Integer determinant() const;

  /// Copies `block` into this matrix with its top-left corner at (row, col).
  void place(IntMatrix const& block, std::size_t row, std::size_t col);

  friend IntMatrix operator+(IntMatrix const& a, IntMatrix const& b);
  friend IntMatrix operator-(IntMatrix const& a, IntMatrix const& b);
  friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  friend IntMatrix operator*(Integer const& k, IntMatrix const& a);
  bool operator==(IntMatrix const&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Parses a JSON list of rows, e.g. `[[3,1],[0,2]]`. Throws Parse.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(IntMatrix const& a);

enum class PivotRule {
  /// Smallest nonzero absolute value, ties broken in row-major order.
  MinAbs,
  /// First nonzero entry in row-major order.
  FirstNonzero,
};

/// A = U * D * V with U, V unimodular and D diagonal, d_1 | d_2 | ... all non-negative.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

SmithDecomposition smith_normal_form(IntMatrix const& a, PivotRule rule = PivotRule::MinAbs);

/// The nonzero diagonal entries of D.
std::vector<Integer> invariant_factors(IntMatrix const& a, PivotRule rule = PivotRule::MinAbs);
std::size_t rank(IntMatrix const& a);

/// Z^free_rank + Z/t_1 + ... with every t_i > 1 and t_i | t_{i+1}.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool operator==(AbelianInvariants const&) const = default;
};

/// e.g. `Z^2 + Z/3 + Z/6`; `0` for the trivial group.
std::string to_string(AbelianInvariants const& a);

/// Z^rows / A Z^cols.
AbelianInvariants cokernel(IntMatrix const& a);
/// Rank of { x in Z^cols : A x = 0 }.
std::size_t kernel_rank(IntMatrix const& a);

}  // namespace dgog
