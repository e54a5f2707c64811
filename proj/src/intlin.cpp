#include "dgog/intlin.hpp"

#include "dgog/error.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <utility>

namespace dgog {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Integer>> const& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix a(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::Parse, "matrix rows have different lengths");
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rows[i][j];
  }
  return a;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 1;
  return a;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::abs() const {
  IntMatrix t = *this;
  for (auto& x : t.data_) x = dgog::abs(x);
  return t;
}

Integer IntMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1, previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntMatrix::place(IntMatrix const& block, std::size_t row, std::size_t col) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) (*this)(row + i, col + j) = block(i, j);
}

IntMatrix operator+(IntMatrix const& a, IntMatrix const& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(IntMatrix const& a, IntMatrix const& b) { return a + Integer(-1) * b; }

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator*(Integer const& k, IntMatrix const& a) {
  IntMatrix c = a;
  for (auto& x : c.data_) x *= k;
  return c;
}

IntMatrix parse_matrix(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const&) {
    throw Error(ErrorKind::Parse, "matrix literal is not valid JSON: " + std::string(text));
  }
  if (!doc.is_array() || doc.empty()) throw Error(ErrorKind::Parse, "matrix literal must be a non-empty list of rows");
  std::vector<std::vector<Integer>> rows;
  for (auto const& row : doc) {
    if (!row.is_array()) throw Error(ErrorKind::Parse, "matrix row must be a list");
    rows.emplace_back();
    for (auto const& x : row) {
      if (!x.is_number_integer()) throw Error(ErrorKind::Parse, "matrix entries must be integers");
      rows.back().emplace_back(x.get<std::int64_t>());
    }
  }
  return IntMatrix::from_rows(rows);
}

std::string format_matrix(IntMatrix const& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < a.cols(); ++j) out += (j ? "," : "") + to_string(a(i, j));
    out += "]";
  }
  return out + "]";
}

namespace {

// Maintains original = U * D * V while D is reduced by elementary operations.
class SmithState {
 public:
  SmithState(IntMatrix const& a) : U(IntMatrix::identity(a.rows())), D(a), V(IntMatrix::identity(a.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D(i, c), D(j, c));
    for (std::size_t r = 0; r < U.rows(); ++r) std::swap(U(r, i), U(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, i), D(r, j));
    for (std::size_t c = 0; c < V.cols(); ++c) std::swap(V(i, c), V(j, c));
  }
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, Integer const& k) {
    for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) += k * D(j, c);
    for (std::size_t r = 0; r < U.rows(); ++r) U(r, j) -= k * U(r, i);
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, Integer const& k) {
    for (std::size_t r = 0; r < D.rows(); ++r) D(r, i) += k * D(r, j);
    for (std::size_t c = 0; c < V.cols(); ++c) V(j, c) -= k * V(i, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) = -D(i, c);
    for (std::size_t r = 0; r < U.rows(); ++r) U(r, i) = -U(r, i);
  }

  IntMatrix U, D, V;
};

std::optional<std::pair<std::size_t, std::size_t>> find_pivot(IntMatrix const& d, std::size_t t, PivotRule rule) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      if (rule == PivotRule::FirstNonzero) return std::make_pair(i, j);
      if (!best || abs(d(i, j)) < abs(d(best->first, best->second))) best = std::make_pair(i, j);
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(IntMatrix const& a, PivotRule rule) {
  SmithState s(a);
  IntMatrix& d = s.D;
  std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = find_pivot(d, t, rule);
    if (!pivot) break;
    s.swap_rows(t, pivot->first);
    s.swap_cols(t, pivot->second);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        s.add_row(i, t, -(d(i, t) / d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        s.add_col(j, t, -(d(t, j) / d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (clean) {
        // Divisibility: fold a row holding a non-multiple of the pivot into row t.
        std::optional<std::size_t> offender;
        for (std::size_t i = t + 1; i < d.rows() && !offender; ++i)
          for (std::size_t j = t + 1; j < d.cols(); ++j)
            if (d(i, j) % d(t, t) != 0) {
              offender = i;
              break;
            }
        if (!offender) break;
        s.add_row(t, *offender, 1);
      }
      // A remainder smaller than the pivot is left somewhere in row or column t; move it to (t, t).
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < d.rows(); ++i)
        if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) bi = i, bj = t;
      for (std::size_t j = t; j < d.cols(); ++j)
        if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) bi = t, bj = j;
      s.swap_rows(t, bi);
      s.swap_cols(t, bj);
    }
    if (d(t, t) < 0) s.negate_row(t);
  }
  return {std::move(s.U), std::move(s.D), std::move(s.V)};
}

std::vector<Integer> invariant_factors(IntMatrix const& a, PivotRule rule) {
  SmithDecomposition snf = smith_normal_form(a, rule);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (snf.D(i, i) != 0) out.push_back(snf.D(i, i));
  return out;
}

std::size_t rank(IntMatrix const& a) { return invariant_factors(a).size(); }

std::string to_string(AbelianInvariants const& a) {
  std::string out;
  if (a.free_rank > 0) out = a.free_rank == 1 ? "Z" : "Z^" + std::to_string(a.free_rank);
  for (auto const& t : a.torsion) out += (out.empty() ? "Z/" : " + Z/") + to_string(t);
  return out.empty() ? "0" : out;
}

AbelianInvariants cokernel(IntMatrix const& a) {
  auto factors = invariant_factors(a);
  AbelianInvariants out;
  out.free_rank = a.rows() - factors.size();
  for (auto const& f : factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

std::size_t kernel_rank(IntMatrix const& a) { return a.cols() - rank(a); }

}  // namespace dgog
