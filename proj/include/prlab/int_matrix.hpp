#pragma once

#include <cstdint>
#include <vector>

namespace prlab {

/// Small dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Smith normal form with the left transform: left * A * (some unimodular V) = diag.
/// `diag` has min(rows, cols) non-negative entries with diag[i] | diag[i+1]
/// (zeros last). `left_inv` is the inverse of `left`.
struct SmithForm {
  std::vector<std::int64_t> diag;
  IntMatrix left;
  IntMatrix left_inv;
};

SmithForm smith_normal_form(IntMatrix a);

/// Reduces x into [0, m).
inline std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace prlab
