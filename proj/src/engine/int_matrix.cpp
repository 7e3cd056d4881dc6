#include "prlab/int_matrix.hpp"

#include <cstdlib>
#include <utility>

namespace prlab {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += v * b(k, j);
    }
  return c;
}

namespace {

// Row operations are mirrored into `left` (applied from the left) and into
// `left_inv` (inverse applied from the right, i.e. as column operations).
struct Reducer {
  IntMatrix a;
  IntMatrix left;
  IntMatrix left_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < left.cols(); ++c) std::swap(left(i, c), left(j, c));
    for (std::size_t r = 0; r < left_inv.rows(); ++r) std::swap(left_inv(r, i), left_inv(r, j));
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += q * a(j, c);
    for (std::size_t c = 0; c < left.cols(); ++c) left(i, c) += q * left(j, c);
    // inverse: col_j -= q * col_i
    for (std::size_t r = 0; r < left_inv.rows(); ++r) left_inv(r, j) -= q * left_inv(r, i);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < left.cols(); ++c) left(i, c) = -left(i, c);
    for (std::size_t r = 0; r < left_inv.rows(); ++r) left_inv(r, i) = -left_inv(r, i);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
  }
  void add_col(std::size_t i, std::size_t j, std::int64_t q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += q * a(r, j);
  }
};

}  // namespace

SmithForm smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Reducer red{std::move(a), IntMatrix::identity(rows), IntMatrix::identity(rows)};
  IntMatrix& m = red.a;
  const std::size_t n = rows < cols ? rows : cols;

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c) {
          const auto v = std::llabs(m(r, c));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      if (best == 0) break;
      red.swap_rows(t, pr);
      red.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        red.add_row(r, t, -(m(r, t) / m(t, t)));
        if (m(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        red.add_col(c, t, -(m(t, c) / m(t, t)));
        if (m(t, c) != 0) dirty = true;
      }
      if (dirty) continue;

      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (m(r, c) % m(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      red.add_row(t, bad, 1);
    }
    if (m(t, t) < 0) red.negate_row(t);
  }

  SmithForm out;
  out.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = m(i, i);
  out.left = std::move(red.left);
  out.left_inv = std::move(red.left_inv);
  return out;
}

}  // namespace prlab
