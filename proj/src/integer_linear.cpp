#include "origami/integer_linear.hpp"

#include <cstddef>
#include <utility>

#include "origami/errors.hpp"

namespace origami {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

// Column operation on every row of m: (col i, col j) <- (col i, col j) * [[p, r], [q, s]].
void combine_columns(IntMatrix& m, std::size_t i, std::size_t j, const Integer& p, const Integer& q,
                     const Integer& r, const Integer& s) {
  Integer x, y;
  for (auto& row : m) {
    x = p * row[i] + q * row[j];
    y = r * row[i] + s * row[j];
    row[i] = std::move(x);
    row[j] = std::move(y);
  }
}

void swap_columns(IntMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

}  // namespace

std::optional<std::vector<Integer>> solve_integer(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw Error("solve_integer: right-hand side has the wrong length");
  const std::size_t cols = rows ? a[0].size() : 0;

  IntMatrix h(rows, std::vector<Integer>(cols));
  std::vector<Integer> rhs(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (a[r].size() != cols) throw Error("solve_integer: ragged matrix");
    Integer l = b[r].get_den();
    for (const auto& q : a[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) h[r][c] = a[r][c].get_num() * (l / a[r][c].get_den());
    rhs[r] = b[r].get_num() * (l / b[r].get_den());
  }

  IntMatrix v(cols, std::vector<Integer>(cols));
  for (std::size_t c = 0; c < cols; ++c) v[c][c] = 1;

  // pivot_col[r] is the pivot column of row r, or cols when the row has none.
  std::vector<std::size_t> pivot_col(rows, cols);
  std::size_t next = 0;
  Integer g, s, t;
  for (std::size_t r = 0; r < rows && next < cols; ++r) {
    for (std::size_t c = next + 1; c < cols; ++c) {
      if (h[r][c] == 0) continue;
      if (h[r][next] == 0) {
        swap_columns(h, next, c);
        swap_columns(v, next, c);
        continue;
      }
      // [h_n, h_c] * [[s, -h_c/g], [t, h_n/g]] = [g, 0], determinant 1.
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h[r][next].get_mpz_t(), h[r][c].get_mpz_t());
      const Integer p_next = h[r][next] / g;
      const Integer p_c = h[r][c] / g;
      const Integer sc = s, tc = t;
      combine_columns(h, next, c, sc, tc, Integer(-p_c), p_next);
      combine_columns(v, next, c, sc, tc, Integer(-p_c), p_next);
    }
    if (h[r][next] == 0) continue;
    if (h[r][next] < 0) {
      for (auto& row : h) row[next] = -row[next];
      for (auto& row : v) row[next] = -row[next];
    }
    // Keep earlier pivot columns small by reducing them against this one.
    for (std::size_t c = 0; c < next; ++c) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[r][c].get_mpz_t(), h[r][next].get_mpz_t());
      if (q == 0) continue;
      for (auto& row : h) row[c] -= q * row[next];
      for (auto& row : v) row[c] -= q * row[next];
    }
    pivot_col[r] = next++;
  }

  std::vector<Integer> y(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Integer acc = rhs[r];
    const std::size_t limit = pivot_col[r] < cols ? pivot_col[r] : next;
    for (std::size_t c = 0; c < limit; ++c)
      if (y[c] != 0) acc -= h[r][c] * y[c];
    if (pivot_col[r] < cols) {
      if (!mpz_divisible_p(acc.get_mpz_t(), h[r][pivot_col[r]].get_mpz_t())) return std::nullopt;
      y[pivot_col[r]] = acc / h[r][pivot_col[r]];
    } else if (acc != 0) {
      return std::nullopt;
    }
  }

  std::vector<Integer> n(cols);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t c = 0; c < next; ++c)
      if (y[c] != 0) n[i] += v[i][c] * y[c];
  return n;
}

}  // namespace origami
