#include "rgsurf/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace rgs {

namespace {

// Adds k times column src to column dst in both a and u.
void col_addmul(BigMatrix &m, int dst, int src, const BigInt &k) {
  for (auto &row : m)
    row[dst] += k * row[src];
}

void col_swap(BigMatrix &m, int x, int y) {
  for (auto &row : m)
    std::swap(row[x], row[y]);
}

void col_negate(BigMatrix &m, int x) {
  for (auto &row : m)
    row[x] = -row[x];
}

} // namespace

BigMatrix integer_kernel(const BigMatrix &a, int cols) {
  BigMatrix work = a;
  for (const auto &row : work)
    if (static_cast<int>(row.size()) != cols)
      throw DomainError("ragged matrix in kernel computation");
  BigMatrix u(cols, BigVector(cols, 0));
  for (int i = 0; i < cols; ++i)
    u[i][i] = 1;

  // Column echelon form by unimodular column operations, mirrored on u.
  int piv = 0;
  for (std::size_t r = 0; r < work.size() && piv < cols; ++r) {
    for (;;) {
      int best = -1;
      for (int j = piv; j < cols; ++j)
        if (work[r][j] != 0 && (best < 0 || abs(work[r][j]) < abs(work[r][best])))
          best = j;
      if (best < 0)
        break;
      bool others = false;
      for (int j = piv; j < cols; ++j) {
        if (j == best || work[r][j] == 0)
          continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), work[r][j].get_mpz_t(), work[r][best].get_mpz_t());
        BigInt k = -q;
        col_addmul(work, j, best, k);
        col_addmul(u, j, best, k);
        if (work[r][j] != 0)
          others = true;
      }
      if (!others) {
        col_swap(work, piv, best);
        col_swap(u, piv, best);
        if (work[r][piv] < 0) {
          col_negate(work, piv);
          col_negate(u, piv);
        }
        ++piv;
        break;
      }
    }
  }
  BigMatrix ker;
  for (int j = piv; j < cols; ++j) {
    BigVector v(cols);
    for (int i = 0; i < cols; ++i)
      v[i] = u[i][j];
    ker.push_back(std::move(v));
  }
  return hermite_rows(std::move(ker));
}

BigMatrix hermite_rows(BigMatrix rows) {
  if (rows.empty())
    return rows;
  const int cols = static_cast<int>(rows[0].size());
  std::size_t top = 0;
  for (int c = 0; c < cols && top < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      if (best == rows.size())
        break;
      bool others = false;
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (i == best || rows[i][c] == 0)
          continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t());
        for (int k = 0; k < cols; ++k)
          rows[i][k] -= q * rows[best][k];
        if (rows[i][c] != 0)
          others = true;
      }
      if (!others) {
        std::swap(rows[top], rows[best]);
        if (rows[top][c] < 0)
          for (auto &x : rows[top])
            x = -x;
        for (std::size_t i = 0; i < top; ++i) {
          BigInt q;
          mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[top][c].get_mpz_t());
          if (q != 0)
            for (int k = 0; k < cols; ++k)
              rows[i][k] -= q * rows[top][k];
        }
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  return rows;
}

int rank_over_q(BigMatrix a) { return static_cast<int>(hermite_rows(std::move(a)).size()); }

} // namespace rgs
