#include "vcyc/smith.hpp"

#include <algorithm>
#include <cstdlib>

#include "vcyc/checked.hpp"
#include "vcyc/errors.hpp"

namespace vcyc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw InvalidArgument("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<std::int64_t> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InvalidArgument("IntMatrix: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return IntMatrix(r, c, std::move(entries));
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[dst] -= q * row[src], from column `from` on.
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q, std::size_t from) {
  for (std::size_t j = from; j < m.cols(); ++j)
    m.at(dst, j) = checked::sub(m.at(dst, j), checked::mul(q, m.at(src, j)));
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q, std::size_t from) {
  for (std::size_t i = from; i < m.rows(); ++i)
    m.at(i, dst) = checked::sub(m.at(i, dst), checked::mul(q, m.at(i, src)));
}

// Moves the smallest non-zero |entry| of the trailing block to (t, t).
bool place_pivot(IntMatrix& m, std::size_t t) {
  std::size_t best_r = 0, best_c = 0;
  std::int64_t best = 0;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const std::int64_t v = m.at(i, j);
      if (v != 0 && (best == 0 || std::llabs(v) < best)) {
        best = std::llabs(v);
        best_r = i;
        best_c = j;
      }
    }
  if (best == 0) return false;
  swap_rows(m, t, best_r);
  swap_cols(m, t, best_c);
  return true;
}

}  // namespace

std::vector<std::int64_t> smith_normal_form(IntMatrix m) {
  const std::size_t diag = std::min(m.rows(), m.cols());
  std::vector<std::int64_t> factors(diag, 0);
  for (std::size_t t = 0; t < diag; ++t) {
    if (!place_pivot(m, t)) break;
    for (;;) {
      bool dirty = false;
      const std::int64_t p = m.at(t, t);
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m.at(i, t) == 0) continue;
        row_axpy(m, i, t, m.at(i, t) / p, t);
        dirty = dirty || m.at(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m.at(t, j) == 0) continue;
        col_axpy(m, j, t, m.at(t, j) / p, t);
        dirty = dirty || m.at(t, j) != 0;
      }
      if (dirty) {
        place_pivot(m, t);
        continue;
      }
      // Row and column are clear; enforce p | every trailing entry.
      std::size_t bad_row = 0;
      for (std::size_t i = t + 1; i < m.rows() && bad_row == 0; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (m.at(i, j) % p != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == 0) break;
      row_axpy(m, t, bad_row, -1, t);
    }
    factors[t] = std::llabs(m.at(t, t));
  }
  return factors;
}

AbelianInvariants cokernel_invariants(const IntMatrix& relations) {
  AbelianInvariants inv;
  const auto factors = smith_normal_form(relations);
  std::size_t nonzero = 0;
  for (auto d : factors) {
    if (d != 0) ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = relations.cols() - nonzero;
  return inv;
}

}  // namespace vcyc
