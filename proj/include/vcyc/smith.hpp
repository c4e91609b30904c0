#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vcyc {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Invariant factors d₁ | d₂ | … of length min(rows, cols), non-negative,
/// zeros last. Computed by unimodular row and column reduction with
/// overflow-checked arithmetic.
std::vector<std::int64_t> smith_normal_form(IntMatrix m);

/// Abelian group presented by generators = columns, relations = rows.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  ///< invariant factors > 1

  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants cokernel_invariants(const IntMatrix& relations);

}  // namespace vcyc
