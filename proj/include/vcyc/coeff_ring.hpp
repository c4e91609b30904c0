#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vcyc/rng.hpp"

namespace vcyc {

/// Exact scalar. Integers and residues use den = 1; rationals are reduced
/// with den > 0. Values are canonical, so structural equality is equality.
struct Coeff {
  std::int64_t num = 0;
  std::int64_t den = 1;
  auto operator<=>(const Coeff&) const = default;
};

class CoeffRing {
 public:
  enum class Kind { Integers, Rationals, IntegersMod };

  static CoeffRing integers() { return CoeffRing(Kind::Integers, 0); }
  static CoeffRing rationals() { return CoeffRing(Kind::Rationals, 0); }
  static CoeffRing integers_mod(std::int64_t n);
  /// "Z", "Q", "Z/5".
  static CoeffRing parse(const std::string& name);

  Kind kind() const noexcept { return kind_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  std::string name() const;

  Coeff zero() const noexcept { return {0, 1}; }
  Coeff one() const noexcept { return from_int(1); }
  Coeff from_int(std::int64_t x) const noexcept;
  Coeff from_fraction(std::int64_t num, std::int64_t den) const;

  Coeff add(Coeff a, Coeff b) const;
  Coeff sub(Coeff a, Coeff b) const;
  Coeff mul(Coeff a, Coeff b) const;
  Coeff neg(Coeff a) const;
  /// Multiplicative inverse; InvalidArgument for non-units.
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::int64_t e) const;
  bool is_unit(Coeff a) const;
  bool is_zero(Coeff a) const noexcept { return a.num == 0; }
  /// True iff `a` is a canonical element of this ring.
  bool contains(Coeff a) const noexcept;

  /// Uniform-ish small element: integers in [-bound, bound], residues
  /// uniform, rationals with denominators up to 4.
  Coeff random(Rng& rng, std::int64_t bound = 3) const;
  std::string format(Coeff a) const;

  bool operator==(const CoeffRing&) const = default;

 private:
  CoeffRing(Kind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}
  Coeff normalize(std::int64_t num, std::int64_t den) const;

  Kind kind_;
  std::int64_t modulus_;
};

/// Dense row-major matrix of ring elements. A morphism X → Y of free modules
/// of ranks x, y is a y × x matrix; composition is the matrix product.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(const CoeffRing& r, std::size_t n);
  static Matrix from_ints(const CoeffRing& r, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix random(const CoeffRing& r, Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound = 3);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Coeff& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Coeff& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  bool is_zero() const noexcept;
  std::string format(const CoeffRing& r) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> e_;
};

Matrix mat_mul(const CoeffRing& r, const Matrix& a, const Matrix& b);
Matrix mat_add(const CoeffRing& r, const Matrix& a, const Matrix& b);
Matrix mat_neg(const CoeffRing& r, const Matrix& a);
Matrix mat_scale(const CoeffRing& r, Coeff c, const Matrix& a);
Matrix mat_map(const Matrix& a, const std::function<Coeff(Coeff)>& f);
/// [a 0; 0 b].
Matrix block_diag(const Matrix& a, const Matrix& b);
/// Sub-block starting at (r0, c0).
Matrix block(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols);

/// A right action of the ambient group on coefficient matrices, through the
/// exponent p(g) ∈ Z of a group element: g*(M) = u^{p(g)}·M entrywise.
/// The trivial action has u = 1. For u ≠ ±1 this scaling is additive but not
/// multiplicative, so it is not a ring automorphism.
class RingAction {
 public:
  static RingAction trivial() { return RingAction(); }
  /// InvalidArgument unless `unit` is a unit of `ring`.
  static RingAction unit_power(const CoeffRing& ring, Coeff unit);

  bool is_trivial() const noexcept { return trivial_; }
  Coeff unit() const noexcept { return unit_; }
  Matrix apply(const CoeffRing& r, std::int64_t exponent, const Matrix& m) const;
  std::string describe(const CoeffRing& r) const;

  bool operator==(const RingAction&) const = default;

 private:
  bool trivial_ = true;
  Coeff unit_{1, 1};
};

/// Coefficient data of every homotopy colimit: FGF(ring) with `action`.
struct Coefficients {
  CoeffRing ring = CoeffRing::integers();
  RingAction action = RingAction::trivial();
  Matrix act(std::int64_t exponent, const Matrix& m) const { return action.apply(ring, exponent, m); }
  bool operator==(const Coefficients&) const = default;
};

}  // namespace vcyc
