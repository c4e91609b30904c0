#include "vcyc/coeff_ring.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "vcyc/checked.hpp"
#include "vcyc/errors.hpp"

namespace vcyc {

CoeffRing CoeffRing::integers_mod(std::int64_t n) {
  if (n < 2) throw InvalidArgument("IntegersMod needs modulus >= 2");
  return CoeffRing(Kind::IntegersMod, n);
}

CoeffRing CoeffRing::parse(const std::string& name) {
  if (name == "Z" || name == "Integers") return integers();
  if (name == "Q" || name == "Rationals") return rationals();
  for (const std::string prefix : {"Z/", "IntegersMod(", "Z_"}) {
    if (name.rfind(prefix, 0) != 0) continue;
    std::string digits = name.substr(prefix.size());
    if (!digits.empty() && digits.back() == ')') digits.pop_back();
    try {
      std::size_t used = 0;
      const long long n = std::stoll(digits, &used);
      if (used == digits.size()) return integers_mod(n);
    } catch (const std::logic_error&) {
    }
  }
  throw ParseError("unknown coefficient ring '" + name + "'");
}

std::string CoeffRing::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    default: return "Z/" + std::to_string(modulus_);
  }
}

Coeff CoeffRing::from_int(std::int64_t x) const noexcept {
  if (kind_ == Kind::IntegersMod) return {x % modulus_ < 0 ? x % modulus_ + modulus_ : x % modulus_, 1};
  return {x, 1};
}

Coeff CoeffRing::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw InvalidArgument("zero denominator");
  if (kind_ == Kind::Rationals) return normalize(num, den);
  return mul(from_int(num), inv(from_int(den)));
}

Coeff CoeffRing::normalize(std::int64_t num, std::int64_t den) const {
  if (kind_ == Kind::IntegersMod) return {checked::mod(num, modulus_), 1};
  if (kind_ == Kind::Integers) return {num, 1};
  if (den < 0) {
    num = checked::neg(num);
    den = checked::neg(den);
  }
  const std::int64_t g = checked::gcd(num, den);
  return {num / g, den / g};
}

Coeff CoeffRing::add(Coeff a, Coeff b) const {
  switch (kind_) {
    case Kind::Integers: return {checked::add(a.num, b.num), 1};
    case Kind::IntegersMod: return {checked::mod(checked::add(a.num, b.num), modulus_), 1};
    default:
      return normalize(checked::add(checked::mul(a.num, b.den), checked::mul(b.num, a.den)),
                       checked::mul(a.den, b.den));
  }
}

Coeff CoeffRing::sub(Coeff a, Coeff b) const { return add(a, neg(b)); }

Coeff CoeffRing::mul(Coeff a, Coeff b) const {
  switch (kind_) {
    case Kind::Integers: return {checked::mul(a.num, b.num), 1};
    case Kind::IntegersMod: return {checked::mod(checked::mul(a.num, b.num), modulus_), 1};
    default: return normalize(checked::mul(a.num, b.num), checked::mul(a.den, b.den));
  }
}

Coeff CoeffRing::neg(Coeff a) const {
  if (kind_ == Kind::IntegersMod) return {a.num == 0 ? 0 : modulus_ - a.num, 1};
  return {checked::neg(a.num), a.den};
}

bool CoeffRing::is_unit(Coeff a) const {
  switch (kind_) {
    case Kind::Integers: return a.num == 1 || a.num == -1;
    case Kind::Rationals: return a.num != 0;
    default: return checked::gcd(a.num, modulus_) == 1;
  }
}

Coeff CoeffRing::inv(Coeff a) const {
  if (!is_unit(a)) throw InvalidArgument(format(a) + " is not a unit in " + name());
  switch (kind_) {
    case Kind::Integers: return a;
    case Kind::Rationals: return normalize(a.den, a.num);
    default: {
      // Extended Euclid on (a, n).
      std::int64_t r0 = modulus_, r1 = a.num, s0 = 0, s1 = 1;
      while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
      }
      return {checked::mod(s0, modulus_), 1};
    }
  }
}

Coeff CoeffRing::pow(Coeff a, std::int64_t e) const {
  if (e < 0) return pow(inv(a), checked::neg(e));
  Coeff acc = one();
  while (e > 0) {
    if (e & 1) acc = mul(acc, a);
    e >>= 1;
    if (e > 0) a = mul(a, a);
  }
  return acc;
}

bool CoeffRing::contains(Coeff a) const noexcept {
  switch (kind_) {
    case Kind::Integers: return a.den == 1;
    case Kind::IntegersMod: return a.den == 1 && a.num >= 0 && a.num < modulus_;
    default: return a.den > 0 && std::gcd(a.num, a.den) == 1;
  }
}

Coeff CoeffRing::random(Rng& rng, std::int64_t bound) const {
  switch (kind_) {
    case Kind::Integers: return {rng.uniform(-bound, bound), 1};
    case Kind::IntegersMod: return {rng.uniform(0, modulus_ - 1), 1};
    default: return normalize(rng.uniform(-bound, bound), rng.uniform(1, 4));
  }
}

std::string CoeffRing::format(Coeff a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

Matrix Matrix::identity(const CoeffRing& r, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = r.one();
  return m;
}

Matrix Matrix::from_ints(const CoeffRing& r, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = r.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::random(const CoeffRing& r, Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = r.random(rng, bound);
  return m;
}

bool Matrix::is_zero() const noexcept {
  for (const Coeff& c : e_)
    if (c.num != 0) return false;
  return true;
}

std::string Matrix::format(const CoeffRing& r) const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += " ";
      s += r.format(at(i, j));
    }
  }
  return s + "]";
}

Matrix mat_mul(const CoeffRing& r, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw ShapeMismatch("matrix product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (r.is_zero(a.at(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) = r.add(c.at(i, j), r.mul(a.at(i, l), b.at(l, j)));
    }
  return c;
}

Matrix mat_add(const CoeffRing& r, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix sum of different shapes");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = r.add(a.at(i, j), b.at(i, j));
  return c;
}

Matrix mat_neg(const CoeffRing& r, const Matrix& a) {
  return mat_map(a, [&r](Coeff c) { return r.neg(c); });
}

Matrix mat_scale(const CoeffRing& r, Coeff s, const Matrix& a) {
  return mat_map(a, [&r, s](Coeff c) { return r.mul(s, c); });
}

Matrix mat_map(const Matrix& a, const std::function<Coeff(Coeff)>& f) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = f(a.at(i, j));
  return c;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

Matrix block(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  if (r0 + rows > a.rows() || c0 + cols > a.cols()) throw ShapeMismatch("block out of range");
  Matrix c(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) c.at(i, j) = a.at(r0 + i, c0 + j);
  return c;
}

RingAction RingAction::unit_power(const CoeffRing& ring, Coeff unit) {
  if (!ring.contains(unit) || !ring.is_unit(unit)) throw InvalidArgument("action unit is not a unit of " + ring.name());
  RingAction a;
  a.trivial_ = unit == ring.one();
  a.unit_ = unit;
  return a;
}

Matrix RingAction::apply(const CoeffRing& r, std::int64_t exponent, const Matrix& m) const {
  if (trivial_ || exponent == 0) return m;
  return mat_scale(r, r.pow(unit_, exponent), m);
}

std::string RingAction::describe(const CoeffRing& r) const {
  return trivial_ ? "trivial" : "unit power x -> " + r.format(unit_) + "^n x";
}

}  // namespace vcyc
