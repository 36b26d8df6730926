#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace garside {

// Integer polynomials are stored low degree first.
using IntPoly = std::vector<std::int64_t>;

IntPoly cyclotomic_polynomial(int n);

// Minimal polynomial over Q of 2cos(2*pi/n), n >= 3 (monic, integer).
IntPoly minimal_polynomial_2cos(int n);

// The ring Z[zeta] with zeta = 2cos(pi/M). Values are coefficient vectors in
// the power basis 1, zeta, ..., zeta^(d-1) where d is the degree of the
// minimal polynomial of zeta; all arithmetic is exact.
class CosineRing {
 public:
  using Value = std::vector<std::int64_t>;

  explicit CosineRing(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const IntPoly& modulus() const { return modulus_; }

  Value zero() const { return Value(degree(), 0); }
  Value from_int(std::int64_t c) const;
  // 2cos(pi/m); requires m to divide the conductor.
  Value two_cos_pi_over(int m) const;

  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;
  Value neg(const Value& a) const;
  // a + c*b, the only fused operation the reflection representation needs.
  void add_scaled(Value& a, const Value& c, const Value& b) const;

  bool is_zero(const Value& a) const;
  double to_double(const Value& a) const;

 private:
  Value reduce(std::vector<std::int64_t> wide) const;

  int conductor_;
  IntPoly modulus_;
};

}  // namespace garside
