#include "garside/exact_ring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace garside {
namespace {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division by a monic polynomial; throws if the remainder is nonzero.
IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("poly_div_exact: degree");
  IntPoly q(num.size() - dn, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t c = num[k + dn];
    q[k] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k + j] -= c * den[j];
  }
  for (std::int64_t r : num)
    if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n < 1");
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = poly_div_exact(num, cyclotomic_polynomial(d));
  trim(num);
  return num;
}

IntPoly minimal_polynomial_2cos(int n) {
  if (n < 3) throw std::invalid_argument("minimal_polynomial_2cos: n < 3");
  // Phi_n(z) = z^d * Psi_n(z + 1/z) with Phi_n palindromic of degree 2d, and
  // z^k + z^-k = C_k(z + 1/z) for the Dickson polynomials C_0 = 2, C_1 = x,
  // C_{k+1} = x C_k - C_{k-1}.
  const IntPoly phi = cyclotomic_polynomial(n);
  const int d = static_cast<int>(phi.size() - 1) / 2;
  std::vector<IntPoly> dickson{{2}, {0, 1}};
  for (int k = 2; k <= d; ++k) {
    IntPoly next = poly_mul({0, 1}, dickson[k - 1]);
    const IntPoly& prev = dickson[k - 2];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    dickson.push_back(next);
  }
  IntPoly psi(d + 1, 0);
  psi[0] = phi[d];
  for (int k = 1; k <= d; ++k) {
    const std::int64_t c = phi[d + k];
    for (std::size_t i = 0; i < dickson[k].size(); ++i) psi[i] += c * dickson[k][i];
  }
  trim(psi);
  return psi;
}

CosineRing::CosineRing(int conductor) : conductor_(conductor) {
  if (conductor < 2) throw std::invalid_argument("CosineRing: conductor < 2");
  modulus_ = minimal_polynomial_2cos(2 * conductor);
}

CosineRing::Value CosineRing::from_int(std::int64_t c) const {
  Value v = zero();
  v[0] = c;
  return v;
}

CosineRing::Value CosineRing::reduce(std::vector<std::int64_t> wide) const {
  const int d = degree();
  for (int k = static_cast<int>(wide.size()) - 1; k >= d; --k) {
    const std::int64_t c = wide[k];
    if (c == 0) continue;
    for (int j = 0; j <= d; ++j) wide[k - d + j] -= c * modulus_[j];
  }
  wide.resize(d, 0);
  return wide;
}

CosineRing::Value CosineRing::two_cos_pi_over(int m) const {
  if (m < 1 || conductor_ % m != 0)
    throw std::invalid_argument("two_cos_pi_over: m must divide the conductor");
  // 2cos(k*theta) = C_k(2cos theta) with k = conductor / m.
  const int k = conductor_ / m;
  std::vector<std::int64_t> prev{2}, cur{0, 1};
  if (k == 0) return reduce(prev);
  for (int i = 1; i < k; ++i) {
    std::vector<std::int64_t> next(cur.size() + 1, 0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return reduce(cur);
}

CosineRing::Value CosineRing::add(const Value& a, const Value& b) const {
  Value out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

CosineRing::Value CosineRing::sub(const Value& a, const Value& b) const {
  Value out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

CosineRing::Value CosineRing::neg(const Value& a) const {
  Value out(a);
  for (auto& c : out) c = -c;
  return out;
}

CosineRing::Value CosineRing::mul(const Value& a, const Value& b) const {
  std::vector<std::int64_t> wide(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) wide[i + j] += a[i] * b[j];
  }
  return reduce(std::move(wide));
}

void CosineRing::add_scaled(Value& a, const Value& c, const Value& b) const {
  const Value prod = mul(c, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += prod[i];
}

bool CosineRing::is_zero(const Value& a) const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

double CosineRing::to_double(const Value& a) const {
  const double zeta = 2.0 * std::cos(std::numbers::pi / conductor_);
  double acc = 0.0, power = 1.0;
  for (std::int64_t c : a) {
    acc += static_cast<double>(c) * power;
    power *= zeta;
  }
  return acc;
}

}  // namespace garside
