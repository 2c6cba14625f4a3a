#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sptq {

using Int = mpz_class;

/// Integer polynomial utilities used by the cyclotomic machinery.
/// Polynomials are coefficient vectors, index = degree, no trailing zeros.
namespace poly {

std::vector<Int> trim(std::vector<Int> p);
std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b);
// Exact division, aborts if the division leaves a remainder.
std::vector<Int> divexact(const std::vector<Int>& num, const std::vector<Int>& den);
// Remainder of p modulo a monic divisor.
std::vector<Int> rem_monic(std::vector<Int> p, const std::vector<Int>& m);

}  // namespace poly

// t-th cyclotomic polynomial, coefficients in degree order.
const std::vector<Int>& cyclotomic_poly(int t);
int cyclotomic_degree(int t);

/// Element of Z[zeta_t], stored as the canonical representative modulo
/// Phi_t of a polynomial in zeta_t. For t=1 this is a plain integer.
class CycInt {
 public:
  CycInt() : t_(1), c_(1) {}
  explicit CycInt(int t) : t_(t), c_(cyclotomic_degree(t)) {}
  CycInt(int t, const Int& constant);
  CycInt(int t, long constant) : CycInt(t, Int(constant)) {}

  // Canonical reduction of an arbitrary polynomial in zeta_t.
  static CycInt from_poly(int t, const std::vector<Int>& raw);
  static CycInt zeta_pow(int t, long k);  // zeta_t^k, k may be negative

  int order() const { return t_; }
  const std::vector<Int>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_integer() const;           // lies in Z
  const Int& integer_value() const;  // valid when is_integer()

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt& operator*=(const Int& k);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend CycInt operator*(CycInt a, const Int& k) { return a *= k; }
  friend CycInt operator*(const Int& k, CycInt a) { return a *= k; }

  friend bool operator==(const CycInt& a, const CycInt& b) = default;

  // Exact division by an integer; aborts if any coefficient is not divisible.
  CycInt divexact(const Int& k) const;

  // Lift into Z[zeta_s] for t | s via zeta_t = zeta_s^{s/t}.
  CycInt lift(int s) const;

  std::string str() const;  // human-readable polynomial in z

 private:
  void check_same_order(const CycInt& o) const;

  int t_;
  std::vector<Int> c_;  // length deg(Phi_t)
};

}  // namespace sptq
