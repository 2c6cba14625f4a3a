#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sptq/cyclotomic.hpp"

namespace sptq {

/// Truncated power series in q with coefficients in Z[zeta_t].
/// Coefficients of q^0..q^trunc are meaningful; arithmetic results carry
/// trunc = min of the operand truncs.
class QSeries {
 public:
  QSeries() : QSeries(1, 0) {}
  QSeries(int t, int trunc) : t_(t), trunc_(trunc), c_(size_t(trunc) + 1, CycInt(t)) {}
  static QSeries one(int t, int trunc) {
    QSeries s(t, trunc);
    s.c_[0] = CycInt(t, 1);
    return s;
  }

  int ring() const { return t_; }
  int trunc() const { return trunc_; }

  const CycInt& coeff(int e) const { return c_.at(size_t(e)); }
  void set_coeff(int e, CycInt v);
  void add_coeff(int e, const CycInt& v);
  // Coefficient as a rational integer; aborts if it is not one.
  const Int& int_coeff(int e) const { return coeff(e).integer_value(); }

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  void mul_scalar(const CycInt& c);
  void mul_int(const Int& k);
  void mul_qpow(int e);  // multiply by q^e (trunc unchanged, high terms drop)

  // In-place multiply / divide by (1 - c*q^e), e >= 1. O(trunc) coefficient ops.
  void mul_one_minus(const CycInt& c, int e);
  void div_one_minus(const CycInt& c, int e);

  QSeries truncated(int new_trunc) const;
  QSeries promote(int s) const;         // lift ring t -> s, requires t | s
  QSeries divexact_int(const Int& k) const;
  std::vector<QSeries> dissect(int t) const;  // component r: coeffs of q^{tn+r}

  bool is_zero() const;
  std::string str(int max_terms = 12) const;

 private:
  void check_compat(const QSeries& o) const;

  int t_;
  int trunc_;
  std::vector<CycInt> c_;
};

// First exponent (up to min trunc) where a and b differ, if any.
std::optional<int> first_diff(const QSeries& a, const QSeries& b);

// (c*q^shift; q^step)_inf = prod_{k>=0} (1 - c q^{shift+k*step}), shift >= 1.
QSeries poch_inf(int t, const CycInt& c, int shift, int step, int trunc);
QSeries poch_inf_inv(int t, const CycInt& c, int shift, int step, int trunc);
// Integer-scalar convenience (c = +1/-1 cover every product in the catalog).
QSeries poch_inf(int t, long c, int shift, int step, int trunc);
QSeries poch_inf_inv(int t, long c, int shift, int step, int trunc);

/// Sum over n >= n_start (while a(n) <= trunc) of
///   sign(n) * (1-zeta)(1-zeta^{-1}) * q^{a(n)} * [1 + q^{h(n)}]
///       / ((1 - zeta q^{g(n)})(1 - zeta^{-1} q^{g(n)}))
/// with zeta = zeta_t^{zeta_exp}. a must be strictly increasing.
struct LambertSpec {
  std::function<long(long)> a;
  std::function<long(long)> g;
  std::function<int(long)> sign;
  std::function<long(long)> extra_h;  // optional (1 + q^{h(n)}) factor
  bool has_extra = false;
  long n_start = 1;
};
QSeries lambert_sum(int t, long zeta_exp, const LambertSpec& spec, int trunc);

// phi(q) (sign=+1) or phi(-q) (sign=-1), checked sum form against product form.
QSeries theta_phi(int sign, int trunc);
// Ramanujan's f(q^a, q^b) via theta sum, checked against the triple product.
QSeries theta_f(int a_exp, int b_exp, int trunc);

}  // namespace sptq
