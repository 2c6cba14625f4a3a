#include "sptq/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace sptq {

void QSeries::check_compat(const QSeries& o) const {
  if (t_ != o.t_) throw std::invalid_argument("QSeries ring mismatch");
}

void QSeries::set_coeff(int e, CycInt v) {
  if (v.order() != t_) throw std::invalid_argument("QSeries::set_coeff ring mismatch");
  c_.at(size_t(e)) = std::move(v);
}

void QSeries::add_coeff(int e, const CycInt& v) {
  if (v.order() != t_) throw std::invalid_argument("QSeries::add_coeff ring mismatch");
  c_.at(size_t(e)) += v;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (CycInt& x : r.c_) x = -x;
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  check_compat(o);
  if (o.trunc_ < trunc_) {
    trunc_ = o.trunc_;
    c_.resize(size_t(trunc_) + 1, CycInt(t_));
  }
  for (int i = 0; i <= trunc_; ++i) c_[size_t(i)] += o.c_[size_t(i)];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  check_compat(o);
  if (o.trunc_ < trunc_) {
    trunc_ = o.trunc_;
    c_.resize(size_t(trunc_) + 1, CycInt(t_));
  }
  for (int i = 0; i <= trunc_; ++i) c_[size_t(i)] -= o.c_[size_t(i)];
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.check_compat(b);
  int n = std::min(a.trunc_, b.trunc_);
  QSeries r(a.t_, n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[size_t(i)].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.c_[size_t(j)].is_zero()) continue;
      r.c_[size_t(i + j)] += a.c_[size_t(i)] * b.c_[size_t(j)];
    }
  }
  return r;
}

void QSeries::mul_scalar(const CycInt& c) {
  if (c.order() != t_) throw std::invalid_argument("QSeries::mul_scalar ring mismatch");
  for (CycInt& x : c_) x *= c;
}

void QSeries::mul_int(const Int& k) {
  for (CycInt& x : c_) x *= k;
}

void QSeries::mul_qpow(int e) {
  if (e < 0) throw std::invalid_argument("QSeries::mul_qpow: negative exponent");
  if (e == 0) return;
  for (int i = trunc_; i >= 0; --i)
    c_[size_t(i)] = i >= e ? c_[size_t(i - e)] : CycInt(t_);
}

void QSeries::mul_one_minus(const CycInt& c, int e) {
  if (e < 1) throw std::invalid_argument("QSeries::mul_one_minus: exponent must be >= 1");
  if (c.order() != t_) throw std::invalid_argument("QSeries::mul_one_minus ring mismatch");
  for (int i = trunc_; i >= e; --i) c_[size_t(i)] -= c * c_[size_t(i - e)];
}

void QSeries::div_one_minus(const CycInt& c, int e) {
  if (e < 1) throw std::invalid_argument("QSeries::div_one_minus: exponent must be >= 1");
  if (c.order() != t_) throw std::invalid_argument("QSeries::div_one_minus ring mismatch");
  for (int i = e; i <= trunc_; ++i) c_[size_t(i)] += c * c_[size_t(i - e)];
}

QSeries QSeries::truncated(int new_trunc) const {
  if (new_trunc > trunc_) throw std::invalid_argument("QSeries::truncated: cannot extend");
  QSeries r(t_, new_trunc);
  for (int i = 0; i <= new_trunc; ++i) r.c_[size_t(i)] = c_[size_t(i)];
  return r;
}

QSeries QSeries::promote(int s) const {
  QSeries r(s, trunc_);
  for (int i = 0; i <= trunc_; ++i) r.c_[size_t(i)] = c_[size_t(i)].lift(s);
  return r;
}

QSeries QSeries::divexact_int(const Int& k) const {
  QSeries r(t_, trunc_);
  for (int i = 0; i <= trunc_; ++i) r.c_[size_t(i)] = c_[size_t(i)].divexact(k);
  return r;
}

std::vector<QSeries> QSeries::dissect(int t) const {
  if (t < 1) throw std::invalid_argument("QSeries::dissect: t must be >= 1");
  std::vector<QSeries> out;
  out.reserve(size_t(t));
  for (int r = 0; r < t; ++r) {
    int comp_trunc = (trunc_ - r) / t;
    if (comp_trunc < 0) comp_trunc = 0;  // degenerate r > trunc: zero constant
    QSeries comp(t_, comp_trunc);
    for (int n = 0; n * t + r <= trunc_; ++n) comp.c_[size_t(n)] = c_[size_t(n * t + r)];
    out.push_back(std::move(comp));
  }
  return out;
}

bool QSeries::is_zero() const {
  for (const CycInt& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

std::string QSeries::str(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (int i = 0; i <= trunc_ && shown < max_terms; ++i) {
    if (c_[size_t(i)].is_zero()) continue;
    if (shown) os << " + ";
    os << "(" << c_[size_t(i)].str() << ")q^" << i;
    ++shown;
  }
  if (!shown) os << "0";
  os << " [O(q^" << trunc_ + 1 << ")]";
  return os.str();
}

std::optional<int> first_diff(const QSeries& a, const QSeries& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("first_diff: ring mismatch");
  int n = std::min(a.trunc(), b.trunc());
  for (int i = 0; i <= n; ++i)
    if (!(a.coeff(i) == b.coeff(i))) return i;
  return std::nullopt;
}

QSeries poch_inf(int t, const CycInt& c, int shift, int step, int trunc) {
  if (shift < 1) throw std::invalid_argument("poch_inf: shift must be >= 1");
  if (step < 1) throw std::invalid_argument("poch_inf: step must be >= 1");
  QSeries r = QSeries::one(t, trunc);
  if (c.is_zero()) return r;
  for (int e = shift; e <= trunc; e += step) r.mul_one_minus(c, e);
  return r;
}

QSeries poch_inf_inv(int t, const CycInt& c, int shift, int step, int trunc) {
  if (shift < 1) throw std::invalid_argument("poch_inf_inv: shift must be >= 1");
  if (step < 1) throw std::invalid_argument("poch_inf_inv: step must be >= 1");
  QSeries r = QSeries::one(t, trunc);
  if (c.is_zero()) return r;
  for (int e = shift; e <= trunc; e += step) r.div_one_minus(c, e);
  return r;
}

QSeries poch_inf(int t, long c, int shift, int step, int trunc) {
  return poch_inf(t, CycInt(t, c), shift, step, trunc);
}
QSeries poch_inf_inv(int t, long c, int shift, int step, int trunc) {
  return poch_inf_inv(t, CycInt(t, c), shift, step, trunc);
}

QSeries lambert_sum(int t, long zeta_exp, const LambertSpec& spec, int trunc) {
  CycInt z = CycInt::zeta_pow(t, zeta_exp);
  CycInt zi = CycInt::zeta_pow(t, -zeta_exp);
  CycInt front = (CycInt(t, 1) - z) * (CycInt(t, 1) - zi);
  QSeries acc(t, trunc);
  if (front.is_zero()) return acc;  // zeta = 1 kills every term
  long prev_a = -1;
  for (long n = spec.n_start;; ++n) {
    long a = spec.a(n);
    if (a <= prev_a) throw std::invalid_argument("lambert_sum: exponents not strictly increasing");
    prev_a = a;
    if (a > trunc) break;
    long g = spec.g(n);
    if (g < 1) throw std::invalid_argument("lambert_sum: pole exponent must be >= 1");
    QSeries term(t, trunc);
    CycInt coeff = front;
    if (spec.sign(n) < 0) coeff = -coeff;
    term.add_coeff(int(a), coeff);
    if (spec.has_extra) {
      long h = spec.extra_h(n);
      if (a + h <= trunc) term.add_coeff(int(a + h), coeff);
    }
    term.div_one_minus(z, int(g));
    term.div_one_minus(zi, int(g));
    acc += term;
  }
  return acc;
}

QSeries theta_phi(int sign, int trunc) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("theta_phi: sign must be +-1");
  QSeries sum(1, trunc);
  sum.add_coeff(0, CycInt(1, 1));
  for (long k = 1; k * k <= trunc; ++k)
    sum.add_coeff(int(k * k), CycInt(1, (sign < 0 && k % 2) ? -2 : 2));
  // Product form: phi(q) = (-q;q^2)^2 (q^2;q^2); phi(-q) = (q;q^2)^2 (q^2;q^2).
  QSeries prod = poch_inf(1, sign < 0 ? 1 : -1, 1, 2, trunc);
  prod = prod * prod * poch_inf(1, 1, 2, 2, trunc);
  if (first_diff(sum, prod)) throw std::logic_error("theta_phi: sum and product forms disagree");
  return sum;
}

QSeries theta_f(int a_exp, int b_exp, int trunc) {
  if (a_exp < 1 || b_exp < 1)
    throw std::invalid_argument("theta_f: exponents must be >= 1 for the product form");
  QSeries sum(1, trunc);
  for (long k = 0;; ++k) {  // k and -k branches of sum_{k in Z} a^{k(k+1)/2} b^{k(k-1)/2}
    long ep = a_exp * (k * (k + 1) / 2) + b_exp * (k * (k - 1) / 2);
    long en = a_exp * (k * (k - 1) / 2) + b_exp * (k * (k + 1) / 2);
    if (ep > trunc && en > trunc) break;
    if (ep <= trunc) sum.add_coeff(int(ep), CycInt(1, 1));
    if (k > 0 && en <= trunc) sum.add_coeff(int(en), CycInt(1, 1));
  }
  int ab = a_exp + b_exp;
  QSeries prod = poch_inf(1, -1, a_exp, ab, trunc) * poch_inf(1, -1, b_exp, ab, trunc) *
                 poch_inf(1, 1, ab, ab, trunc);
  if (first_diff(sum, prod)) throw std::logic_error("theta_f: sum and product forms disagree");
  return sum;
}

}  // namespace sptq
