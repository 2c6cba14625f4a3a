#include "sptq/cyclotomic.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace sptq {

namespace poly {

std::vector<Int> trim(std::vector<Int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(std::move(r));
}

std::vector<Int> divexact(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> n = trim(num), d = trim(den);
  if (d.empty()) throw std::invalid_argument("poly division by zero");
  if (n.empty()) return {};
  if (n.size() < d.size()) throw std::invalid_argument("poly divexact: inexact");
  std::vector<Int> q(n.size() - d.size() + 1);
  for (size_t i = q.size(); i-- > 0;) {
    Int c;
    mpz_divexact(c.get_mpz_t(), n[i + d.size() - 1].get_mpz_t(), d.back().get_mpz_t());
    q[i] = c;
    for (size_t j = 0; j < d.size(); ++j) n[i + j] -= c * d[j];
  }
  for (const Int& c : n)
    if (c != 0) throw std::invalid_argument("poly divexact: nonzero remainder");
  return trim(std::move(q));
}

std::vector<Int> rem_monic(std::vector<Int> p, const std::vector<Int>& m) {
  if (m.empty() || m.back() != 1) throw std::invalid_argument("rem_monic: divisor not monic");
  p = trim(std::move(p));
  const size_t dm = m.size() - 1;
  while (p.size() > dm) {
    Int c = p.back();
    size_t off = p.size() - 1 - dm;
    for (size_t j = 0; j < m.size(); ++j) p[off + j] -= c * m[j];
    p = trim(std::move(p));
  }
  return p;
}

}  // namespace poly

namespace {

std::vector<Int> x_pow_minus_one(int n) {
  std::vector<Int> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  return p;
}

std::map<int, std::vector<Int>>& phi_cache() {
  static std::map<int, std::vector<Int>> cache;
  return cache;
}
std::mutex phi_mutex;

const std::vector<Int>& phi_unlocked(int t) {
  auto& cache = phi_cache();
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;
  // Phi_t = (x^t - 1) / prod_{d | t, d < t} Phi_d
  std::vector<Int> den{Int(1)};
  for (int d = 1; d < t; ++d)
    if (t % d == 0) den = poly::mul(den, phi_unlocked(d));
  return cache.emplace(t, poly::divexact(x_pow_minus_one(t), den)).first->second;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(int t) {
  if (t < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(phi_mutex);
  return phi_unlocked(t);
}

int cyclotomic_degree(int t) { return int(cyclotomic_poly(t).size()) - 1; }

CycInt::CycInt(int t, const Int& constant) : t_(t), c_(cyclotomic_degree(t)) {
  // For t=1 the residue ring Z[x]/(x-1) identifies x with 1; the single slot
  // holds the value itself, so this works uniformly for all t.
  c_[0] = constant;
}

CycInt CycInt::from_poly(int t, const std::vector<Int>& raw) {
  CycInt r(t);
  std::vector<Int> red = poly::rem_monic(raw, cyclotomic_poly(t));
  for (size_t i = 0; i < red.size(); ++i) r.c_[i] = red[i];
  return r;
}

CycInt CycInt::zeta_pow(int t, long k) {
  long m = ((k % t) + t) % t;
  std::vector<Int> p(size_t(m) + 1);
  p[size_t(m)] = 1;
  return from_poly(t, p);
}

bool CycInt::is_zero() const {
  for (const Int& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycInt::is_integer() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const Int& CycInt::integer_value() const {
  if (!is_integer()) throw std::logic_error("CycInt is not a rational integer");
  return c_[0];
}

void CycInt::check_same_order(const CycInt& o) const {
  if (t_ != o.t_) throw std::invalid_argument("CycInt order mismatch");
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (Int& x : r.c_) x = -x;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same_order(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same_order(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  check_same_order(o);
  if (c_.size() == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Int> prod = poly::mul(c_, o.c_);
  std::vector<Int> red = poly::rem_monic(std::move(prod), cyclotomic_poly(t_));
  std::fill(c_.begin(), c_.end(), Int(0));
  for (size_t i = 0; i < red.size(); ++i) c_[i] = red[i];
  return *this;
}

CycInt& CycInt::operator*=(const Int& k) {
  for (Int& x : c_) x *= k;
  return *this;
}

CycInt CycInt::divexact(const Int& k) const {
  CycInt r(t_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!mpz_divisible_p(c_[i].get_mpz_t(), k.get_mpz_t()))
      throw std::logic_error("CycInt::divexact: coefficient not divisible");
    mpz_divexact(r.c_[i].get_mpz_t(), c_[i].get_mpz_t(), k.get_mpz_t());
  }
  return r;
}

CycInt CycInt::lift(int s) const {
  if (s % t_ != 0) throw std::invalid_argument("CycInt::lift: target order not a multiple");
  int step = s / t_;
  std::vector<Int> raw;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    size_t e = i * size_t(step);
    if (raw.size() <= e) raw.resize(e + 1);
    raw[e] += c_[i];
  }
  return from_poly(s, raw);
}

std::string CycInt::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int a = c_[i];
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    Int mag = abs(a);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i == 1) os << (mag != 1 ? "*z" : "z");
    if (i > 1) os << (mag != 1 ? "*z^" : "z^") << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace sptq
