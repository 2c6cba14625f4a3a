#include "sptq/laurent.hpp"

#include <stdexcept>

namespace sptq {

Int LaurentRow::coeff(long m) const {
  long i = m - min_m;
  if (i < 0 || size_t(i) >= c.size()) return Int(0);
  return c[size_t(i)];
}

void LaurentRow::add(long m, const Int& v) {
  if (v == 0) return;
  if (c.empty()) {
    min_m = m;
    c.push_back(v);
    return;
  }
  if (m < min_m) {
    c.insert(c.begin(), size_t(min_m - m), Int(0));
    min_m = m;
  }
  long i = m - min_m;
  if (size_t(i) >= c.size()) c.resize(size_t(i) + 1);
  c[size_t(i)] += v;
}

void LaurentRow::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
  size_t lead = 0;
  while (lead < c.size() && c[lead] == 0) ++lead;
  if (lead) {
    c.erase(c.begin(), c.begin() + long(lead));
    min_m += long(lead);
  }
  if (c.empty()) min_m = 0;
}

bool LaurentRow::is_zero() const {
  for (const Int& v : c)
    if (v != 0) return false;
  return true;
}

namespace {

void row_add_scaled(LaurentRow& dst, const LaurentRow& src, long zshift, const Int& scale) {
  if (scale == 0) return;
  for (size_t i = 0; i < src.c.size(); ++i) {
    if (src.c[i] == 0) continue;
    dst.add(src.min_m + long(i) + zshift, src.c[i] * scale);
  }
}

}  // namespace

ZLaurentSeries ZLaurentSeries::one(int trunc) {
  ZLaurentSeries s(trunc);
  s.add_coeff(0, 0, Int(1));
  return s;
}

ZLaurentSeries& ZLaurentSeries::operator+=(const ZLaurentSeries& o) {
  if (o.trunc_ < trunc_) {
    trunc_ = o.trunc_;
    rows_.resize(size_t(trunc_) + 1);
  }
  for (int n = 0; n <= trunc_; ++n) row_add_scaled(rows_[size_t(n)], o.rows_[size_t(n)], 0, Int(1));
  return *this;
}

ZLaurentSeries& ZLaurentSeries::operator-=(const ZLaurentSeries& o) {
  if (o.trunc_ < trunc_) {
    trunc_ = o.trunc_;
    rows_.resize(size_t(trunc_) + 1);
  }
  for (int n = 0; n <= trunc_; ++n) row_add_scaled(rows_[size_t(n)], o.rows_[size_t(n)], 0, Int(-1));
  return *this;
}

void ZLaurentSeries::mul_int(const Int& k) {
  for (LaurentRow& r : rows_)
    for (Int& v : r.c) v *= k;
}

void ZLaurentSeries::mul_qpow(int e) {
  if (e < 0) throw std::invalid_argument("ZLaurentSeries::mul_qpow: negative exponent");
  if (e == 0) return;
  for (int n = trunc_; n >= 0; --n)
    rows_[size_t(n)] = n >= e ? rows_[size_t(n - e)] : LaurentRow{};
}

void ZLaurentSeries::mul_int_series(const QSeries& s) {
  if (s.ring() != 1) throw std::invalid_argument("mul_int_series: series must have integer ring");
  int nmax = std::min(trunc_, s.trunc());
  if (nmax < trunc_) {
    trunc_ = nmax;
    rows_.resize(size_t(nmax) + 1);
  }
  std::vector<LaurentRow> out(size_t(nmax) + 1);
  for (int k = 0; k <= nmax; ++k) {
    const Int& sk = s.int_coeff(k);
    if (sk == 0) continue;
    for (int n = k; n <= nmax; ++n) row_add_scaled(out[size_t(n)], rows_[size_t(n - k)], 0, sk);
  }
  rows_ = std::move(out);
}

void ZLaurentSeries::mul_one_minus_zq(int zpow, int e, const Int& c) {
  if (e < 1) throw std::invalid_argument("mul_one_minus_zq: exponent must be >= 1");
  for (int n = trunc_; n >= e; --n) row_add_scaled(rows_[size_t(n)], rows_[size_t(n - e)], zpow, -c);
}

void ZLaurentSeries::div_one_minus_zq(int zpow, int e, const Int& c) {
  if (e < 1) throw std::invalid_argument("div_one_minus_zq: exponent must be >= 1");
  for (int n = e; n <= trunc_; ++n) row_add_scaled(rows_[size_t(n)], rows_[size_t(n - e)], zpow, c);
}

void ZLaurentSeries::apply_rank_crank_stencil() {
  for (LaurentRow& r : rows_) {
    LaurentRow out;
    row_add_scaled(out, r, 0, Int(2));
    row_add_scaled(out, r, 1, Int(-1));
    row_add_scaled(out, r, -1, Int(-1));
    out.trim();
    r = std::move(out);
  }
}

QSeries ZLaurentSeries::specialize_at_root(int t) const {
  QSeries s(t, trunc_);
  for (int n = 0; n <= trunc_; ++n) {
    const LaurentRow& r = rows_[size_t(n)];
    CycInt acc(t);
    for (size_t i = 0; i < r.c.size(); ++i) {
      if (r.c[i] == 0) continue;
      CycInt z = CycInt::zeta_pow(t, r.min_m + long(i));
      z *= r.c[i];
      acc += z;
    }
    s.set_coeff(n, std::move(acc));
  }
  return s;
}

Int ZLaurentSeries::row_sum(int n) const {
  Int acc = 0;
  for (const Int& v : rows_.at(size_t(n)).c) acc += v;
  return acc;
}

Int ZLaurentSeries::class_sum(long k, int t, int n) const {
  const LaurentRow& r = rows_.at(size_t(n));
  Int acc = 0;
  for (size_t i = 0; i < r.c.size(); ++i) {
    long m = r.min_m + long(i);
    if (((m % t) + t) % t == ((k % t) + t) % t) acc += r.c[i];
  }
  return acc;
}

Int ZLaurentSeries::first_moment_positive(int n) const {
  const LaurentRow& r = rows_.at(size_t(n));
  Int acc = 0;
  for (size_t i = 0; i < r.c.size(); ++i) {
    long m = r.min_m + long(i);
    if (m >= 1) acc += Int(m) * r.c[i];
  }
  return acc;
}

bool ZLaurentSeries::symmetric() const {
  for (int n = 0; n <= trunc_; ++n) {
    const LaurentRow& r = rows_[size_t(n)];
    for (size_t i = 0; i < r.c.size(); ++i) {
      long m = r.min_m + long(i);
      if (r.c[i] != r.coeff(-m)) return false;
    }
  }
  return true;
}

void ZLaurentSeries::assert_support_bound() const {
  for (int n = 0; n <= trunc_; ++n) {
    const LaurentRow& r = rows_[size_t(n)];
    for (size_t i = 0; i < r.c.size(); ++i) {
      long m = r.min_m + long(i);
      if (r.c[i] != 0 && (m < -n || m > n))
        throw std::logic_error("ZLaurentSeries: support bound |m| <= n violated");
    }
  }
}

TwoVarTable TwoVarTable::from_laurent(std::string fam, const ZLaurentSeries& s) {
  s.assert_support_bound();
  TwoVarTable t(std::move(fam), s.trunc());
  for (int n = 0; n <= s.trunc(); ++n) {
    t.rows[size_t(n)] = s.row(n);
    t.rows[size_t(n)].trim();
  }
  return t;
}

void TwoVarTable::add(long m, int n, const Int& v) {
  if (m < -long(n) || m > long(n))
    throw std::logic_error("TwoVarTable: statistic outside |m| <= n");
  rows.at(size_t(n)).add(m, v);
}

Int TwoVarTable::row_sum(int n) const {
  Int acc = 0;
  for (const Int& v : rows.at(size_t(n)).c) acc += v;
  return acc;
}

Int TwoVarTable::class_sum(long k, int t, int n) const {
  const LaurentRow& r = rows.at(size_t(n));
  Int acc = 0;
  for (size_t i = 0; i < r.c.size(); ++i) {
    long m = r.min_m + long(i);
    if (((m % t) + t) % t == ((k % t) + t) % t) acc += r.c[i];
  }
  return acc;
}

Int TwoVarTable::first_moment_positive(int n) const {
  const LaurentRow& r = rows.at(size_t(n));
  Int acc = 0;
  for (size_t i = 0; i < r.c.size(); ++i) {
    long m = r.min_m + long(i);
    if (m >= 1) acc += Int(m) * r.c[i];
  }
  return acc;
}

QSeries TwoVarTable::specialize_at_root(int t) const {
  QSeries s(t, max_n);
  for (int n = 0; n <= max_n; ++n) {
    const LaurentRow& r = rows[size_t(n)];
    CycInt acc(t);
    for (size_t i = 0; i < r.c.size(); ++i) {
      if (r.c[i] == 0) continue;
      CycInt z = CycInt::zeta_pow(t, r.min_m + long(i));
      z *= r.c[i];
      acc += z;
    }
    s.set_coeff(n, std::move(acc));
  }
  return s;
}

bool TwoVarTable::symmetric() const {
  for (int n = 0; n <= max_n; ++n) {
    const LaurentRow& r = rows[size_t(n)];
    for (size_t i = 0; i < r.c.size(); ++i) {
      long m = r.min_m + long(i);
      if (r.c[i] != r.coeff(-m)) return false;
    }
  }
  return true;
}

bool TwoVarTable::operator==(const TwoVarTable& o) const {
  if (max_n != o.max_n) return false;
  for (int n = 0; n <= max_n; ++n) {
    const LaurentRow& a = rows[size_t(n)];
    const LaurentRow& b = o.rows[size_t(n)];
    long lo = std::min(a.min_m, b.min_m);
    long hi = std::max(a.min_m + long(a.c.size()), b.min_m + long(b.c.size()));
    for (long m = lo; m < hi; ++m)
      if (entry(m, n) != o.entry(m, n)) return false;
  }
  return true;
}

}  // namespace sptq
