#pragma once

#include <string>
#include <vector>

#include "sptq/qseries.hpp"

namespace sptq {

/// One q-row: a Laurent polynomial in z with integer coefficients.
/// c[i] is the coefficient of z^{min_m + i}; empty c means the zero polynomial.
struct LaurentRow {
  long min_m = 0;
  std::vector<Int> c;

  Int coeff(long m) const;
  void add(long m, const Int& v);
  void trim();
  bool is_zero() const;
};

/// Two-variable series sum_n row_n(z) q^n, truncated in q. Rows may carry any
/// finite z-support while a build is in flight; finished builders call
/// assert_support_bound() to certify |m| <= n.
class ZLaurentSeries {
 public:
  explicit ZLaurentSeries(int trunc) : trunc_(trunc), rows_(size_t(trunc) + 1) {}
  static ZLaurentSeries one(int trunc);

  int trunc() const { return trunc_; }
  Int coeff(long m, int n) const { return rows_.at(size_t(n)).coeff(m); }
  void add_coeff(long m, int n, const Int& v) { rows_.at(size_t(n)).add(m, v); }
  const LaurentRow& row(int n) const { return rows_.at(size_t(n)); }

  ZLaurentSeries& operator+=(const ZLaurentSeries& o);
  ZLaurentSeries& operator-=(const ZLaurentSeries& o);
  friend ZLaurentSeries operator+(ZLaurentSeries a, const ZLaurentSeries& b) { return a += b; }
  friend ZLaurentSeries operator-(ZLaurentSeries a, const ZLaurentSeries& b) { return a -= b; }

  void mul_int(const Int& k);
  void mul_qpow(int e);
  // Multiply rows by an integer q-series (ring t=1): row_n = sum_k s_k row_{n-k}.
  void mul_int_series(const QSeries& s);
  // In-place multiply / divide by (1 - c * z^{zpow} * q^e), zpow in {-1,0,1}, e >= 1.
  void mul_one_minus_zq(int zpow, int e, const Int& c = Int(1));
  void div_one_minus_zq(int zpow, int e, const Int& c = Int(1));
  // Multiply by (1-z)(1-z^{-1}) = 2 - z - z^{-1}.
  void apply_rank_crank_stencil();

  QSeries specialize_at_root(int t) const;  // sum_m c(m,n) zeta_t^m per row
  Int row_sum(int n) const;
  Int class_sum(long k, int t, int n) const;
  Int first_moment_positive(int n) const;  // sum_{m>=1} m * c(m,n)

  bool symmetric() const;  // c(m,n) == c(-m,n) everywhere
  void assert_support_bound() const;

 private:
  int trunc_;
  std::vector<LaurentRow> rows_;
};

/// Exact integer table (m,n) -> count for a statistic family, |m| <= n.
struct TwoVarTable {
  std::string family;
  int max_n = 0;
  std::vector<LaurentRow> rows;

  TwoVarTable() = default;
  TwoVarTable(std::string fam, int n) : family(std::move(fam)), max_n(n), rows(size_t(n) + 1) {}
  static TwoVarTable from_laurent(std::string fam, const ZLaurentSeries& s);

  Int entry(long m, int n) const { return rows.at(size_t(n)).coeff(m); }
  void add(long m, int n, const Int& v);
  Int row_sum(int n) const;
  Int class_sum(long k, int t, int n) const;
  Int first_moment_positive(int n) const;
  QSeries specialize_at_root(int t) const;
  bool symmetric() const;
  bool operator==(const TwoVarTable& o) const;  // compares values, not family names
};

}  // namespace sptq
