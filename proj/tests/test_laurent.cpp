#include "doctest.h"
#include "sptq/laurent.hpp"

using namespace sptq;

namespace {

ZLaurentSeries sample_series(int N) {
  ZLaurentSeries s(N);
  for (int n = 0; n <= N; ++n)
    for (long m = -n; m <= n; ++m) s.add_coeff(m, n, Int((m * m + n) % 7 - 3));
  return s;
}

}  // namespace

TEST_CASE("row arithmetic") {
  LaurentRow r;
  r.add(-2, Int(3));
  r.add(5, Int(-1));
  r.add(-2, Int(-3));
  r.trim();
  CHECK(r.coeff(-2) == 0);
  CHECK(r.coeff(5) == -1);
  CHECK(r.coeff(0) == 0);
}

TEST_CASE("stencil rows sum to zero") {
  // (1-z)(1-z^{-1}) X vanishes at z = 1, so every q-row sums to 0.
  ZLaurentSeries s = sample_series(12);
  s.apply_rank_crank_stencil();
  for (int n = 0; n <= 12; ++n) CHECK(s.row_sum(n) == 0);
}

TEST_CASE("specialization commutes with addition and stencil") {
  int N = 10;
  ZLaurentSeries a = sample_series(N);
  ZLaurentSeries b(N);
  for (int n = 0; n <= N; ++n) b.add_coeff(n % 3 - 1, n, Int(n + 1));
  QSeries sum_then = (a + b).specialize_at_root(5);
  QSeries then_sum = a.specialize_at_root(5) + b.specialize_at_root(5);
  CHECK(first_diff(sum_then, then_sum) == std::nullopt);

  // stencil then specialize = multiply the specialization by (1-z)(1-z^{-1})
  ZLaurentSeries c = sample_series(N);
  c.apply_rank_crank_stencil();
  QSeries lhs = c.specialize_at_root(5);
  QSeries rhs = sample_series(N).specialize_at_root(5);
  CycInt z = CycInt::zeta_pow(5, 1), zi = CycInt::zeta_pow(5, -1);
  rhs.mul_scalar((CycInt(5, 1) - z) * (CycInt(5, 1) - zi));
  CHECK(first_diff(lhs, rhs) == std::nullopt);
}

TEST_CASE("mul and div by 1 - c z q^e invert each other") {
  ZLaurentSeries s = sample_series(14);
  ZLaurentSeries orig = s;
  s.div_one_minus_zq(1, 2);
  s.mul_one_minus_zq(1, 2);
  for (int n = 0; n <= 14; ++n)
    for (long m = -n - 2; m <= n + 2; ++m) CHECK(s.coeff(m, n) == orig.coeff(m, n));
  s.div_one_minus_zq(-1, 3, Int(-1));
  s.mul_one_minus_zq(-1, 3, Int(-1));
  for (int n = 0; n <= 14; ++n)
    for (long m = -n - 4; m <= n + 4; ++m) CHECK(s.coeff(m, n) == orig.coeff(m, n));
}

TEST_CASE("mul_int_series convolves rows") {
  int N = 8;
  ZLaurentSeries s(N);
  s.add_coeff(1, 1, Int(1));
  QSeries g(1, N);  // 1 + q
  g.add_coeff(0, CycInt(1, 1));
  g.add_coeff(1, CycInt(1, 1));
  s.mul_int_series(g);
  CHECK(s.coeff(1, 1) == 1);
  CHECK(s.coeff(1, 2) == 1);
  CHECK(s.coeff(1, 3) == 0);
}

TEST_CASE("class sums partition the row sum") {
  ZLaurentSeries s = sample_series(10);
  for (int n = 0; n <= 10; ++n)
    for (int t : {2, 3, 5}) {
      Int acc = 0;
      for (long k = 0; k < t; ++k) acc += s.class_sum(k, t, n);
      CHECK(acc == s.row_sum(n));
    }
}

TEST_CASE("first positive moment") {
  ZLaurentSeries s(3);
  s.add_coeff(-2, 3, Int(5));
  s.add_coeff(1, 3, Int(4));
  s.add_coeff(2, 3, Int(7));
  CHECK(s.first_moment_positive(3) == 4 + 2 * 7);
}

TEST_CASE("support bound enforcement") {
  ZLaurentSeries ok = sample_series(5);
  CHECK_NOTHROW(ok.assert_support_bound());
  ZLaurentSeries bad(5);
  bad.add_coeff(4, 2, Int(1));
  CHECK_THROWS(bad.assert_support_bound());
}

TEST_CASE("symmetry detection") {
  ZLaurentSeries s(6);
  for (int n = 0; n <= 6; ++n)
    for (long m = -n; m <= n; ++m) s.add_coeff(m, n, Int(m * m + n));
  CHECK(s.symmetric());
  s.add_coeff(1, 4, Int(1));
  CHECK(!s.symmetric());
}

TEST_CASE("table round trip and comparison") {
  ZLaurentSeries s = sample_series(7);
  TwoVarTable tab = TwoVarTable::from_laurent("X", s);
  for (int n = 0; n <= 7; ++n)
    for (long m = -n; m <= n; ++m) CHECK(tab.entry(m, n) == s.coeff(m, n));
  TwoVarTable other = TwoVarTable::from_laurent("Y", s);
  CHECK(tab == other);
  other.add(0, 3, Int(1));
  CHECK(!(tab == other));
  CHECK_THROWS(other.add(5, 3, Int(1)));
}
