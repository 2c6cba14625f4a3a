#include <cmath>

#include "doctest.h"
#include "sptq/partitions.hpp"
#include "sptq/qseries.hpp"

using namespace sptq;

TEST_CASE("pentagonal number expansion of (q;q)_inf") {
  QSeries e = poch_inf(1, 1, 1, 1, 7);
  std::vector<long> want = {1, -1, -1, 0, 0, 1, 0, 1};
  for (int n = 0; n <= 7; ++n) CHECK(e.int_coeff(n) == want[size_t(n)]);
}

TEST_CASE("pochhammer products match enumerations") {
  int N = 30;
  QSeries dist = poch_inf(1, -1, 1, 1, N);     // (-q;q)_inf: distinct partitions
  QSeries parts = poch_inf_inv(1, 1, 1, 1, N); // 1/(q;q)_inf: all partitions
  for (int n = 1; n <= N; ++n) {
    CHECK(dist.int_coeff(n) == count_distinct_partitions(n));
    CHECK(parts.int_coeff(n) == count_partitions(n));
  }
  CHECK(dist.int_coeff(6) == 4);
  CHECK(parts.int_coeff(5) == 7);
}

TEST_CASE("poch_inf and its inverse cancel") {
  for (int t : {1, 3, 5}) {
    QSeries p = poch_inf(t, 1, 2, 3, 25) * poch_inf_inv(t, 1, 2, 3, 25);
    CHECK(first_diff(p, QSeries::one(t, 25)) == std::nullopt);
    QSeries m = poch_inf(t, -1, 1, 2, 25) * poch_inf_inv(t, -1, 1, 2, 25);
    CHECK(first_diff(m, QSeries::one(t, 25)) == std::nullopt);
  }
}

TEST_CASE("convolution") {
  // (sum_{n>=0} q^n)^2 has coefficient n+1
  QSeries g(1, 10);
  for (int n = 0; n <= 10; ++n) g.add_coeff(n, CycInt(1, 1));
  QSeries g2 = g * g;
  for (int n = 0; n <= 10; ++n) CHECK(g2.int_coeff(n) == n + 1);
}

TEST_CASE("mul and div by 1 - c q^e invert each other") {
  QSeries s(3, 20);
  s.add_coeff(0, CycInt(3, 2));
  s.add_coeff(1, CycInt::zeta_pow(3, 1));
  s.add_coeff(4, CycInt(3, -5));
  QSeries orig = s;
  s.mul_one_minus(CycInt::zeta_pow(3, 2), 3);
  s.div_one_minus(CycInt::zeta_pow(3, 2), 3);
  CHECK(first_diff(s, orig) == std::nullopt);
}

TEST_CASE("dissection round trip") {
  for (int t : {2, 3, 5, 13}) {
    QSeries s(1, 40);
    for (int n = 0; n <= 40; ++n) s.add_coeff(n, CycInt(1, (n * n + 3 * n) % 17 - 8));
    auto comps = s.dissect(t);
    REQUIRE(int(comps.size()) == t);
    for (int r = 0; r < t; ++r)
      for (int k = 0; k <= comps[size_t(r)].trunc(); ++k)
        CHECK(comps[size_t(r)].coeff(k) == s.coeff(t * k + r));
  }
}

TEST_CASE("lambert sum vanishes at zeta = 1") {
  LambertSpec spec;
  spec.a = [](long n) { return n * n; };
  spec.g = [](long n) { return n; };
  spec.sign = [](long n) { return n % 2 ? -1 : 1; };
  QSeries s = lambert_sum(5, 0, spec, 30);  // zeta^0 = 1, so (1-zeta) kills everything
  CHECK(s.is_zero());
}

TEST_CASE("lambert sum against direct geometric expansion") {
  // sum_{n>=1} (-1)^n (1-z)(1-z^{-1}) q^n / ((1-z q^n)(1-z^{-1} q^n)) at z = zeta_3:
  // expand each factor geometrically and reduce in Z[zeta_3].
  int N = 18, t = 3;
  LambertSpec spec;
  spec.a = [](long n) { return n; };
  spec.g = [](long n) { return n; };
  spec.sign = [](long n) { return n % 2 ? -1 : 1; };
  QSeries got = lambert_sum(t, 1, spec, N);

  QSeries want(t, N);
  CycInt z = CycInt::zeta_pow(t, 1), zi = CycInt::zeta_pow(t, -1);
  CycInt front = (CycInt(t, 1) - z) * (CycInt(t, 1) - zi);
  for (int n = 1; n <= N; ++n) {
    // q^n / ((1-z q^n)(1-z^{-1} q^n)) = sum_{i,j>=0} z^{i-j} q^{n(1+i+j)}
    for (int i = 0; n * (1 + i) <= N; ++i)
      for (int j = 0; n * (1 + i + j) <= N; ++j) {
        CycInt term = front * CycInt::zeta_pow(t, i - j);
        if (n % 2) term = -term;
        want.add_coeff(n * (1 + i + j), term);
      }
  }
  CHECK(first_diff(got, want) == std::nullopt);
}

TEST_CASE("theta functions") {
  QSeries phi = theta_phi(1, 9);
  std::vector<long> want = {1, 2, 0, 0, 2, 0, 0, 0, 0, 2};
  for (int n = 0; n <= 9; ++n) CHECK(phi.int_coeff(n) == want[size_t(n)]);
  QSeries phim = theta_phi(-1, 9);
  for (int n = 0; n <= 9; ++n) {
    long s = n == 0 ? 1 : 0;
    long r = long(std::round(std::sqrt(double(n))));
    if (n > 0 && r * r == n) s = r % 2 ? -2 : 2;
    CHECK(phim.int_coeff(n) == s);
  }
  // f(q, q^2) coefficients: exponents k(3k-1)/2 over all integers k
  QSeries f = theta_f(1, 2, 30);
  QSeries want_f(1, 30);
  for (long k = -10; k <= 10; ++k) {
    long e = k * (3 * k - 1) / 2;
    if (e >= 0 && e <= 30) want_f.add_coeff(int(e), CycInt(1, 1));
  }
  CHECK(first_diff(f, want_f) == std::nullopt);
}

TEST_CASE("promote into a larger ring") {
  QSeries s(1, 10);
  s.add_coeff(2, CycInt(1, 3));
  s.add_coeff(7, CycInt(1, -4));
  QSeries p = s.promote(6);
  CHECK(p.ring() == 6);
  CHECK(p.coeff(2) == CycInt(6, 3));
  CHECK(p.coeff(7) == CycInt(6, -4));
}
