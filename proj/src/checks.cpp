#include "sptq/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace sptq {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<CheckWitness> witness_fail(long n, long m, std::string expected, std::string got) {
  return CheckWitness{n, m, std::move(expected), std::move(got)};
}

// Minimal-n, then minimal-|m| (positive first) difference between two rows.
std::optional<CheckWitness> cmp_laurent(const ZLaurentSeries& a, const ZLaurentSeries& b) {
  int nmax = std::min(a.trunc(), b.trunc());
  for (int n = 0; n <= nmax; ++n) {
    for (long am = 0; am <= n + 1; ++am)
      for (long m : {am, -am}) {
        if (m == 0 && am != 0) continue;
        Int x = a.coeff(m, n), y = b.coeff(m, n);
        if (x != y) return witness_fail(n, m, y.get_str(), x.get_str());
      }
  }
  return std::nullopt;
}

std::optional<CheckWitness> cmp_qseries(const QSeries& a, const QSeries& b, long mtag = 0) {
  auto d = first_diff(a, b);
  if (!d) return std::nullopt;
  return witness_fail(*d, mtag, b.coeff(*d).str(), a.coeff(*d).str());
}

// ----- caches ----------------------------------------------------------

template <typename K, typename V>
const V& memo(std::map<K, V>& cache, std::mutex& mu, const K& key, std::function<V()> make) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make()).first;
  return it->second;
}

const ZLaurentSeries& cached_sbar(SBFamily f, int trunc) {
  static std::map<std::pair<int, int>, ZLaurentSeries> cache;
  static std::mutex mu;
  return memo<std::pair<int, int>, ZLaurentSeries>(
      cache, mu, {int(f), trunc}, [&] { return sbar_series(f, trunc); });
}

const ZLaurentSeries& cached_stat(StatFamily f, int trunc) {
  static std::map<std::pair<int, int>, ZLaurentSeries> cache;
  static std::mutex mu;
  return memo<std::pair<int, int>, ZLaurentSeries>(
      cache, mu, {int(f), trunc}, [&] { return stat_series(f, trunc); });
}

const QSeries& cached_spt_gf(SptVariant v, int trunc) {
  static std::map<std::pair<int, int>, QSeries> cache;
  static std::mutex mu;
  return memo<std::pair<int, int>, QSeries>(
      cache, mu, {int(v), trunc}, [&] { return spt_gf(v, trunc); });
}

bool is_square(long n) {
  long r = long(std::sqrt(double(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}
bool is_twice_square(long n) { return n % 2 == 0 && is_square(n / 2); }
bool is_odd_square(long n) { return is_square(n) && n % 2 == 1; }
bool is_even_square(long n) { return is_square(n) && n % 2 == 0; }

// ----- individual checks ----------------------------------------------

std::optional<CheckWitness> rank_crank_stencil(int which, long N) {
  int n = int(N);
  switch (which) {
    case 1: {
      ZLaurentSeries lhs = cached_sbar(SBFamily::SB, n);
      lhs.apply_rank_crank_stencil();
      ZLaurentSeries rhs = cached_stat(StatFamily::Nbar, n) - cached_stat(StatFamily::Mbar, n);
      return cmp_laurent(lhs, rhs);
    }
    case 2: {
      ZLaurentSeries lhs = cached_sbar(SBFamily::S2B, n);
      lhs.apply_rank_crank_stencil();
      ZLaurentSeries rhs = cached_stat(StatFamily::N2, n) - cached_stat(StatFamily::M2, n);
      return cmp_laurent(lhs, rhs);
    }
    case 3: {  // doubled: 2*stencil(SB2) = Nbar - 2*Mbar + eps
      ZLaurentSeries lhs = cached_sbar(SBFamily::SB2, n);
      lhs.apply_rank_crank_stencil();
      lhs.mul_int(Int(2));
      ZLaurentSeries rhs = cached_stat(StatFamily::Nbar, n);
      ZLaurentSeries mb = cached_stat(StatFamily::Mbar, n);
      mb.mul_int(Int(2));
      rhs -= mb;
      rhs += epsilon_series(n);
      return cmp_laurent(lhs, rhs);
    }
    case 4: {  // doubled: 2*stencil(SB1) = Nbar - eps
      ZLaurentSeries lhs = cached_sbar(SBFamily::SB1, n);
      lhs.apply_rank_crank_stencil();
      lhs.mul_int(Int(2));
      ZLaurentSeries rhs = cached_stat(StatFamily::Nbar, n) - epsilon_series(n);
      return cmp_laurent(lhs, rhs);
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<CheckWitness> dissection_check(int theorem, long N) {
  int t = dissection_modulus(theorem);
  int overall = t * (int(N) + 1);
  QSeries left = dissection_left_side(theorem, overall);
  std::vector<QSeries> comps = left.dissect(t);
  for (auto& [r, expected] : dissection_components(theorem, int(N))) {
    auto w = cmp_qseries(comps[size_t(r)].truncated(int(N)), expected, r);
    if (w) return w;
  }
  return std::nullopt;
}

std::optional<CheckWitness> zi_dissection(long N) {
  int n = int(N);
  for (int which = 0; which < 3; ++which) {
    SBFamily fam = which == 0 ? SBFamily::SB : which == 1 ? SBFamily::SB1 : SBFamily::SB2;
    QSeries expected(4, n);
    if (which == 1) {
      for (long k = 1; (2 * k - 1) * (2 * k - 1) <= n; ++k)
        expected.add_coeff(int((2 * k - 1) * (2 * k - 1)), CycInt(4, 1));
    } else {
      for (long k = 1; k * k <= n; ++k) {
        long e = k * k;
        if (which == 2 && k % 2 == 1) continue;  // even squares only
        expected.add_coeff(int(e), CycInt(4, 1));
      }
      for (long k = 1; 2 * k * k <= n; ++k)
        expected.add_coeff(int(2 * k * k), CycInt(4, k % 2 ? 1 : -1));
    }
    auto w = cmp_qseries(sbar_at_root(fam, 4, n), expected, which);
    if (w) return w;
  }
  return std::nullopt;
}

struct CongSpec {
  SptVariant variant;
  long res, mod;        // progression: arguments == res (mod mod)
  long div;             // divisibility modulus
  std::optional<SBFamily> classes;  // proven equal-class statement, if any
};

std::optional<CheckWitness> congruence_check(const CongSpec& c, long N) {
  const QSeries& gf = cached_spt_gf(c.variant, int(N));
  for (long a = c.res == 0 ? c.mod : c.res; a <= N; a += c.mod) {
    Int v = gf.int_coeff(int(a));
    if (v % c.div != 0)
      return witness_fail(a, 0, "0 (mod " + std::to_string(c.div) + ")", v.get_str());
  }
  if (c.classes) {
    int cap = int(std::min<long>(N, 60));
    const ZLaurentSeries& tab = cached_sbar(*c.classes, cap);
    for (long a = c.res == 0 ? c.mod : c.res; a <= cap; a += c.mod) {
      Int first = tab.class_sum(0, int(c.div), int(a));
      for (long k = 1; k < c.div; ++k) {
        Int v = tab.class_sum(k, int(c.div), int(a));
        if (v != first) return witness_fail(a, k, first.get_str(), v.get_str());
      }
    }
  }
  return std::nullopt;
}

std::optional<CheckWitness> parity_check(SptVariant v, std::function<bool(long)> odd_iff, long N) {
  const QSeries& gf = cached_spt_gf(v, int(N));
  for (long a = 1; a <= N; ++a) {
    bool odd = gf.int_coeff(int(a)) % 2 != 0;
    if (odd != odd_iff(a))
      return witness_fail(a, 0, odd_iff(a) ? "odd" : "even", odd ? "odd" : "even");
  }
  return std::nullopt;
}

std::optional<CheckWitness> equal_classes_exhaustive(long res, long mod, long div,
                                                    Parity smallest, long N) {
  for (long a = res == 0 ? mod : res; a <= N; a += mod) {
    std::vector<Int> sizes(size_t(div), Int(0));
    for (const MarkedOverpartition& m : enumerate_marked(int(a), smallest)) {
      long r = ((sptcrank(m) % div) + div) % div;
      sizes[size_t(r)] += 1;
    }
    for (long k = 1; k < div; ++k)
      if (sizes[size_t(k)] != sizes[0])
        return witness_fail(a, k, sizes[0].get_str(), sizes[size_t(k)].get_str());
  }
  return std::nullopt;
}

std::optional<CheckWitness> mod4_classes(SBFamily fam, std::function<bool(long)> exceptional,
                                         long N) {
  const ZLaurentSeries& tab = cached_sbar(fam, int(N));
  for (long n = 1; n <= N; ++n) {
    Int c0 = tab.class_sum(0, 4, int(n)), c1 = tab.class_sum(1, 4, int(n));
    Int c2 = tab.class_sum(2, 4, int(n)), c3 = tab.class_sum(3, 4, int(n));
    if (c1 != c3) return witness_fail(n, 1, c3.get_str(), c1.get_str());
    Int diff = c0 - c2;
    if (diff < 0) diff = -diff;
    Int want = exceptional(n) ? 1 : 0;
    if (diff != want) return witness_fail(n, 0, want.get_str(), diff.get_str());
  }
  return std::nullopt;
}

std::optional<CheckWitness> moments_check(long N) {
  int n = int(N);
  const ZLaurentSeries& mb = cached_stat(StatFamily::Mbar, n);
  const ZLaurentSeries& nb = cached_stat(StatFamily::Nbar, n);
  const ZLaurentSeries& sb = cached_sbar(SBFamily::SB, n);
  QSeries gf = nsb_zero_gf(n);
  for (int a = 1; a <= n; ++a) {
    Int lhs = mb.first_moment_positive(a) - nb.first_moment_positive(a);
    Int rhs = sb.coeff(0, a);
    if (lhs != rhs) return witness_fail(a, 0, rhs.get_str(), lhs.get_str());
    if (lhs < 0) return witness_fail(a, 1, ">= 0", lhs.get_str());
    if (gf.int_coeff(a) != rhs) return witness_fail(a, 2, rhs.get_str(), gf.int_coeff(a).get_str());
  }
  return std::nullopt;
}

std::optional<CheckWitness> nonneg_check(SBFamily fam, long N) {
  const ZLaurentSeries& tab = cached_sbar(fam, int(N));
  for (int n = 0; n <= int(N); ++n)
    for (long m = -n; m <= n; ++m)
      if (tab.coeff(m, n) < 0) return witness_fail(n, m, ">= 0", tab.coeff(m, n).get_str());
  return std::nullopt;
}

std::optional<CheckWitness> s2b_counterexample(long N) {
  int n = std::max(10, int(N));
  // n=2 summand of S2-bar: q^4 (q^6;q^2)(-q^5;q^2) / ((z q^4;q^2)(z^{-1} q^4;q^2))
  ZLaurentSeries term = ZLaurentSeries::one(n);
  term.mul_int_series(poch_inf(1, 1, 6, 2, n) * poch_inf(1, -1, 5, 2, n));
  term.mul_qpow(4);
  for (int e = 4; e <= n; e += 2) {
    term.div_one_minus_zq(1, e);
    term.div_one_minus_zq(-1, e);
  }
  ZLaurentSeries expected(n);
  expected.add_coeff(-1, 10, Int(1));
  expected.add_coeff(0, 10, Int(-1));
  expected.add_coeff(1, 10, Int(1));
  for (long m = -11; m <= 11; ++m) {
    Int x = term.coeff(m, 10), y = expected.coeff(m, 10);
    if (x != y) return witness_fail(10, m, y.get_str(), x.get_str());
  }
  return std::nullopt;
}

std::optional<CheckWitness> watson_forms(bool m2, long N) {
  for (int t : {3, 5}) {
    QSeries eu = m2 ? n2_eulerian_at_root(t, int(N)) : nbar_eulerian_at_root(t, int(N));
    QSeries la = m2 ? n2_lambert_at_root(t, int(N)) : nbar_lambert_at_root(t, int(N));
    auto w = cmp_qseries(eu, la, t);
    if (w) return w;
  }
  return std::nullopt;
}

std::optional<CheckWitness> phi_entries_check(long N) {
  int n = int(N);
  // 1: phi(q) - phi(-q) = 4 sum q^{(2k-1)^2}
  {
    QSeries lhs = theta_phi(1, n) - theta_phi(-1, n);
    QSeries rhs(1, n);
    for (long k = 1; (2 * k - 1) * (2 * k - 1) <= n; ++k)
      rhs.add_coeff(int((2 * k - 1) * (2 * k - 1)), CycInt(1, 4));
    if (auto w = cmp_qseries(lhs, rhs, 1)) return w;
  }
  // 2: phi(q) phi(-q) = phi(-q^2)^2
  {
    QSeries lhs = theta_phi(1, n) * theta_phi(-1, n);
    QSeries p2(1, n);
    p2.add_coeff(0, CycInt(1, 1));
    for (long k = 1; 2 * k * k <= n; ++k)
      p2.add_coeff(int(2 * k * k), CycInt(1, k % 2 ? -2 : 2));
    if (auto w = cmp_qseries(lhs, p2 * p2, 2)) return w;
  }
  // 3: phi(-q^2)^2 = 1 + 4 sum (-1)^k q^{k^2+k} / (1+q^{2k})
  {
    QSeries p2(1, n);
    p2.add_coeff(0, CycInt(1, 1));
    for (long k = 1; 2 * k * k <= n; ++k)
      p2.add_coeff(int(2 * k * k), CycInt(1, k % 2 ? -2 : 2));
    QSeries rhs = QSeries::one(1, n);
    for (long k = 1; k * k + k <= n; ++k) {
      QSeries term(1, n);
      term.add_coeff(int(k * k + k), CycInt(1, k % 2 ? -4 : 4));
      term.div_one_minus(CycInt(1, -1), int(2 * k));
      rhs += term;
    }
    if (auto w = cmp_qseries(p2 * p2, rhs, 3)) return w;
  }
  // 4: phi(-q)^2 = 1 + 4 sum (-1)^k q^k / (1+q^{2k})
  {
    QSeries pm = theta_phi(-1, n);
    QSeries rhs = QSeries::one(1, n);
    for (long k = 1; k <= n; ++k) {
      QSeries term(1, n);
      term.add_coeff(int(k), CycInt(1, k % 2 ? -4 : 4));
      term.div_one_minus(CycInt(1, -1), int(2 * k));
      rhs += term;
    }
    if (auto w = cmp_qseries(pm * pm, rhs, 4)) return w;
  }
  // 5: phi(-q) = (q;q)/(-q;q)  checked as phi(-q)*(-q;q) = (q;q)
  {
    QSeries lhs = theta_phi(-1, n) * poch_inf(1, -1, 1, 1, n);
    if (auto w = cmp_qseries(lhs, poch_inf(1, 1, 1, 1, n), 5)) return w;
  }
  // 6: phi(q) = phi(q^9) + 2q f(q^3, q^15)
  {
    QSeries rhs(1, n);
    rhs.add_coeff(0, CycInt(1, 1));
    for (long k = 1; 9 * k * k <= n; ++k) rhs.add_coeff(int(9 * k * k), CycInt(1, 2));
    QSeries f = theta_f(3, 15, n);
    f.mul_qpow(1);
    f.mul_int(Int(2));
    rhs += f;
    if (auto w = cmp_qseries(theta_phi(1, n), rhs, 6)) return w;
  }
  return std::nullopt;
}

std::optional<CheckWitness> lambert_prop3_check(long N) {
  int n = int(N);
  // 6 * sum_{k>=1} (-1)^k q^k (1-q^k)/(1-q^{3k}) = -(1 - (q)^6 (q^6)/((q^2)^3 (q^3)^2))
  QSeries lhs(1, n);
  for (int k = 1; k <= n; ++k) {
    QSeries term(1, n);
    term.add_coeff(k, CycInt(1, k % 2 ? -6 : 6));
    if (2 * k <= n) term.add_coeff(2 * k, CycInt(1, k % 2 ? 6 : -6));
    term.div_one_minus(CycInt(1, 1), 3 * k);
    lhs += term;
  }
  QSeries prod = poch_inf(1, 1, 1, 1, n);
  prod = prod * prod * prod;
  prod = prod * prod * poch_inf(1, 1, 6, 6, n);
  prod = prod * poch_inf_inv(1, 1, 2, 2, n) * poch_inf_inv(1, 1, 2, 2, n) *
         poch_inf_inv(1, 1, 2, 2, n) * poch_inf_inv(1, 1, 3, 3, n) * poch_inf_inv(1, 1, 3, 3, n);
  QSeries rhs = prod - QSeries::one(1, n);
  if (auto w = cmp_qseries(lhs, rhs, 1)) return w;
  // the quotient is phi(-q)^3 / phi(-q^3): prod * phi(-q^3) = phi(-q)^3
  QSeries p3(1, n);
  p3.add_coeff(0, CycInt(1, 1));
  for (long k = 1; 3 * k * k <= n; ++k) p3.add_coeff(int(3 * k * k), CycInt(1, k % 2 ? -2 : 2));
  QSeries pm = theta_phi(-1, n);
  if (auto w = cmp_qseries(prod * p3, pm * pm * pm, 2)) return w;
  // lambert_sum at zeta_3 with a(n)=g(n)=n reproduces 3*sum(...) = lhs/2
  LambertSpec spec;
  spec.a = [](long k) { return k; };
  spec.g = [](long k) { return k; };
  spec.sign = [](long k) { return k % 2 ? -1 : 1; };
  QSeries ls = lambert_sum(3, 1, spec, n);
  if (auto w = cmp_qseries(ls, lhs.divexact_int(Int(2)).promote(3), 3)) return w;
  return std::nullopt;
}

std::optional<CheckWitness> sptcrank_pairs_check(long N) {
  struct Fam {
    PairFamily pf;
    SBFamily sf;
  } fams[] = {{PairFamily::SPB, SBFamily::SB},
              {PairFamily::SPB1, SBFamily::SB1},
              {PairFamily::SPB2, SBFamily::SB2}};
  for (auto [pf, sf] : fams) {
    const ZLaurentSeries& tab = cached_sbar(sf, int(N));
    for (int n = 1; n <= int(N); ++n) {
      std::map<int, Int> dist;
      for (const PartitionPair& p : enumerate_sp_pairs(n, pf)) dist[crank_bar(p)] += 1;
      for (long m = -n; m <= n; ++m) {
        Int want = tab.coeff(m, n);
        Int got = dist.count(int(m)) ? dist[int(m)] : Int(0);
        if (want != got) return witness_fail(n, m, want.get_str(), got.get_str());
      }
    }
  }
  return std::nullopt;
}

std::optional<CheckWitness> vector_models_check(long N) {
  for (SBFamily f : {SBFamily::SB, SBFamily::SB1, SBFamily::SB2, SBFamily::S2B}) {
    TwoVarTable en = nsb_table_enum(f, int(N));
    TwoVarTable se = nsb_table_series(f, int(N));
    for (int n = 1; n <= int(N); ++n)
      for (long m = -n; m <= n; ++m)
        if (en.entry(m, n) != se.entry(m, n))
          return witness_fail(n, m, se.entry(m, n).get_str(), en.entry(m, n).get_str());
  }
  return std::nullopt;
}

std::optional<CheckWitness> phi_bijection_check(long N) {
  for (int n = 1; n <= int(N); ++n) {
    std::vector<MarkedOverpartition> marked = enumerate_marked(n);
    std::vector<PartitionPair> pairs = enumerate_sp_pairs(n, PairFamily::SPB);
    if (Int(long(marked.size())) != Int(long(pairs.size())))
      return witness_fail(n, 0, std::to_string(pairs.size()), std::to_string(marked.size()));
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> seen;
    for (const MarkedOverpartition& m : marked) {
      PartitionPair img = phi_map(m);
      if (!in_sp_family(img, PairFamily::SPB)) return witness_fail(n, 1, "in SP-bar", img.str());
      if (img.l1.weight() + img.l2.weight() != n)
        return witness_fail(n, 2, std::to_string(n),
                            std::to_string(img.l1.weight() + img.l2.weight()));
      if (k_bar(m) != k_vec(img))
        return witness_fail(n, 3, std::to_string(k_vec(img)), std::to_string(k_bar(m)));
      if (sptcrank(m) != crank_bar(img))
        return witness_fail(n, 4, std::to_string(crank_bar(img)), std::to_string(sptcrank(m)));
      if (!(phi_inv(img) == m)) return witness_fail(n, 5, "phi_inv(phi(x)) = x", img.str());
      if (++seen[{img.l1.parts, img.l2.parts}] > 1)
        return witness_fail(n, 6, "injective", img.str());
    }
    for (const PartitionPair& p : pairs)
      if (!(phi_map(phi_inv(p)) == p)) return witness_fail(n, 7, "phi(phi_inv(y)) = y", p.str());
  }
  return std::nullopt;
}

std::optional<CheckWitness> psi_bijection_check(long ellmax) {
  for (int n = 1; n <= 6; ++n)
    for (int ell = 0; ell <= int(ellmax); ++ell) {
      PartitionConstraints dn;
      dn.min_part = n + 1;
      dn.distinct = true;
      std::map<std::vector<int>, int> images;
      int domain = 0;
      for (const Partition& pi : enumerate_partitions(ell, dn)) {
        ++domain;
        Partition lam = psi(n, pi);
        if (!in_psi_image(n, lam)) return witness_fail(ell, n, "in P_n", lam.str());
        if (lam.weight() != ell)
          return witness_fail(ell, n, std::to_string(ell), std::to_string(lam.weight()));
        if (!(psi_inv(n, lam) == pi)) return witness_fail(ell, n, pi.str(), psi_inv(n, lam).str());
        int small = 0;
        for (int part : lam.parts) small += part <= 2 * n - 1;
        if (small != int(k_partition(pi, n)))
          return witness_fail(ell, n, std::to_string(k_partition(pi, n)), std::to_string(small));
        if (++images[lam.parts] > 1) return witness_fail(ell, n, "injective", lam.str());
      }
      // surjectivity: every element of P_n of size ell is hit
      PartitionConstraints pn;
      pn.min_part = n + 1;
      int target = 0;
      for (const Partition& lam : enumerate_partitions(ell, pn))
        if (in_psi_image(n, lam)) ++target;
      if (target != domain)
        return witness_fail(ell, n, std::to_string(target), std::to_string(domain));
    }
  return std::nullopt;
}

std::optional<CheckWitness> spt_genfun_check(long N) {
  for (SptVariant v : {SptVariant::spt, SptVariant::sptbar, SptVariant::sptbar1,
                       SptVariant::sptbar2, SptVariant::m2spt}) {
    const QSeries& gf = cached_spt_gf(v, int(N));
    for (int n = 1; n <= int(N); ++n) {
      Int want = gf.int_coeff(n), got = spt_count(n, v);
      if (want != got) return witness_fail(n, int(v), want.get_str(), got.get_str());
    }
  }
  for (int n = 1; n <= int(N); ++n) {
    Int lhs = spt_count(n, SptVariant::sptbar);
    Int rhs = spt_count(n, SptVariant::sptbar1) + spt_count(n, SptVariant::sptbar2);
    if (lhs != rhs) return witness_fail(n, 5, lhs.get_str(), rhs.get_str());
  }
  return std::nullopt;
}

// ----- catalog ---------------------------------------------------------

struct CheckDef {
  long default_order;
  std::function<std::optional<CheckWitness>(long)> fn;
};

const std::vector<std::pair<std::string, CheckDef>>& catalog() {
  static const std::vector<std::pair<std::string, CheckDef>> defs = [] {
    std::vector<std::pair<std::string, CheckDef>> v;
    for (int i = 1; i <= 4; ++i)
      v.push_back({"T2_" + std::to_string(i),
                   {60, [i](long N) { return rank_crank_stencil(i, N); }}});
    for (int th = 5; th <= 14; ++th)
      v.push_back({"T2_" + std::to_string(th),
                   {40, [th](long N) { return dissection_check(th, N); }}});
    v.push_back({"T2_17", {200, zi_dissection}});

    auto cong = [&](const std::string& id, CongSpec spec, long order) {
      v.push_back({id, {order, [spec](long N) { return congruence_check(spec, N); }}});
    };
    cong("spt5", {SptVariant::spt, 4, 5, 5, std::nullopt}, 150);
    cong("spt7", {SptVariant::spt, 5, 7, 7, std::nullopt}, 150);
    cong("spt13", {SptVariant::spt, 6, 13, 13, std::nullopt}, 150);
    cong("sb3", {SptVariant::sptbar, 0, 3, 3, SBFamily::SB}, 300);
    cong("sb1_3", {SptVariant::sptbar1, 0, 3, 3, SBFamily::SB1}, 300);
    cong("sb1_5", {SptVariant::sptbar1, 0, 5, 5, SBFamily::SB1}, 300);
    cong("sb2_3", {SptVariant::sptbar2, 0, 3, 3, SBFamily::SB2}, 300);
    cong("sb2_3p1", {SptVariant::sptbar2, 1, 3, 3, SBFamily::SB2}, 300);
    cong("sb2_5p3", {SptVariant::sptbar2, 3, 5, 5, SBFamily::SB2}, 300);
    cong("m2_3p1", {SptVariant::m2spt, 1, 3, 3, SBFamily::S2B}, 300);
    cong("m2_5p1", {SptVariant::m2spt, 1, 5, 5, SBFamily::S2B}, 300);
    cong("m2_5p3", {SptVariant::m2spt, 3, 5, 5, SBFamily::S2B}, 300);

    v.push_back({"parity_sb",
                 {400, [](long N) {
                    return parity_check(
                        SptVariant::sptbar,
                        [](long n) { return is_square(n) || is_twice_square(n); }, N);
                  }}});
    v.push_back({"parity_sb1",
                 {400, [](long N) {
                    return parity_check(SptVariant::sptbar1, is_odd_square, N);
                  }}});
    v.push_back({"parity_sb2",
                 {400, [](long N) {
                    return parity_check(
                        SptVariant::sptbar2,
                        [](long n) { return is_even_square(n) || is_twice_square(n); }, N);
                  }}});

    v.push_back({"mainthm_i",
                 {24, [](long N) { return equal_classes_exhaustive(0, 3, 3, Parity::any, N); }}});
    v.push_back({"mainthm_ii", {24, [](long N) {
                    auto w = equal_classes_exhaustive(0, 3, 3, Parity::even, N);
                    return w ? w : equal_classes_exhaustive(1, 3, 3, Parity::even, N);
                  }}});
    v.push_back({"mainthm_iii",
                 {24, [](long N) { return equal_classes_exhaustive(3, 5, 5, Parity::even, N); }}});
    v.push_back({"mainthm_iv",
                 {24, [](long N) { return equal_classes_exhaustive(0, 3, 3, Parity::odd, N); }}});
    v.push_back({"mainthm_v",
                 {24, [](long N) { return equal_classes_exhaustive(0, 5, 5, Parity::odd, N); }}});
    v.push_back({"mainthm_vi", {60, [](long N) {
                    return mod4_classes(
                        SBFamily::SB, [](long n) { return is_square(n) || is_twice_square(n); }, N);
                  }}});
    v.push_back({"mainthm_vii",
                 {60, [](long N) { return mod4_classes(SBFamily::SB1, is_odd_square, N); }}});
    v.push_back({"mainthm_viii", {60, [](long N) {
                    return mod4_classes(
                        SBFamily::SB2,
                        [](long n) { return is_even_square(n) || is_twice_square(n); }, N);
                  }}});

    v.push_back({"moments", {60, moments_check}});
    v.push_back({"nonneg_SB", {60, [](long N) { return nonneg_check(SBFamily::SB, N); }}});
    v.push_back({"nonneg_SB1", {60, [](long N) { return nonneg_check(SBFamily::SB1, N); }}});
    v.push_back({"nonneg_SB2", {60, [](long N) { return nonneg_check(SBFamily::SB2, N); }}});
    v.push_back(
        {"nonneg_S2B_conjecture", {60, [](long N) { return nonneg_check(SBFamily::S2B, N); }}});
    v.push_back({"s2b_summand_counterexample", {10, s2b_counterexample}});

    v.push_back({"watson_rank_forms", {80, [](long N) { return watson_forms(false, N); }}});
    v.push_back({"watson_m2_forms", {80, [](long N) { return watson_forms(true, N); }}});
    v.push_back({"phi_entries", {100, phi_entries_check}});
    v.push_back({"lambert_prop_3", {60, lambert_prop3_check}});

    v.push_back({"sptcrank_pairs", {25, sptcrank_pairs_check}});
    v.push_back({"vector_models_agree", {25, vector_models_check}});
    v.push_back({"phi_bijection", {25, phi_bijection_check}});
    v.push_back({"psi_bijection", {30, psi_bijection_check}});
    v.push_back({"spt_genfun", {60, spt_genfun_check}});
    return v;
  }();
  return defs;
}

const CheckDef* find_check(const std::string& id) {
  for (const auto& [name, def] : catalog())
    if (name == id) return &def;
  return nullptr;
}

}  // namespace

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& [name, def] : catalog()) ids.push_back(name);
  return ids;
}

bool known_check(const std::string& id) { return find_check(id) != nullptr; }

long check_default_order(const std::string& id) {
  const CheckDef* def = find_check(id);
  if (!def) throw std::invalid_argument("unknown check id: " + id);
  return def->default_order;
}

CheckReport run_check(const std::string& id, long order) {
  const CheckDef* def = find_check(id);
  if (!def) throw std::invalid_argument("unknown check id: " + id);
  long N = order > 0 ? order : def->default_order;
  CheckReport rep;
  rep.id = id;
  rep.order_checked = N;
  auto start = Clock::now();
  rep.witness = def->fn(N);
  rep.pass = !rep.witness.has_value();
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - start)
          .count();
  return rep;
}

}  // namespace sptq
