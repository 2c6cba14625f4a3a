#include "sptq/spt_crank.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sptq {

std::string VectorPartition::str() const {
  std::ostringstream os;
  os << "[" << p1.str() << ", " << p2.str() << ", " << p3.str() << ", " << p4.str() << "]";
  return os.str();
}

namespace {

bool smallest_at_least(const Partition& p, int bound) {
  auto s = p.smallest();
  return !s || *s >= bound;
}

bool all_even(const Partition& p) { return p.num_odd() == 0; }
bool all_odd(const Partition& p) { return p.num_even() == 0; }

}  // namespace

bool in_sb_family(const VectorPartition& v, SBFamily f) {
  if (!v.p1.has_distinct_parts() || !v.p4.has_distinct_parts()) return false;
  auto s1 = v.p1.smallest();
  if (!s1) return false;  // 1 <= s(pi1) < infinity
  if (!smallest_at_least(v.p2, *s1) || !smallest_at_least(v.p3, *s1)) return false;
  if (!smallest_at_least(v.p4, *s1 + 1)) return false;
  switch (f) {
    case SBFamily::SB:
      return true;
    case SBFamily::SB1:
      return *s1 % 2 == 1;
    case SBFamily::SB2:
      return *s1 % 2 == 0;
    case SBFamily::S2B:
      return all_even(v.p1) && all_even(v.p2) && all_even(v.p3) && all_odd(v.p4);
  }
  return false;
}

std::vector<VectorPartition> enumerate_vector_partitions(int n, SBFamily f) {
  if (n < 1) throw std::invalid_argument("enumerate_vector_partitions: n must be >= 1");
  std::vector<VectorPartition> out;
  std::map<std::tuple<int, int, int, int>, std::vector<Partition>> cache;
  // which: 1 = distinct (pi1-shaped), 2 = plain, 3 = distinct for pi4
  auto lists = [&](int w, int min_part, int which) -> const std::vector<Partition>& {
    bool s2b = f == SBFamily::S2B;
    auto key = std::make_tuple(w, min_part, which, 0);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    PartitionConstraints cons;
    cons.min_part = min_part;
    if (which != 2) cons.distinct = true;
    if (s2b) cons.parts_parity = which == 3 ? Parity::odd : Parity::even;
    return cache.emplace(key, enumerate_partitions(w, cons)).first->second;
  };
  for (int w1 = 1; w1 <= n; ++w1) {
    for (const Partition& p1 : lists(w1, 1, 1)) {
      int s = *p1.smallest();
      if (f == SBFamily::SB1 && s % 2 == 0) continue;
      if (f == SBFamily::SB2 && s % 2 == 1) continue;
      for (int w2 = 0; w1 + w2 <= n; ++w2)
        for (const Partition& p2 : lists(w2, s, 2))
          for (int w3 = 0; w1 + w2 + w3 <= n; ++w3)
            for (const Partition& p3 : lists(w3, s, 2))
              for (const Partition& p4 : lists(n - w1 - w2 - w3, s + 1, 3))
                out.push_back({p1, p2, p3, p4});
    }
  }
  return out;
}

TwoVarTable nsb_table_enum(SBFamily f, int max_n) {
  const char* names[] = {"NSB", "NSB1", "NSB2", "NS2B"};
  TwoVarTable tab(names[int(f)], max_n);
  for (int n = 1; n <= max_n; ++n)
    for (const VectorPartition& v : enumerate_vector_partitions(n, f))
      tab.add(v.crank(), n, Int(v.weight()));
  return tab;
}

std::string PartitionPair::str() const {
  std::ostringstream os;
  os << "[" << l1.str() << ", " << l2.str() << "]";
  return os.str();
}

bool in_sp_family(const PartitionPair& p, PairFamily f) {
  auto s1 = p.l1.smallest();
  if (!s1) return false;
  if (!smallest_at_least(p.l2, *s1)) return false;
  for (int part : p.l2.parts)
    if (part >= 2 * *s1 + 1 && part % 2 == 0) return false;
  if (f == PairFamily::SPB1 && *s1 % 2 == 0) return false;
  if (f == PairFamily::SPB2 && *s1 % 2 == 1) return false;
  return true;
}

std::vector<PartitionPair> enumerate_sp_pairs(int n, PairFamily f) {
  if (n < 1) throw std::invalid_argument("enumerate_sp_pairs: n must be >= 1");
  std::vector<PartitionPair> out;
  for (int w1 = 1; w1 <= n; ++w1)
    for (const Partition& l1 : enumerate_partitions(w1)) {
      int s = *l1.smallest();
      if (f == PairFamily::SPB1 && s % 2 == 0) continue;
      if (f == PairFamily::SPB2 && s % 2 == 1) continue;
      PartitionConstraints cons;
      cons.min_part = s;
      for (const Partition& l2 : enumerate_partitions(n - w1, cons)) {
        PartitionPair pair{l1, l2};
        if (in_sp_family(pair, f)) out.push_back(std::move(pair));
      }
    }
  return out;
}

int k_vec(const PartitionPair& p) {
  if (!in_sp_family(p, PairFamily::SPB))
    throw std::invalid_argument("k_vec: pair not in SP-bar");
  int s = *p.l1.smallest();
  int k = 0;
  for (int part : p.l2.parts) k += part >= s && part <= 2 * s - 1;
  return k;
}

int crank_bar(const PartitionPair& p) {
  int k = k_vec(p);
  if (k == 0) return p.l1.num_parts() - 1;
  int s = *p.l1.smallest();
  int big = 0;
  for (int part : p.l1.parts) big += part >= s + k;
  return big - k;
}

bool valid_marked(const MarkedOverpartition& m) {
  auto s = m.pi.parts.smallest();
  if (!s || m.pi.smallest_size_overlined()) return false;
  return m.j >= 1 && m.j <= m.pi.parts.mult_smallest();
}

std::vector<MarkedOverpartition> enumerate_marked(int n, Parity smallest_parity) {
  std::vector<MarkedOverpartition> out;
  for (const Overpartition& o : enumerate_overpartitions(n, true, smallest_parity)) {
    int nu = o.parts.mult_smallest();
    for (int j = 1; j <= nu; ++j) out.push_back({o, j});
  }
  return out;
}

long k_int(long m, long n) {
  if (m <= n) throw std::invalid_argument("k_int: requires m >= n+1");
  long b = m, jm = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++jm;
  }
  if (b >= 2 * n) return 0;
  long j0 = 0, v = b;
  while (v < n + 1) {
    v *= 2;
    ++j0;
  }
  if (v == 2 * n) return 0;
  if (v < 2 * n) return 1L << (jm - j0);
  return 0;  // v > 2n happens only when j0 = 0, i.e. b >= n+1 and odd b > 2n handled above
}

long k_partition(const Partition& p2, long n) {
  long acc = 0;
  for (int part : p2.parts) acc += k_int(part, n);
  return acc;
}

long k_bar(const MarkedOverpartition& m) {
  if (!valid_marked(m)) throw std::invalid_argument("k_bar: invalid marked overpartition");
  Partition p1 = m.pi.non_overlined_sub();
  return p1.mult_smallest() - m.j + k_partition(m.pi.overlined_sub(), *p1.smallest());
}

int sptcrank(const MarkedOverpartition& m) {
  long kb = k_bar(m);
  Partition p1 = m.pi.non_overlined_sub();
  if (kb == 0) return p1.num_parts() - 1;
  long s = *p1.smallest();
  int big = 0;
  for (int part : p1.parts) big += part >= s + kb;
  return int(big - kb);
}

bool in_psi_domain(int n, const Partition& pi) {
  if (!pi.has_distinct_parts()) return false;
  return smallest_at_least(pi, n + 1);
}

bool in_psi_image(int n, const Partition& lam) {
  if (!smallest_at_least(lam, n + 1)) return false;
  for (int part : lam.parts)
    if (part > 2 * n && part % 2 == 0) return false;
  return true;
}

Partition psi(int n, const Partition& pi) {
  if (n < 1 || !in_psi_domain(n, pi)) throw std::invalid_argument("psi: domain violation");
  Partition out;
  for (int m : pi.parts) {
    long b = m, jm = 0;
    while (b % 2 == 0) {
      b /= 2;
      ++jm;
    }
    long j0 = 0, v = b;
    while (v < n + 1) {
      v *= 2;
      ++j0;
    }
    for (long c = 0; c < (1L << (jm - j0)); ++c) out.parts.push_back(int(v));
  }
  std::sort(out.parts.begin(), out.parts.end(), std::greater<int>());
  return out;
}

Partition psi_inv(int n, const Partition& lam) {
  if (n < 1 || !in_psi_image(n, lam)) throw std::invalid_argument("psi_inv: domain violation");
  Partition out;
  size_t i = 0;
  while (i < lam.parts.size()) {
    int p = lam.parts[i];
    size_t j = i;
    while (j < lam.parts.size() && lam.parts[j] == p) ++j;
    long mu = long(j - i);
    long b = p;
    while (b % 2 == 0) b /= 2;
    for (long bit = 0; (1L << bit) <= mu; ++bit)
      if (mu & (1L << bit)) out.parts.push_back(int(long(p) << bit));
    i = j;
  }
  std::sort(out.parts.begin(), out.parts.end(), std::greater<int>());
  return out;
}

PartitionPair phi_map(const MarkedOverpartition& m) {
  if (!valid_marked(m)) throw std::invalid_argument("phi: invalid marked overpartition");
  Partition p1 = m.pi.non_overlined_sub();
  Partition p2 = m.pi.overlined_sub();
  int s = *p1.smallest();
  int nu = p1.mult_smallest();
  PartitionPair pair;
  pair.l1 = p1;
  pair.l1.parts.erase(pair.l1.parts.end() - (nu - m.j), pair.l1.parts.end());
  pair.l2 = psi(s, p2);
  for (int c = 0; c < nu - m.j; ++c) pair.l2.parts.push_back(s);
  std::sort(pair.l2.parts.begin(), pair.l2.parts.end(), std::greater<int>());
  return pair;
}

MarkedOverpartition phi_inv(const PartitionPair& pair) {
  if (!in_sp_family(pair, PairFamily::SPB)) throw std::invalid_argument("phi_inv: not in SP-bar");
  int n = *pair.l1.smallest();
  int j = pair.l1.mult_smallest();
  Partition lam2 = pair.l2;
  int ell = 0;
  while (!lam2.parts.empty() && lam2.parts.back() == n) {
    lam2.parts.pop_back();
    ++ell;
  }
  Partition p2 = psi_inv(n, lam2);
  MarkedOverpartition m;
  m.j = j;
  m.pi.parts = pair.l1;
  for (int c = 0; c < ell; ++c) m.pi.parts.parts.push_back(n);
  for (int v : p2.parts) m.pi.parts.parts.push_back(v);
  std::sort(m.pi.parts.parts.begin(), m.pi.parts.parts.end(), std::greater<int>());
  m.pi.overlined = p2.parts;  // distinct sizes, descending
  if (!valid_marked(m)) throw std::logic_error("phi_inv: produced invalid marked overpartition");
  return m;
}

}  // namespace sptq
