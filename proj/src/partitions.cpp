#include "sptq/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sptq {

int Partition::weight() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::optional<int> Partition::smallest() const {
  if (parts.empty()) return std::nullopt;
  return parts.back();
}

int Partition::mult_smallest() const {
  if (parts.empty()) return 0;
  int s = parts.back(), c = 0;
  for (auto it = parts.rbegin(); it != parts.rend() && *it == s; ++it) ++c;
  return c;
}

int Partition::count_ones() const {
  int c = 0;
  for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it) ++c;
  return c;
}

int Partition::num_odd() const {
  int c = 0;
  for (int p : parts) c += p % 2;
  return c;
}

int Partition::num_even() const {
  int c = 0;
  for (int p : parts) c += 1 - p % 2;
  return c;
}

bool Partition::has_distinct_parts() const {
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] == parts[i - 1]) return false;
  return true;
}

bool Partition::has_distinct_odd_parts() const {
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] == parts[i - 1] && parts[i] % 2 == 1) return false;
  return true;
}

std::string Partition::str() const {
  if (parts.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << "+";
    os << parts[i];
  }
  return os.str();
}

namespace {

bool constraints_hold(const Partition& p, const PartitionConstraints& cons) {
  if (!p.parts.empty() && !parity_ok(p.parts.back(), cons.smallest_parity)) return false;
  return true;
}

void gen_partitions(int remaining, int max_part, const PartitionConstraints& cons,
                    Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    if (constraints_hold(cur, cons)) out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= cons.min_part; --p) {
    if (!parity_ok(p, cons.parts_parity)) continue;
    bool repeat = !cur.parts.empty() && cur.parts.back() == p;
    if (repeat && cons.distinct) continue;
    if (repeat && cons.distinct_odd && p % 2 == 1) continue;
    cur.parts.push_back(p);
    gen_partitions(remaining - p, p, cons, cur, out);
    cur.parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, const PartitionConstraints& cons) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cons, cur, out);
  return out;
}

bool Overpartition::is_overlined(int size) const {
  return std::find(overlined.begin(), overlined.end(), size) != overlined.end();
}

Partition Overpartition::non_overlined_sub() const {
  Partition r;
  std::vector<int> pending = overlined;  // one copy of each size to drop
  for (int p : parts.parts) {
    auto it = std::find(pending.begin(), pending.end(), p);
    if (it != pending.end())
      pending.erase(it);
    else
      r.parts.push_back(p);
  }
  return r;
}

Partition Overpartition::overlined_sub() const {
  Partition r;
  r.parts = overlined;
  return r;
}

bool Overpartition::smallest_size_overlined() const {
  auto s = parts.smallest();
  return s && is_overlined(*s);
}

std::string Overpartition::str() const {
  if (parts.parts.empty()) return "-";
  std::ostringstream os;
  std::vector<int> pending = overlined;
  for (size_t i = 0; i < parts.parts.size(); ++i) {
    if (i) os << "+";
    os << parts.parts[i];
    auto it = std::find(pending.begin(), pending.end(), parts.parts[i]);
    if (it != pending.end()) {
      os << "~";
      pending.erase(it);
    }
  }
  return os.str();
}

std::vector<Overpartition> enumerate_overpartitions(int n, bool smallest_not_overlined,
                                                    Parity smallest_parity) {
  PartitionConstraints cons;
  cons.smallest_parity = smallest_parity;
  std::vector<Overpartition> out;
  for (const Partition& p : enumerate_partitions(n, cons)) {
    std::vector<int> sizes;  // distinct sizes, descending
    for (int v : p.parts)
      if (sizes.empty() || sizes.back() != v) sizes.push_back(v);
    int k = int(sizes.size());
    int smallest = sizes.empty() ? 0 : sizes.back();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      Overpartition o;
      o.parts = p;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) o.overlined.push_back(sizes[size_t(i)]);
      if (smallest_not_overlined && !o.overlined.empty() && o.overlined.back() == smallest)
        continue;
      out.push_back(std::move(o));
    }
  }
  return out;
}

int rank_stat(const Partition& p) { return p.largest() - p.num_parts(); }

int crank_stat(const Partition& p) {
  int ones = p.count_ones();
  if (ones == 0) return p.largest();
  int larger = 0;
  for (int v : p.parts) larger += v > ones;
  return larger - ones;
}

int dyson_rank(const Overpartition& o) { return o.parts.largest() - o.parts.num_parts(); }

int m2_rank(const Partition& p) {
  if (!p.has_distinct_odd_parts())
    throw std::invalid_argument("m2_rank: repeated odd parts");
  return (p.largest() + 1) / 2 - p.num_parts();
}

int residual_crank(const Overpartition& o) { return crank_stat(o.non_overlined_sub()); }

int m2_residual_crank(const Partition& p) {
  if (!p.has_distinct_odd_parts())
    throw std::invalid_argument("m2_residual_crank: repeated odd parts");
  Partition halved;
  for (int v : p.parts)
    if (v % 2 == 0) halved.parts.push_back(v / 2);
  return crank_stat(halved);
}

SptVariant spt_variant_from_name(const std::string& name) {
  if (name == "spt") return SptVariant::spt;
  if (name == "sptbar") return SptVariant::sptbar;
  if (name == "sptbar1") return SptVariant::sptbar1;
  if (name == "sptbar2") return SptVariant::sptbar2;
  if (name == "m2spt") return SptVariant::m2spt;
  throw std::invalid_argument("unknown spt variant: " + name);
}

StatFamily stat_family_from_name(const std::string& name) {
  if (name == "Nbar") return StatFamily::Nbar;
  if (name == "Mbar") return StatFamily::Mbar;
  if (name == "N2") return StatFamily::N2;
  if (name == "M2") return StatFamily::M2;
  if (name == "N") return StatFamily::N;
  if (name == "M") return StatFamily::M;
  throw std::invalid_argument("unknown statistic family: " + name);
}

namespace {

// tails[j][m] = number of (over)partitions of m with every part size >= j,
// for 1 <= j <= n+1 (tails[n+1] is the empty-only base row).
enum class TailKind { partitions, overpartitions, distinct_odd };

std::vector<std::vector<Int>> tail_counts(int n, TailKind kind) {
  std::vector<std::vector<Int>> tails(size_t(n) + 2, std::vector<Int>(size_t(n) + 1));
  tails[size_t(n) + 1][0] = 1;
  for (int j = n; j >= 1; --j) {
    auto& cur = tails[size_t(j)];
    const auto& up = tails[size_t(j) + 1];
    for (int m = 0; m <= n; ++m) {
      cur[size_t(m)] = up[size_t(m)];
      if (kind == TailKind::distinct_odd && j % 2 == 1) {
        if (m >= j) cur[size_t(m)] += up[size_t(m - j)];
      } else {
        // part j with multiplicity mu >= 1; overpartitions may overline one copy
        for (int used = j; used <= m; used += j)
          cur[size_t(m)] += kind == TailKind::overpartitions ? 2 * up[size_t(m - used)]
                                                             : up[size_t(m - used)];
      }
    }
  }
  return tails;
}

}  // namespace

Int spt_count(int n, SptVariant v) {
  if (n < 1) throw std::invalid_argument("spt_count: n must be >= 1");
  TailKind kind = v == SptVariant::spt        ? TailKind::partitions
                  : v == SptVariant::m2spt    ? TailKind::distinct_odd
                                              : TailKind::overpartitions;
  auto tails = tail_counts(n, kind);
  Parity sp = v == SptVariant::sptbar1 ? Parity::odd
              : v == SptVariant::sptbar2 || v == SptVariant::m2spt ? Parity::even
                                                                   : Parity::any;
  Int total = 0;
  for (int s = 1; s <= n; ++s) {
    if (!parity_ok(s, sp)) continue;
    for (int mu = 1; mu * s <= n; ++mu) total += Int(mu) * tails[size_t(s) + 1][size_t(n - mu * s)];
  }
  return total;
}

Int spt_count_enum(int n, SptVariant v) {
  if (n < 1) throw std::invalid_argument("spt_count_enum: n must be >= 1");
  Int total = 0;
  if (v == SptVariant::spt) {
    for (const Partition& p : enumerate_partitions(n)) total += p.mult_smallest();
  } else if (v == SptVariant::m2spt) {
    PartitionConstraints cons;
    cons.distinct_odd = true;
    cons.smallest_parity = Parity::even;
    for (const Partition& p : enumerate_partitions(n, cons)) total += p.mult_smallest();
  } else {
    Parity sp = v == SptVariant::sptbar1 ? Parity::odd
                : v == SptVariant::sptbar2 ? Parity::even
                                           : Parity::any;
    for (const Overpartition& o : enumerate_overpartitions(n, true, sp))
      total += o.parts.mult_smallest();
  }
  return total;
}

TwoVarTable stat_table_enum(StatFamily f, int max_n) {
  const char* names[] = {"Nbar", "Mbar", "N2", "M2", "N", "M"};
  TwoVarTable tab(names[int(f)], max_n);
  for (int n = 0; n <= max_n; ++n) {
    switch (f) {
      case StatFamily::Nbar:
      case StatFamily::Mbar:
        for (const Overpartition& o : enumerate_overpartitions(n))
          tab.add(f == StatFamily::Nbar ? dyson_rank(o) : residual_crank(o), n, Int(1));
        break;
      case StatFamily::N2:
      case StatFamily::M2: {
        PartitionConstraints cons;
        cons.distinct_odd = true;
        for (const Partition& p : enumerate_partitions(n, cons))
          tab.add(f == StatFamily::N2 ? m2_rank(p) : m2_residual_crank(p), n, Int(1));
        break;
      }
      case StatFamily::N:
      case StatFamily::M:
        for (const Partition& p : enumerate_partitions(n))
          tab.add(f == StatFamily::N ? rank_stat(p) : crank_stat(p), n, Int(1));
        break;
    }
  }
  return tab;
}

Int count_partitions(int n) {
  return poch_inf_inv(1, 1, 1, 1, n).int_coeff(n);
}

Int count_overpartitions(int n) {
  return (poch_inf(1, -1, 1, 1, n) * poch_inf_inv(1, 1, 1, 1, n)).int_coeff(n);
}

Int count_distinct_partitions(int n) {
  return poch_inf(1, -1, 1, 1, n).int_coeff(n);
}

Int count_distinct_odd_partitions(int n) {
  return poch_inf(1, -1, 1, 2, n).int_coeff(n);
}

}  // namespace sptq
