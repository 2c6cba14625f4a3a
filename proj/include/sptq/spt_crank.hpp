#pragma once

#include "sptq/gen_fns.hpp"
#include "sptq/partitions.hpp"

namespace sptq {

/// Weighted vector partition (pi1, pi2, pi3, pi4) of section 3.1.
struct VectorPartition {
  Partition p1, p2, p3, p4;

  int norm() const { return p1.weight() + p2.weight() + p3.weight() + p4.weight(); }
  int weight() const { return p1.num_parts() % 2 ? 1 : -1; }  // (-1)^{#(pi1)-1}
  int crank() const { return p2.num_parts() - p3.num_parts(); }
  std::string str() const;  // "[1+2, -, -, 3]"

  friend bool operator==(const VectorPartition&, const VectorPartition&) = default;
};

bool in_sb_family(const VectorPartition& v, SBFamily f);
std::vector<VectorPartition> enumerate_vector_partitions(int n, SBFamily f);
TwoVarTable nsb_table_enum(SBFamily f, int max_n);

/// SP-bar partition pair: 0 < s(l1) <= s(l2), every part of l2 that is
/// >= 2 s(l1) + 1 is odd. Families restrict the parity of s(l1).
struct PartitionPair {
  Partition l1, l2;
  std::string str() const;  // "[1+1, 1]"
  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

enum class PairFamily { SPB, SPB1, SPB2 };

bool in_sp_family(const PartitionPair& p, PairFamily f);
std::vector<PartitionPair> enumerate_sp_pairs(int n, PairFamily f);
int k_vec(const PartitionPair& p);      // parts j of l2 with s(l1) <= j <= 2s(l1)-1
int crank_bar(const PartitionPair& p);  // rejects non-members

/// Overpartition whose smallest part is not overlined, plus a mark
/// 1 <= j <= nu(pi) selecting one copy of the smallest part.
struct MarkedOverpartition {
  Overpartition pi;
  int j = 1;
  friend bool operator==(const MarkedOverpartition&, const MarkedOverpartition&) = default;
};

bool valid_marked(const MarkedOverpartition& m);
std::vector<MarkedOverpartition> enumerate_marked(int n, Parity smallest_parity = Parity::any);

long k_int(long m, long n);                          // eq. k(m,n), needs m >= n+1
long k_partition(const Partition& p2, long n);       // sum of k_int over the parts
long k_bar(const MarkedOverpartition& m);            // nu(pi1) - j + k(pi2, s(pi1))
int sptcrank(const MarkedOverpartition& m);

// Psi_n: distinct partitions with parts >= n+1  ->  partitions with parts
// >= n+1 whose parts > 2n are odd. Inverses verify their domains.
Partition psi(int n, const Partition& pi);
Partition psi_inv(int n, const Partition& lam);
bool in_psi_domain(int n, const Partition& pi);
bool in_psi_image(int n, const Partition& lam);

// Phi: marked overpartitions of n -> SP-bar pairs of n (weight-preserving,
// carries k_bar to k and sptcrank to crank_bar).
PartitionPair phi_map(const MarkedOverpartition& m);
MarkedOverpartition phi_inv(const PartitionPair& p);

}  // namespace sptq
