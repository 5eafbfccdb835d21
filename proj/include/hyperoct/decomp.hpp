#pragma once

#include <string>
#include <vector>

#include "hyperoct/bigint.hpp"
#include "hyperoct/partition.hpp"
#include "hyperoct/repdata.hpp"

namespace hyperoct {

// One block of a dominance factor partition: a maximal element and the
// members it absorbs (head included, in input order).
struct FactorBlock {
  Partition head;
  std::vector<Partition> members;
};

struct FactorPartition {
  std::vector<FactorBlock> blocks;
};

struct FactorSearch {
  std::vector<FactorPartition> candidates;
  bool unique = false;
  BigInt count;  // number of admissible set partitions
};

// All set partitions of E in which each block holds exactly one maximal
// element (its head) and every member is dominated by its head.  Every
// non-maximal element must be covered by some maximal element; a gap is an
// internal error.  Candidates are enumerated deterministically (first
// candidate = every element assigned to the earliest dominating head) and
// capped; `unique` reports whether the constraints pinned the partition.
FactorSearch factor_partition(const std::vector<Partition>& e_set, long long cap = 10000);

struct DecompColumn {
  Bipartition label;
  std::vector<Bipartition> rows;
};

struct ColumnsResult {
  BlockLabel block;
  int w_b = 0, w_c = 0;
  std::vector<Partition> e_b, e_c;  // row label factors
  std::vector<DecompColumn> columns;
  bool unique = false;
};

// The 0/1 column patterns for the block labelled ((gamma, w_b), (delta, w_c)):
// columns are labelled by pairs of maximal elements, rows by the product of
// the two factor blocks.  Refuses (hypothesis error) when either side fails
// hypothesis_check.  Column heads are checked p-regular.
ColumnsResult decomposition_columns(const Partition& gamma, const Partition& delta, int b, int c,
                                    int p, int w_cap = 30);

struct NormalizerBlockLabel {
  int vt = 0, wt = 0;  // a split of r
};

std::vector<NormalizerBlockLabel> normalizer_block_labels(int r);

// b(vt,wt) tensored against the block ((gamma, v), (delta, w)) lands in the
// block with both weights raised accordingly.
BlockLabel brauer_correspondent(const NormalizerBlockLabel& nb, const BlockLabel& tail);

struct ProjectivityReport {
  BlockLabel block;
  int n = 0;  // degree carrying the block
  int a = 0;  // (n - b - c) / 2
  ColumnsResult columns;
  BigInt row_count;
};

ProjectivityReport projectivity_report(const Partition& gamma, const Partition& delta, int b,
                                       int c, int p, int w_cap = 30);

}  // namespace hyperoct
