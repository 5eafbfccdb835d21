#pragma once

#include <string>
#include <vector>

namespace hyperoct {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;

struct Bipartition {
  Partition first;
  Partition second;
  bool operator==(const Bipartition&) const = default;
  bool operator<(const Bipartition& o) const {
    return first != o.first ? first < o.first : second < o.second;
  }
};

bool is_partition(const Partition& p);
int size_of(const Partition& p);
int size_of(const Bipartition& p);

// dominates(a, b): every prefix sum of a is >= the matching prefix sum of b.
// Only defined for partitions of the same size.
bool dominates(const Partition& a, const Partition& b);

bool is_p_regular(const Partition& p, int mod);  // no part repeated mod or more times

Partition p_core(const Partition& p, int mod);
int p_weight(const Partition& p, int mod);

int odd_parts_count(const Partition& p);

// All partitions of n in lexicographically descending order, (n) first.
// This order refines dominance: a proper dominance relation implies the
// dominating partition appears earlier.
std::vector<Partition> partitions_of(int n);

std::vector<Bipartition> bipartitions_of(int n);

// Partitions of |core| + w*mod whose mod-core is core (so mod-weight w),
// computed by filtering partitions_of.  core must be a mod-core.
std::vector<Partition> add_hooks_enum(const Partition& core, int mod, int w);

struct ESet {
  int w = 0;
  std::vector<Partition> elements;
};

// Smallest w such that some partition with the given core and weight w has
// exactly b odd parts, together with all such partitions.  Gives up past
// w_cap with a limit error.
ESet w_and_E(const Partition& core, int mod, int b, int w_cap = 30);

// b < mod, or the minimal weights for b-mod and b differ by something other
// than one.  The column machinery refuses to run when this is false.
bool hypothesis_check(const Partition& core, int mod, int b, int w_cap = 30);

// Elements not strictly dominated by any other element; input order kept.
std::vector<Partition> maximal_elements(const std::vector<Partition>& set);

// Text forms: "5,1" and "" for the empty partition; "3,1|" pairs two of them.
std::string format_partition(const Partition& p);
Partition parse_partition(const std::string& text);
std::string format_bipartition(const Bipartition& p);
Bipartition parse_bipartition(const std::string& text);

}  // namespace hyperoct
