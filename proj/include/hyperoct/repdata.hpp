#pragma once

#include <string>
#include <vector>

#include "hyperoct/bigint.hpp"
#include "hyperoct/partition.hpp"

namespace hyperoct {

BigInt hook_product(const Partition& p);
BigInt syt_count(const Partition& p);  // |p|! / hook_product(p)

// Dimension of the irreducible labelled by a bipartition (lambda, mu) of n:
// C(n, |lambda|) * syt_count(lambda) * syt_count(mu).
BigInt specht_dim(const Bipartition& label);

// Row-reading serialisations of all standard fillings: entries 1..n split
// between the two shapes, each side increasing along rows and down columns.
// "1,2;3|4" reads: left tableau rows (1,2),(3), right tableau row (4).
// Returned sorted lexicographically.
std::vector<std::string> enumerate_standard_tableaux(const Bipartition& shape);

struct BlockLabel {
  Partition gamma;
  int v = 0;
  Partition delta;
  int w = 0;
  bool operator==(const BlockLabel&) const = default;
};

BlockLabel block_label(const Bipartition& label, int mod);

// Bipartitions with both components p-regular, in bipartitions_of order.
std::vector<Bipartition> simple_labels(int n, int mod);

// Bipartitions (lambda, mu) of 2a+b+c with exactly b odd parts in lambda and
// exactly c in mu.
std::vector<Bipartition> model_constituents(int a, int b, int c);

// 2^n n! / (4^a a! 2^{b+c} (b+c)!) * C(b+c, b), with n = 2a+b+c.
BigInt model_dim(int a, int b, int c);

}  // namespace hyperoct
