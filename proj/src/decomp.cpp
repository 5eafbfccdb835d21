#include "hyperoct/decomp.hpp"

#include <algorithm>
#include <functional>

#include "hyperoct/error.hpp"
#include "hyperoct/perm.hpp"

namespace hyperoct {

FactorSearch factor_partition(const std::vector<Partition>& e_set, long long cap) {
  require(cap > 0, "candidate cap must be positive");
  FactorSearch result;
  std::vector<Partition> heads = maximal_elements(e_set);
  // choices[i] = indices of heads dominating the i-th non-head element
  std::vector<Partition> rest;
  std::vector<std::vector<int>> choices;
  for (const auto& e : e_set) {
    if (std::find(heads.begin(), heads.end(), e) != heads.end()) continue;
    std::vector<int> dom;
    for (size_t h = 0; h < heads.size(); ++h)
      if (dominates(heads[h], e)) dom.push_back(static_cast<int>(h));
    require(!dom.empty(),
            "element \"" + format_partition(e) + "\" is not dominated by any maximal element",
            errc::internal);
    rest.push_back(e);
    choices.push_back(std::move(dom));
  }
  result.count = 1;
  for (const auto& c : choices) result.count *= static_cast<int>(c.size());
  result.unique = result.count == 1;
  require(result.count <= cap,
          "factor partition has " + result.count.str() + " candidates, over the cap " +
              std::to_string(cap),
          errc::limit_exceeded);
  // depth-first product over the per-element head choices; the first
  // candidate assigns everything to the earliest dominating head
  std::vector<int> assign(rest.size(), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == rest.size()) {
      FactorPartition fp;
      for (size_t h = 0; h < heads.size(); ++h) {
        FactorBlock blk;
        blk.head = heads[h];
        for (const auto& e : e_set) {
          if (e == heads[h]) {
            blk.members.push_back(e);
            continue;
          }
          for (size_t k = 0; k < rest.size(); ++k)
            if (rest[k] == e && choices[k][assign[k]] == static_cast<int>(h))
              blk.members.push_back(e);
        }
        fp.blocks.push_back(std::move(blk));
      }
      result.candidates.push_back(std::move(fp));
      return;
    }
    for (size_t c = 0; c < choices[i].size(); ++c) {
      assign[i] = static_cast<int>(c);
      rec(i + 1);
    }
  };
  rec(0);
  return result;
}

ColumnsResult decomposition_columns(const Partition& gamma, const Partition& delta, int b, int c,
                                    int p, int w_cap) {
  require(is_odd_prime(p), "expected an odd prime, got " + std::to_string(p));
  require(p_core(gamma, p) == gamma, "\"" + format_partition(gamma) + "\" is not a core");
  require(p_core(delta, p) == delta, "\"" + format_partition(delta) + "\" is not a core");
  require(hypothesis_check(gamma, p, b, w_cap),
          "refused: the minimal-weight hypothesis fails for (" + format_partition(gamma) +
              ", b=" + std::to_string(b) + ", p=" + std::to_string(p) + ")",
          errc::hypothesis_rejected);
  require(hypothesis_check(delta, p, c, w_cap),
          "refused: the minimal-weight hypothesis fails for (" + format_partition(delta) +
              ", c=" + std::to_string(c) + ", p=" + std::to_string(p) + ")",
          errc::hypothesis_rejected);
  ESet eb = w_and_E(gamma, p, b, w_cap);
  ESet ec = w_and_E(delta, p, c, w_cap);
  FactorSearch fb = factor_partition(eb.elements);
  FactorSearch fc = factor_partition(ec.elements);
  ColumnsResult out;
  out.block = BlockLabel{gamma, eb.w, delta, ec.w};
  out.w_b = eb.w;
  out.w_c = ec.w;
  out.e_b = eb.elements;
  out.e_c = ec.elements;
  out.unique = fb.unique && fc.unique;
  const FactorPartition& pb = fb.candidates.front();
  const FactorPartition& pc = fc.candidates.front();
  for (const auto& blk1 : pb.blocks) {
    require(is_p_regular(blk1.head, p), "column head is not regular", errc::internal);
    for (const auto& blk2 : pc.blocks) {
      require(is_p_regular(blk2.head, p), "column head is not regular", errc::internal);
      DecompColumn col;
      col.label = Bipartition{blk1.head, blk2.head};
      for (const auto& r1 : blk1.members)
        for (const auto& r2 : blk2.members) col.rows.push_back(Bipartition{r1, r2});
      out.columns.push_back(std::move(col));
    }
  }
  return out;
}

std::vector<NormalizerBlockLabel> normalizer_block_labels(int r) {
  require(r >= 0, "negative block parameter");
  std::vector<NormalizerBlockLabel> out;
  for (int vt = r; vt >= 0; --vt) out.push_back({vt, r - vt});
  return out;
}

BlockLabel brauer_correspondent(const NormalizerBlockLabel& nb, const BlockLabel& tail) {
  require(nb.vt >= 0 && nb.wt >= 0, "negative block parameter");
  require(tail.v >= 0 && tail.w >= 0, "negative block weight");
  return BlockLabel{tail.gamma, tail.v + nb.vt, tail.delta, tail.w + nb.wt};
}

ProjectivityReport projectivity_report(const Partition& gamma, const Partition& delta, int b,
                                       int c, int p, int w_cap) {
  ProjectivityReport rep;
  rep.columns = decomposition_columns(gamma, delta, b, c, p, w_cap);
  rep.block = rep.columns.block;
  rep.n = size_of(gamma) + rep.columns.w_b * p + size_of(delta) + rep.columns.w_c * p;
  require((rep.n - b - c) % 2 == 0, "degree minus odd-part counts is odd", errc::internal);
  rep.a = (rep.n - b - c) / 2;
  rep.row_count = BigInt(rep.columns.e_b.size()) * BigInt(rep.columns.e_c.size());
  BigInt covered = 0;
  for (const auto& col : rep.columns.columns) covered += BigInt(col.rows.size());
  require(covered == rep.row_count, "columns do not partition the rows", errc::internal);
  return rep;
}

}  // namespace hyperoct
