// Command-line front end.  Talks to the library exclusively through the
// C interface so it doubles as a smoke test of that surface.
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "hyperoct.h"

namespace {

struct ResultDeleter {
  void operator()(hyp_result* r) const { hyp_result_free(r); }
};
using Result = std::unique_ptr<hyp_result, ResultDeleter>;

int emit(hyp_status status, hyp_result* raw) {
  Result res(raw);
  if (status == HYP_OK) {
    std::fputs(hyp_result_text(res.get()), stdout);
    return 0;
  }
  std::fprintf(stderr, "error: %s\n", hyp_result_message(res.get()));
  return status == HYP_ERROR_HYPOTHESIS ? 2 : 1;
}

long long default_limit() {
  if (const char* env = std::getenv("HYPEROCT_LIMIT")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0') return v;
    std::fprintf(stderr, "warning: ignoring malformed HYPEROCT_LIMIT=%s\n", env);
  }
  return 1000000;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation computations for the signed permutation groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hyp_version()));

  std::string format = "text";
  app.add_option("--format", format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  auto fmt = [&format]() {
    if (format == "json") return HYP_FORMAT_JSON;
    if (format == "csv") return HYP_FORMAT_CSV;
    return HYP_FORMAT_TEXT;
  };

  int n = 0, a = 0, b = 0, c = 0, p = 3, r = 1, s = 0, k = 0;
  int jobs = 1, w_cap = 30;
  long long limit = default_limit();
  long long cap = 10000000;
  std::string perm, pair, subgroup, gamma, delta, gens;

  auto* cmd_classes = app.add_subcommand("classes", "List conjugacy classes");
  cmd_classes->add_option("n", n, "Number of symbols")->required();

  auto* cmd_cent = app.add_subcommand("centralizer", "Class data of one element");
  cmd_cent->add_option("perm", perm, "Element in cycle notation, e.g. \"(1 2)(1- 2-)\"")
      ->required();
  cmd_cent->add_option("-n,--symbols", n, "Number of symbols")->required();

  auto* cmd_mdim = app.add_subcommand("model-dim", "Dimension of the module M_(a,b,c)");
  cmd_mdim->add_option("a", a)->required();
  cmd_mdim->add_option("b", b)->required();
  cmd_mdim->add_option("c", c)->required();

  auto* cmd_mcon = app.add_subcommand("model-constituents",
                                      "Ordinary constituents of M_(a,b,c)");
  cmd_mcon->add_option("a", a)->required();
  cmd_mcon->add_option("b", b)->required();
  cmd_mcon->add_option("c", c)->required();

  auto* cmd_sdim = app.add_subcommand("specht-dim", "Dimension of an irreducible");
  cmd_sdim->add_option("pair", pair, "Bipartition \"lambda|mu\", e.g. \"2,1|1\"")->required();

  auto* cmd_basis = app.add_subcommand("basis", "Diagram basis of M_(a,b,c)");
  cmd_basis->add_option("a", a)->required();
  cmd_basis->add_option("b", b)->required();
  cmd_basis->add_option("c", c)->required();
  cmd_basis->add_option("--limit", limit, "Refuse bases larger than this (-1: no limit)");

  auto* cmd_bdim = app.add_subcommand("brauer-dim",
                                      "Fixed-point dimension under a p-subgroup");
  cmd_bdim->add_option("a", a)->required();
  cmd_bdim->add_option("b", b)->required();
  cmd_bdim->add_option("c", c)->required();
  cmd_bdim->add_option("-p,--prime", p, "Odd prime")->required();
  cmd_bdim
      ->add_option("--subgroup", subgroup,
                   "R_<r>, N_<r>, K_<r>, R_omega:<pairs>/<rest>, Q:<l1>,<l2>,<t>,<u> or "
                   "gens:<cycles>;...")
      ->required();
  cmd_bdim->add_option("--limit", limit, "Refuse bases larger than this (-1: no limit)");
  cmd_bdim->add_option("--jobs", jobs, "Worker threads for the basis scan");

  auto* cmd_table = app.add_subcommand("summand-table",
                                       "Per-summand fixed-point dimensions under R_r");
  cmd_table->add_option("a", a)->required();
  cmd_table->add_option("b", b)->required();
  cmd_table->add_option("c", c)->required();
  cmd_table->add_option("-p,--prime", p, "Odd prime")->required();
  cmd_table->add_option("-r,--rank", r, "Rank of the cyclic subgroup")->required();
  cmd_table->add_option("--limit", limit, "Refuse bases larger than this (-1: no limit)");
  cmd_table->add_option("--jobs", jobs, "Worker threads for the basis scans");

  auto* cmd_omega = app.add_subcommand("omega", "Pair/rest partitions of {1..2s+k}");
  cmd_omega->add_option("s", s, "Number of pairs")->required();
  cmd_omega->add_option("k", k, "Number of singletons")->required();
  cmd_omega->add_option("--limit", limit, "Refuse enumerations larger than this (-1: no limit)");

  auto* cmd_vert = app.add_subcommand("vertices", "Candidate vertex subgroups for M_(a,b,c)");
  cmd_vert->add_option("a", a)->required();
  cmd_vert->add_option("b", b)->required();
  cmd_vert->add_option("c", c)->required();
  cmd_vert->add_option("-p,--prime", p, "Odd prime")->required();

  auto* cmd_eset = app.add_subcommand("e-set", "Minimal weight w and the set E_b(gamma)");
  cmd_eset->add_option("gamma", gamma, "p-core partition, e.g. \"3,1\" (\"\" for empty)")
      ->required();
  cmd_eset->add_option("-p,--prime", p, "Odd prime")->required();
  cmd_eset->add_option("-b,--signed-cycles", b, "Number of signed cycles")->required();
  cmd_eset->add_option("--cap", w_cap, "Largest weight to try");

  auto* cmd_hyp = app.add_subcommand("hypothesis",
                                     "Check the minimal-weight hypothesis for (gamma, b)");
  cmd_hyp->add_option("gamma", gamma, "p-core partition")->required();
  cmd_hyp->add_option("-p,--prime", p, "Odd prime")->required();
  cmd_hyp->add_option("-b,--signed-cycles", b, "Number of signed cycles")->required();
  cmd_hyp->add_option("--cap", w_cap, "Largest weight to try");

  auto* cmd_cols = app.add_subcommand("decomp-cols",
                                      "Decomposition-matrix column patterns of one block");
  cmd_cols->add_option("gamma", gamma, "First p-core")->required();
  cmd_cols->add_option("delta", delta, "Second p-core")->required();
  cmd_cols->add_option("-b,--first-cycles", b, "Signed cycles on the first side")->required();
  cmd_cols->add_option("-c,--second-cycles", c, "Signed cycles on the second side")->required();
  cmd_cols->add_option("-p,--prime", p, "Odd prime")->required();
  cmd_cols->add_option("--cap", w_cap, "Largest weight to try");

  auto* cmd_blk = app.add_subcommand("block-label", "Core and weight of each factor");
  cmd_blk->add_option("pair", pair, "Bipartition \"lambda|mu\"")->required();
  cmd_blk->add_option("-p,--prime", p, "Odd prime")->required();

  auto* cmd_simple = app.add_subcommand("simple-labels", "Labels of the p-modular simples");
  cmd_simple->add_option("n", n, "Number of symbols")->required();
  cmd_simple->add_option("-p,--prime", p, "Odd prime")->required();

  auto* cmd_clo = app.add_subcommand("closure-order", "Order of a generated subgroup");
  cmd_clo->add_option("gens", gens, "';'-separated generators in cycle notation")->required();
  cmd_clo->add_option("-n,--symbols", n, "Number of symbols")->required();
  cmd_clo->add_option("--cap", cap, "Give up past this many elements");

  // let "--format" (registered on the app) appear after the subcommand too
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  hyp_result* res = nullptr;
  hyp_status st = HYP_ERROR_INVALID_INPUT;

  if (cmd_classes->parsed()) st = hyp_classes(n, fmt(), &res);
  else if (cmd_cent->parsed()) st = hyp_centralizer(perm.c_str(), n, fmt(), &res);
  else if (cmd_mdim->parsed()) st = hyp_model_dim(a, b, c, fmt(), &res);
  else if (cmd_mcon->parsed()) st = hyp_model_constituents(a, b, c, fmt(), &res);
  else if (cmd_sdim->parsed()) st = hyp_specht_dim(pair.c_str(), fmt(), &res);
  else if (cmd_basis->parsed()) st = hyp_basis(a, b, c, limit, fmt(), &res);
  else if (cmd_bdim->parsed())
    st = hyp_brauer_dim(a, b, c, p, subgroup.c_str(), limit, jobs, fmt(), &res);
  else if (cmd_table->parsed()) st = hyp_summand_table(a, b, c, p, r, limit, jobs, fmt(), &res);
  else if (cmd_omega->parsed()) st = hyp_omega(s, k, limit, fmt(), &res);
  else if (cmd_vert->parsed()) st = hyp_vertices(a, b, c, p, fmt(), &res);
  else if (cmd_eset->parsed()) st = hyp_e_set(gamma.c_str(), p, b, w_cap, fmt(), &res);
  else if (cmd_hyp->parsed()) st = hyp_hypothesis(gamma.c_str(), p, b, w_cap, fmt(), &res);
  else if (cmd_cols->parsed())
    st = hyp_decomp_cols(gamma.c_str(), delta.c_str(), b, c, p, w_cap, fmt(), &res);
  else if (cmd_blk->parsed()) st = hyp_block_label(pair.c_str(), p, fmt(), &res);
  else if (cmd_simple->parsed()) st = hyp_simple_labels(n, p, fmt(), &res);
  else if (cmd_clo->parsed()) st = hyp_closure_order(gens.c_str(), n, cap, fmt(), &res);

  return emit(st, res);
}
