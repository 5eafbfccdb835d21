#pragma once

#include <string>

namespace hyperoct::ops {

enum class Format { text, json, csv };

Format parse_format(const std::string& name);

// Each function runs one complete query and renders it in the requested
// format; errors surface as hyperoct::error.  These are the units the C API
// (and therefore the CLI) exposes.
std::string classes(int n, Format f);
std::string centralizer(const std::string& perm_cycles, int n, Format f);
std::string model_dim_report(int a, int b, int c, Format f);
std::string model_constituents_report(int a, int b, int c, Format f);
std::string specht_dim_report(const std::string& pair, Format f);
std::string basis_report(int a, int b, int c, long long limit, Format f);
std::string brauer_dim_report(int a, int b, int c, int p, const std::string& subgroup,
                              long long limit, int jobs, Format f);
std::string summand_table_report(int a, int b, int c, int p, int r, long long limit, int jobs,
                                 Format f);
std::string omega_report(int s, int k, long long limit, Format f);
std::string vertices_report(int a, int b, int c, int p, Format f);
std::string e_set_report(const std::string& gamma, int p, int b, int w_cap, Format f);
std::string hypothesis_report(const std::string& gamma, int p, int b, int w_cap, Format f);
std::string decomp_cols_report(const std::string& gamma, const std::string& delta, int b, int c,
                               int p, int w_cap, Format f);
std::string block_label_report(const std::string& pair, int p, Format f);
std::string simple_labels_report(int n, int p, Format f);
std::string closure_order_report(const std::string& gens, int n, long long cap, Format f);

}  // namespace hyperoct::ops
