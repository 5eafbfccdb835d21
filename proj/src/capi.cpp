#include "hyperoct.h"

#include <new>
#include <string>

#include "hyperoct/error.hpp"
#include "hyperoct/ops.hpp"

struct hyp_result {
  hyp_status status = HYP_OK;
  std::string text;
  std::string message;
};

namespace {

hyp_status status_of(hyperoct::errc kind) {
  switch (kind) {
    case hyperoct::errc::invalid_input:
      return HYP_ERROR_INVALID_INPUT;
    case hyperoct::errc::hypothesis_rejected:
      return HYP_ERROR_HYPOTHESIS;
    case hyperoct::errc::limit_exceeded:
      return HYP_ERROR_LIMIT;
    case hyperoct::errc::internal:
      return HYP_ERROR_INTERNAL;
  }
  return HYP_ERROR_INTERNAL;
}

hyperoct::ops::Format cpp_format(hyp_format f) {
  switch (f) {
    case HYP_FORMAT_TEXT:
      return hyperoct::ops::Format::text;
    case HYP_FORMAT_JSON:
      return hyperoct::ops::Format::json;
    case HYP_FORMAT_CSV:
      return hyperoct::ops::Format::csv;
  }
  hyperoct::fail(hyperoct::errc::invalid_input, "bad format code");
}

// Runs fn(), capturing its rendered text or the failure into a fresh handle.
template <typename Fn>
hyp_status run(hyp_result** out, Fn&& fn) {
  if (!out) return HYP_ERROR_INVALID_INPUT;
  *out = nullptr;
  auto* res = new (std::nothrow) hyp_result;
  if (!res) return HYP_ERROR_INTERNAL;
  try {
    res->text = fn();
  } catch (const hyperoct::error& e) {
    res->status = status_of(e.kind());
    res->message = e.what();
  } catch (const std::exception& e) {
    res->status = HYP_ERROR_INTERNAL;
    res->message = e.what();
  } catch (...) {
    res->status = HYP_ERROR_INTERNAL;
    res->message = "unknown error";
  }
  *out = res;
  return res->status;
}

std::string need(const char* s, const char* what) {
  hyperoct::require(s != nullptr, std::string(what) + " must not be NULL");
  return std::string(s);
}

}  // namespace

extern "C" {

const char* hyp_version(void) { return "1.0.0"; }

void hyp_result_free(hyp_result* res) { delete res; }

hyp_status hyp_result_status(const hyp_result* res) {
  return res ? res->status : HYP_ERROR_INVALID_INPUT;
}

const char* hyp_result_text(const hyp_result* res) { return res ? res->text.c_str() : ""; }

const char* hyp_result_message(const hyp_result* res) {
  return res ? res->message.c_str() : "null result handle";
}

hyp_status hyp_classes(int n, hyp_format format, hyp_result** out) {
  return run(out, [&] { return hyperoct::ops::classes(n, cpp_format(format)); });
}

hyp_status hyp_centralizer(const char* perm_cycles, int n, hyp_format format, hyp_result** out) {
  return run(out, [&] {
    return hyperoct::ops::centralizer(need(perm_cycles, "perm_cycles"), n, cpp_format(format));
  });
}

hyp_status hyp_model_dim(int a, int b, int c, hyp_format format, hyp_result** out) {
  return run(out, [&] { return hyperoct::ops::model_dim_report(a, b, c, cpp_format(format)); });
}

hyp_status hyp_model_constituents(int a, int b, int c, hyp_format format, hyp_result** out) {
  return run(out,
             [&] { return hyperoct::ops::model_constituents_report(a, b, c, cpp_format(format)); });
}

hyp_status hyp_specht_dim(const char* pair, hyp_format format, hyp_result** out) {
  return run(out, [&] {
    return hyperoct::ops::specht_dim_report(need(pair, "pair"), cpp_format(format));
  });
}

hyp_status hyp_basis(int a, int b, int c, long long limit, hyp_format format, hyp_result** out) {
  return run(out, [&] { return hyperoct::ops::basis_report(a, b, c, limit, cpp_format(format)); });
}

hyp_status hyp_brauer_dim(int a, int b, int c, int p, const char* subgroup, long long limit,
                          int jobs, hyp_format format, hyp_result** out) {
  return run(out, [&] {
    return hyperoct::ops::brauer_dim_report(a, b, c, p, need(subgroup, "subgroup"), limit, jobs,
                                            cpp_format(format));
  });
}

hyp_status hyp_summand_table(int a, int b, int c, int p, int r, long long limit, int jobs,
                             hyp_format format, hyp_result** out) {
  return run(out, [&] {
    return hyperoct::ops::summand_table_report(a, b, c, p, r, limit, jobs, cpp_format(format));
  });
}

hyp_status hyp_omega(int s, int k, long long limit, hyp_format format, hyp_result** out) {
  return run(out, [&] { return hyperoct::ops::omega_report(s, k, limit, cpp_format(format)); });
}

hyp_status hyp_vertices(int a, int b, int c, int p, hyp_format format, hyp_result** out) {
  return run(out, [&] { return hyperoct::ops::vertices_report(a, b, c, p, cpp_format(format)); });
}

hyp_status hyp_e_set(const char* gamma, int p, int b, int w_cap, hyp_format format,
                     hyp_result** out) {
  return run(out, [&] {
    return hyperoct::ops::e_set_report(need(gamma, "gamma"), p, b, w_cap, cpp_format(format));
  });
}

hyp_status hyp_hypothesis(const char* gamma, int p, int b, int w_cap, hyp_format format,
                          hyp_result** out) {
  return run(out, [&] {
    return hyperoct::ops::hypothesis_report(need(gamma, "gamma"), p, b, w_cap, cpp_format(format));
  });
}

hyp_status hyp_decomp_cols(const char* gamma, const char* delta, int b, int c, int p, int w_cap,
                           hyp_format format, hyp_result** out) {
  return run(out, [&] {
    return hyperoct::ops::decomp_cols_report(need(gamma, "gamma"), need(delta, "delta"), b, c, p,
                                             w_cap, cpp_format(format));
  });
}

hyp_status hyp_block_label(const char* pair, int p, hyp_format format, hyp_result** out) {
  return run(out, [&] {
    return hyperoct::ops::block_label_report(need(pair, "pair"), p, cpp_format(format));
  });
}

hyp_status hyp_simple_labels(int n, int p, hyp_format format, hyp_result** out) {
  return run(out, [&] { return hyperoct::ops::simple_labels_report(n, p, cpp_format(format)); });
}

hyp_status hyp_closure_order(const char* gens, int n, long long cap, hyp_format format,
                             hyp_result** out) {
  return run(out, [&] {
    return hyperoct::ops::closure_order_report(need(gens, "gens"), n, cap, cpp_format(format));
  });
}

}  // extern "C"
