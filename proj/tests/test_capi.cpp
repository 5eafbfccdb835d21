// Exercises the shared library strictly through the C header, the same
// way the CLI does.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <string>

#include "hyperoct.h"

namespace {

struct ResultDeleter {
  void operator()(hyp_result* r) const { hyp_result_free(r); }
};
using Result = std::unique_ptr<hyp_result, ResultDeleter>;

}  // namespace

TEST_CASE("version string") {
  CHECK(std::string(hyp_version()) == "1.0.0");
}

TEST_CASE("simple scalar calls") {
  hyp_result* raw = nullptr;
  REQUIRE(hyp_model_dim(1, 1, 0, HYP_FORMAT_TEXT, &raw) == HYP_OK);
  Result res(raw);
  CHECK(std::string(hyp_result_text(res.get())) == "6\n");
  CHECK(std::string(hyp_result_message(res.get())) == "");
  CHECK(hyp_result_status(res.get()) == HYP_OK);
}

TEST_CASE("json output is stable across calls") {
  std::string first;
  for (int i = 0; i < 3; ++i) {
    hyp_result* raw = nullptr;
    REQUIRE(hyp_classes(3, HYP_FORMAT_JSON, &raw) == HYP_OK);
    Result res(raw);
    std::string text = hyp_result_text(res.get());
    CHECK(!text.empty());
    CHECK(text.back() == '\n');
    if (i == 0)
      first = text;
    else
      CHECK(text == first);
  }
}

TEST_CASE("invalid input maps to the right status") {
  hyp_result* raw = nullptr;
  CHECK(hyp_specht_dim("not a label", HYP_FORMAT_TEXT, &raw) == HYP_ERROR_INVALID_INPUT);
  Result res(raw);
  CHECK(hyp_result_status(res.get()) == HYP_ERROR_INVALID_INPUT);
  CHECK(std::string(hyp_result_text(res.get())).empty());
  CHECK(!std::string(hyp_result_message(res.get())).empty());
}

TEST_CASE("hypothesis refusal maps to its own status") {
  hyp_result* raw = nullptr;
  CHECK(hyp_decomp_cols("", "", 3, 0, 3, 30, HYP_FORMAT_TEXT, &raw) == HYP_ERROR_HYPOTHESIS);
  Result res(raw);
  std::string msg = hyp_result_message(res.get());
  CHECK(msg.find("refused") != std::string::npos);
}

TEST_CASE("limit guard maps to its own status") {
  hyp_result* raw = nullptr;
  CHECK(hyp_basis(5, 0, 0, 100, HYP_FORMAT_TEXT, &raw) == HYP_ERROR_LIMIT);
  Result res(raw);
  CHECK(hyp_result_status(res.get()) == HYP_ERROR_LIMIT);
}

TEST_CASE("null handling") {
  CHECK(hyp_model_dim(1, 0, 0, HYP_FORMAT_TEXT, nullptr) == HYP_ERROR_INVALID_INPUT);
  hyp_result* raw = nullptr;
  CHECK(hyp_specht_dim(nullptr, HYP_FORMAT_TEXT, &raw) == HYP_ERROR_INVALID_INPUT);
  Result res(raw);
  CHECK(hyp_result_status(nullptr) == HYP_ERROR_INVALID_INPUT);
  CHECK(std::string(hyp_result_text(nullptr)) == "");
  hyp_result_free(nullptr);  // must be a no-op
}

TEST_CASE("worker threads do not change the answer") {
  std::string serial, parallel;
  {
    hyp_result* raw = nullptr;
    REQUIRE(hyp_brauer_dim(3, 1, 0, 3, "R_2", -1, 1, HYP_FORMAT_JSON, &raw) == HYP_OK);
    Result res(raw);
    serial = hyp_result_text(res.get());
  }
  {
    hyp_result* raw = nullptr;
    REQUIRE(hyp_brauer_dim(3, 1, 0, 3, "R_2", -1, 4, HYP_FORMAT_JSON, &raw) == HYP_OK);
    Result res(raw);
    parallel = hyp_result_text(res.get());
  }
  CHECK(serial == parallel);
}

TEST_CASE("subgroup specs") {
  auto dim_of = [](const char* spec) {
    hyp_result* raw = nullptr;
    REQUIRE(hyp_brauer_dim(3, 0, 0, 3, spec, -1, 1, HYP_FORMAT_TEXT, &raw) == HYP_OK);
    Result res(raw);
    return std::string(hyp_result_text(res.get()));
  };
  // the same subgroup written three ways gives the same count
  CHECK(dim_of("R_2") == "6\n");
  CHECK(dim_of("R_omega:1+2/") == dim_of("R_2"));
  CHECK(dim_of("gens:(1 2 3)(4 5 6)(1- 2- 3-)(4- 5- 6-)") == dim_of("R_2"));
  CHECK(dim_of("Q:1,0,0,0") == dim_of("R_2"));

  hyp_result* raw = nullptr;
  CHECK(hyp_brauer_dim(3, 0, 0, 3, "X_9", -1, 1, HYP_FORMAT_TEXT, &raw) ==
        HYP_ERROR_INVALID_INPUT);
  Result res(raw);
  CHECK(!std::string(hyp_result_message(res.get())).empty());
}

TEST_CASE("csv escaping") {
  hyp_result* raw = nullptr;
  REQUIRE(hyp_e_set("", 3, 1, 30, HYP_FORMAT_CSV, &raw) == HYP_OK);
  Result res(raw);
  std::string text = hyp_result_text(res.get());
  // "2,1" must be quoted in CSV output
  CHECK(text.find("\"2,1\"") != std::string::npos);
  CHECK(text.rfind("w,element,maximal\n", 0) == 0);
}

TEST_CASE("closure order through the C surface") {
  hyp_result* raw = nullptr;
  REQUIRE(hyp_closure_order("(1 2 3)(1- 2- 3-);(1 1-)(2 2-)(3 3-)", 3, 1000000,
                            HYP_FORMAT_TEXT, &raw) == HYP_OK);
  Result res(raw);
  CHECK(std::string(hyp_result_text(res.get())) == "6\n");
}
