#include <gtest/gtest.h>

#include <json.hpp>
#include <string>

#include "nichols_dm/nichols_dm.h"

using nlohmann::json;

namespace {

struct Ctx {
  ndm_context* c = nullptr;
  Ctx() { ndm_context_create(&c); }
  ~Ctx() { ndm_context_destroy(c); }
};

json take(ndm_result* r) {
  json j = json::parse(ndm_result_json(r));
  ndm_result_destroy(r);
  return j;
}

json error_of(const Ctx& ctx) { return json::parse(ndm_context_last_error(ctx.c)); }

}  // namespace

TEST(CApi, NullArguments) {
  EXPECT_EQ(ndm_context_create(nullptr), NDM_ERR_ARG);
  ndm_result* r = nullptr;
  EXPECT_EQ(ndm_reps_report(nullptr, 12, &r), NDM_ERR_ARG);
  Ctx ctx;
  EXPECT_EQ(ndm_nichols(ctx.c, 12, nullptr, &r), NDM_ERR_ARG);
  EXPECT_EQ(ndm_lifting_set_all(nullptr, "lambda", "1"), NDM_ERR_ARG);
  EXPECT_STREQ(ndm_result_json(nullptr), "");
  EXPECT_STREQ(ndm_status_name(NDM_ERR_CHECK), "check");
}

TEST(CApi, ClassifyReport) {
  Ctx ctx;
  ndm_result* r = nullptr;
  ASSERT_EQ(ndm_classify_report(ctx.c, 12, 1, 0, &r), NDM_OK);
  const json j = take(r);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["J"].size(), 7u);
  EXPECT_EQ(j["odd_ells"], json::array({1, 3, 5}));
  EXPECT_EQ(j["N"]["2"], json::array({3, 9}));
  EXPECT_EQ(j["counts"]["finite_irreducibles"], 10);
  EXPECT_EQ(ndm_classify_report(ctx.c, 10, 1, 0, &r), NDM_ERR_DOMAIN);
  EXPECT_EQ(error_of(ctx)["error"]["kind"], "domain");
}

TEST(CApi, NicholsVerdicts) {
  Ctx ctx;
  ndm_result* r = nullptr;
  ASSERT_EQ(ndm_nichols(ctx.c, 12, "I:(1,6)+(5,6)", &r), NDM_OK);
  json j = take(r);
  EXPECT_EQ(j["verdict"], "Finite");
  EXPECT_EQ(j["log2_dimension"], 4);
  ASSERT_EQ(ndm_nichols(ctx.c, 12, "irr:sr/ee", &r), NDM_OK);
  j = take(r);
  EXPECT_EQ(j["verdict"], "Infinite");
  EXPECT_EQ(j["certificate"]["rule"], "TypeD");
  ASSERT_EQ(ndm_nichols(ctx.c, 16, "irr:r2/k4+e/chi1", &r), NDM_OK);
  EXPECT_EQ(take(r)["verdict"], "Infinite");
  for (const char* bad : {"I:(1,5)", "X:1", "irr:s/zz", "K:(2,3)", "L:2", "I:(1,6)+(2,3)"}) {
    EXPECT_EQ(ndm_nichols(ctx.c, 12, bad, &r), NDM_ERR_DOMAIN) << bad;
    EXPECT_FALSE(error_of(ctx)["error"]["message"].get<std::string>().empty());
  }
  ASSERT_EQ(ndm_nichols(ctx.c, 12, "L:1+3", &r), NDM_OK);
  ndm_result_destroy(r);
  EXPECT_STREQ(ndm_context_last_error(ctx.c), "");
}

TEST(CApi, LiftingPresentationAndVerify) {
  Ctx ctx;
  ndm_lifting* l = nullptr;
  ASSERT_EQ(ndm_lifting_create(ctx.c, 12, 'c', "(1,6)+(5,6)", nullptr, &l), NDM_OK);
  ASSERT_EQ(ndm_lifting_set_all(l, "lambda", "1"), NDM_OK);
  ASSERT_EQ(ndm_lifting_set(l, "gamma[1,0]", "w^2 + 1"), NDM_OK);
  EXPECT_EQ(ndm_lifting_set(l, "theta[0,0]", "1"), NDM_ERR_DOMAIN);
  EXPECT_EQ(ndm_lifting_set(l, "lambda[0,7]", "1"), NDM_ERR_DOMAIN);
  EXPECT_EQ(ndm_lifting_set(l, "lambda[0", "1"), NDM_ERR_DOMAIN);
  EXPECT_EQ(ndm_lifting_set_all(l, "lambda", "w^"), NDM_ERR_DOMAIN);
  ndm_result* r = nullptr;
  ASSERT_EQ(ndm_lifting_presentation(l, &r), NDM_OK);
  const json p = take(r);
  EXPECT_EQ(p["datum"], json({{"gamma[0,1]", "w^2 + 1"}, {"lambda[0,0]", "1"}, {"lambda[0,1]", "1"}, {"lambda[1,1]", "1"}}));
  EXPECT_EQ(p["generators"].size(), 4u);
  EXPECT_TRUE(p["checks"]["conjugation_closure"].get<bool>());
  ASSERT_EQ(ndm_lifting_verify(l, &r), NDM_OK);
  const json v = take(r);
  EXPECT_EQ(v["dimension"], 384);
  EXPECT_TRUE(v["ok"].get<bool>());
  ndm_lifting_destroy(l);

  EXPECT_EQ(ndm_lifting_create(ctx.c, 12, 'a', "(1,6)", nullptr, &l), NDM_ERR_DOMAIN);
  EXPECT_EQ(ndm_lifting_create(ctx.c, 12, 'd', "(2,3)", nullptr, &l), NDM_ERR_DOMAIN);
  EXPECT_EQ(ndm_lifting_create(ctx.c, 12, 'd', "(1,6)", "3", &l), NDM_ERR_DOMAIN);
  EXPECT_EQ(ndm_lifting_create(ctx.c, 12, 'x', "(1,6)", nullptr, &l), NDM_ERR_DOMAIN);
  ASSERT_EQ(ndm_lifting_create(ctx.c, 12, 'b', nullptr, "1+3", &l), NDM_OK);
  ASSERT_EQ(ndm_lifting_verify(l, &r), NDM_OK);
  EXPECT_EQ(take(r)["dimension"], 384);
  ndm_lifting_destroy(l);
}

TEST(CApi, IsoRackReps) {
  Ctx ctx;
  ndm_result* r = nullptr;
  ASSERT_EQ(ndm_iso_report(ctx.c, 12, 1, nullptr, 0, &r), NDM_OK);
  const json j = take(r);
  EXPECT_EQ(j["grid"], json::array({"0", "1"}));
  EXPECT_EQ(j["class_count"], 8);
  EXPECT_EQ(ndm_iso_report(ctx.c, 12, 1, "0,q", 0, &r), NDM_ERR_DOMAIN);

  ASSERT_EQ(ndm_rack_report(ctx.c, 20, "sr", &r), NDM_OK);
  const json k = take(r);
  EXPECT_TRUE(k["type_d"].get<bool>());
  EXPECT_TRUE(k["witness_verified"].get<bool>());
  EXPECT_EQ(ndm_rack_report(ctx.c, 12, "t", &r), NDM_ERR_DOMAIN);

  ASSERT_EQ(ndm_reps_report(ctx.c, 7, &r), NDM_OK);
  const json reps = take(r);
  EXPECT_EQ(reps["linear_count"], 2);
  EXPECT_EQ(reps["two_dimensional_count"], 3);
  EXPECT_TRUE(reps["orthogonality"].get<bool>());
}

TEST(CApi, ThreadsDoNotChangeOutput) {
  Ctx a, b;
  ndm_context_set_threads(b.c, 4);
  ndm_result *ra = nullptr, *rb = nullptr;
  ASSERT_EQ(ndm_classify_report(a.c, 16, 2, 0, &ra), NDM_OK);
  ASSERT_EQ(ndm_classify_report(b.c, 16, 2, 0, &rb), NDM_OK);
  EXPECT_STREQ(ndm_result_json(ra), ndm_result_json(rb));
  ndm_result_destroy(ra);
  ndm_result_destroy(rb);
}
