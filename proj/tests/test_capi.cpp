#include <gtest/gtest.h>

#include <string>

#include <json.hpp>

#include "finlab.h"

using json = nlohmann::json;

namespace {

const char* kInstance = R"({
  "spaces": [
    {"id": "Z", "points": ["a", "b", "c"], "weight": [1, 1, 1]},
    {"id": "Z1", "points": ["a", "b"], "weight": [1, 1]},
    {"id": "Z2", "points": ["x", "y", "z"], "weight": [1, 1, 1]}
  ],
  "subspaces": [
    {"id": "A", "space": "Z", "basis": [[1, 1, 1], [1, -1, 0]]},
    {"id": "A1", "space": "Z1", "basis": [[1, 0], [0, 1]]},
    {"id": "A2", "space": "Z2", "basis": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}
  ],
  "maps": [
    {"id": "T", "domain": "A1", "codomain": "A2", "matrix": [[1, 0], [0, -1], ["1/2", "1/2"]]},
    {"id": "S", "domain": "A1", "codomain": "A1", "matrix": [[0, 1], [-1, 0]]}
  ]
})";

struct Inst {
    lab_instance* p = nullptr;
    Inst() { EXPECT_EQ(lab_instance_from_json(kInstance, &p), LAB_OK) << lab_last_error(); }
    ~Inst() { lab_instance_free(p); }
};

json call(lab_status (*fn)(const lab_instance*, const char*, char**), const lab_instance* inst, const json& req) {
    char* out = nullptr;
    const lab_status st = fn(inst, req.dump().c_str(), &out);
    EXPECT_EQ(st, LAB_OK) << lab_last_error();
    if (st != LAB_OK) return {};
    json j = json::parse(out);
    lab_string_free(out);
    return j;
}

}  // namespace

TEST(CApi, RoundTrip) {
    Inst inst;
    char* out = nullptr;
    ASSERT_EQ(lab_instance_to_json(inst.p, &out), LAB_OK);
    lab_instance* again = nullptr;
    EXPECT_EQ(lab_instance_from_json(out, &again), LAB_OK);
    lab_instance_free(again);
    lab_string_free(out);
}

TEST(CApi, ErrorsCarryCodesAndMessages) {
    lab_instance* p = nullptr;
    EXPECT_EQ(lab_instance_from_json("{not json", &p), LAB_ERR_PARSE);
    EXPECT_EQ(p, nullptr);
    EXPECT_STRNE(lab_last_error(), "");
    Inst inst;
    char* out = nullptr;
    EXPECT_EQ(lab_mset(inst.p, R"({"map": "Q"})", &out), LAB_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(lab_norm(inst.p, R"({"subspace": "A", "function": [0, 0, 0]})", &out), LAB_ERR_UNDEFINED_SUPPMAX);
    EXPECT_EQ(lab_norm(inst.p, R"({"subspace": "A", "function": [1, 0, 0]})", &out), LAB_ERR_SPAN_MEMBERSHIP);
    EXPECT_EQ(lab_invert(inst.p, R"({"map": "T"})", &out), LAB_ERR_NOT_ONTO);
    EXPECT_EQ(lab_run_suite("nope", 1, 0, &out), LAB_ERR_UNKNOWN_SUITE);
    EXPECT_EQ(lab_generate("random_subspace", 1, 9, 4, 8, "real", &out), LAB_ERR_SCALE_OUT_OF_BOUNDS);
    EXPECT_EQ(lab_mset(nullptr, "{}", &out), LAB_ERR_INVALID_ARGUMENT);
    EXPECT_STREQ(lab_status_name(LAB_ERR_NOT_CHOQUET), "not-choquet");
}

TEST(CApi, Operations) {
    Inst inst;
    EXPECT_EQ(call(lab_mset, inst.p, {{"subspace", "A"}})["m_set"], json::parse(R"(["a","b"])"));
    EXPECT_EQ(call(lab_mset, inst.p, {{"map", "T"}})["m_set"], json::parse(R"(["x","y"])"));
    EXPECT_EQ(call(lab_boundary, inst.p, {{"subspace", "A"}, {"points", {"c"}}})["boundary"], false);
    EXPECT_EQ(call(lab_norm, inst.p, {{"subspace", "A"}, {"function", {3, 1, 2}}})["norm"]["exact"], "3");
    EXPECT_EQ(call(lab_sigma, inst.p, {{"subspace", "A1"}, {"family", {{1, 1}}}})["centered"], true);
    EXPECT_EQ(call(lab_verify_isometry, inst.p, {{"map", "T"}, {"onto", true}})["onto"], false);
    const json d = call(lab_decompose, inst.p, {{"map", "T"}});
    EXPECT_EQ(d["tau"], json::parse(R"({"x":"a","y":"b"})"));
    EXPECT_EQ(call(lab_compose, inst.p, {{"first", "S"}, {"second", "T"}})["agrees"], true);
    EXPECT_EQ(call(lab_invert, inst.p, {{"map", "S"}})["agrees"], true);
    EXPECT_EQ(call(lab_alpha_beta, inst.p, {{"map", "T"}})["beta_at"]["z"], "false");
}

TEST(CApi, SuiteAndGenerate) {
    char* out = nullptr;
    ASSERT_EQ(lab_run_suite("C7.2-vacuity", 5, 5, &out), LAB_OK);
    json r = json::parse(out);
    lab_string_free(out);
    EXPECT_EQ(r["status"], "pass");
    ASSERT_EQ(lab_generate("onto_pair", 3, 6, 4, 4, "complex", &out), LAB_OK);
    lab_instance* p = nullptr;
    EXPECT_EQ(lab_instance_from_json(out, &p), LAB_OK);
    lab_instance_free(p);
    lab_string_free(out);
    ASSERT_EQ(lab_list_suites(&out), LAB_OK);
    EXPECT_NE(std::string(out).find("T7.2"), std::string::npos);
    lab_string_free(out);
}
