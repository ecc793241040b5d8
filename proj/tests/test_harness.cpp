#include <gtest/gtest.h>

#include "finlab/errors.hpp"
#include "fixtures.hpp"
#include "harness/generate.hpp"
#include "harness/instance.hpp"
#include "harness/oracle.hpp"
#include "harness/suites.hpp"

using namespace finlab;
using fixtures::q;

TEST(Generate, DeterministicInSeed) {
    for (Kind k : {Kind::RandomSubspace, Kind::FullSpacePair, Kind::IsometryPair, Kind::OntoPair, Kind::ComposableTriple}) {
        EXPECT_EQ(to_json(gen_instance(42, Scale{}, k)).dump(), to_json(gen_instance(42, Scale{}, k)).dump());
        EXPECT_NE(to_json(gen_instance(42, Scale{}, k)).dump(), to_json(gen_instance(43, Scale{}, k)).dump());
    }
}

TEST(Generate, ScaleBounds) {
    EXPECT_THROW(gen_instance(1, Scale{9, 4, 8}, Kind::RandomSubspace), LabError);
    EXPECT_THROW(gen_instance(1, Scale{8, 5, 8}, Kind::RandomSubspace), LabError);
    EXPECT_THROW(gen_instance(1, Scale{8, 4, 9}, Kind::RandomSubspace), LabError);
    EXPECT_THROW(gen_instance(1, Scale{0, 4, 8}, Kind::RandomSubspace), LabError);
    EXPECT_THROW(kind_from_string("nonsense"), LabError);
}

TEST(Generate, ConstructedMapsAreIsometries) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        for (Kind k : {Kind::FullSpacePair, Kind::IsometryPair, Kind::OntoPair}) {
            Instance inst(gen_instance(seed, Scale{6, 3, 4}, k));
            EXPECT_TRUE(verify_into_isometry(inst.map(0)).isometry) << to_string(k) << " seed " << seed;
            if (k == Kind::OntoPair) EXPECT_TRUE(verify_onto_isometry(inst.map(0)));
        }
        Instance sub(gen_instance(seed, Scale{}, Kind::RandomSubspace));
        EXPECT_LE(sub.subspace(0)->dim(), sub.subspace(0)->num_points());
    }
}

TEST(InstanceJson, RoundTrip) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (Field f : {Field::Real, Field::Complex}) {
            RawInstance raw = gen_instance(seed, Scale{}, Kind::ComposableTriple, f);
            const json j = to_json(raw);
            EXPECT_EQ(to_json(raw_from_json(j)).dump(), j.dump());
            EXPECT_NO_THROW(Instance(raw_from_json(j)));
        }
    }
}

TEST(InstanceJson, AcceptsHandWrittenForms) {
    const json j = json::parse(R"({
      "spaces": [{"id": "Z", "points": ["a", "b", "c"], "weight": {"a": 1, "b": "1/2", "c": [3, 2]}}],
      "subspaces": [{"id": "A", "space": "Z", "basis": [[1, 1, 1], ["1", "-1", 0]]}]
    })");
    Instance inst = instance_from_json(j);
    EXPECT_EQ(inst.subspace("A")->ambient().weight(1), q(1, 2));
    EXPECT_EQ(inst.subspace("A")->ambient().weight(2), q(3, 2));
    EXPECT_THROW(inst.subspace("B"), LabError);
}

TEST(InstanceJson, RejectsBrokenReferences) {
    EXPECT_THROW(instance_from_json(json::parse(R"({"spaces": [], "subspaces": [{"id": "A", "space": "Q", "basis": [[1]]}]})")), LabError);
    EXPECT_THROW(instance_from_json(json::parse(R"({"spaces": 3})")), LabError);
    EXPECT_THROW(instance_from_json(json::parse(R"({
      "spaces": [{"id": "Z", "points": ["a"], "weight": [1]}],
      "subspaces": [{"id": "A", "space": "Z", "basis": [[1]]}],
      "maps": [{"id": "T", "domain": "A", "codomain": "A", "matrix": [[1, 2]]}]})")),
                 LabError);
}

TEST(Oracle, HullAndVertices) {
    std::vector<Vec> sq = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {0, 0}, {1, 0}};
    EXPECT_EQ(oracle::vertices(sq), (std::vector<Vec>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}));
    EXPECT_TRUE(oracle::in_hull({q(1, 2), q(-1, 3)}, sq));
    EXPECT_FALSE(oracle::in_hull({q(3, 2), 0}, sq));
    EXPECT_EQ(oracle::ball_vertices(*fixtures::three_point()).size(), 4U);
}

TEST(Suites, UnknownIdIsAnError) {
    EXPECT_THROW(run_suite("X9.9", 1, 0), LabError);
}

TEST(Suites, ReportsAreDeterministic) {
    for (const char* id : {"T3.1", "L4.2", "C7.4"}) {
        const auto a = to_json(run_suite(id, 12, 99)).dump();
        const auto b = to_json(run_suite(id, 12, 99)).dump();
        EXPECT_EQ(a, b) << id;
    }
}

TEST(Suites, VacuityNote) {
    auto r = run_suite("C7.2-vacuity", 20, 5);
    EXPECT_TRUE(r.pass());
    EXPECT_NE(std::find(r.notes.begin(), r.notes.end(), "hypothesis never satisfiable on finite models"), r.notes.end());
}

TEST(Suites, EverySuitePassesASmallRun) {
    for (const auto& s : suites()) {
        auto r = run_suite(s.id, 15, 2024);
        EXPECT_TRUE(r.pass()) << s.id << ": " << (r.failures.empty() ? "" : r.failures[0].note);
        EXPECT_EQ(r.passed + r.skipped + static_cast<int>(r.failures.size()), 15);
    }
}

TEST(Shrink, KeepsFailingAndReachesMinimum) {
    Suite fake{"fake", "fails with two or more codomain points",
               [](std::uint64_t seed) { return gen_instance(seed, Scale{8, 4, 3}, Kind::FullSpacePair); },
               [](const Instance& inst) {
                   return inst.map(0).codomain().num_points() >= 2 ? Outcome{Verdict::Fail, "too many points"}
                                                                  : Outcome{Verdict::Pass, ""};
               },
               {}};
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        RawInstance raw = fake.generate(seed);
        if (evaluate_check(fake, Instance(raw)).verdict != Verdict::Fail) continue;
        std::string note;
        RawInstance small = shrink(raw, fake, &note);
        Instance inst(small);
        EXPECT_EQ(evaluate_check(fake, inst).verdict, Verdict::Fail);
        EXPECT_EQ(inst.map(0).codomain().num_points(), 2U);
        EXPECT_EQ(inst.map(0).domain().num_points(), 1U);
        EXPECT_EQ(note, "too many points");
    }
}
