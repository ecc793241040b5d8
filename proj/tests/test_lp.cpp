#include <gtest/gtest.h>

#include <random>

#include "finlab/lp.hpp"

using namespace finlab;
using namespace finlab::lp;

TEST(LinearProgram, SimpleMaximum) {
    LinearProgram p(2);
    p.set_objective({3, 2}, Sense::Maximize);
    p.add_row({1, 1}, Relation::LessEqual, 4);
    p.add_row({1, 3}, Relation::LessEqual, 6);
    p.add_row({1, 0}, Relation::LessEqual, 3);
    auto r = p.solve();
    ASSERT_EQ(r.status, Status::Optimal);
    EXPECT_EQ(r.objective, Rational(11));
    EXPECT_EQ(r.x[0], Rational(3));
    EXPECT_EQ(r.x[1], Rational(1));
}

TEST(LinearProgram, FractionalOptimumIsExact) {
    LinearProgram p(2);
    p.set_objective({1, 1}, Sense::Maximize);
    p.add_row({3, 1}, Relation::LessEqual, 1);
    p.add_row({1, 3}, Relation::LessEqual, 1);
    auto r = p.solve();
    ASSERT_EQ(r.status, Status::Optimal);
    EXPECT_EQ(r.objective, Rational(1, 2));
}

TEST(LinearProgram, Infeasible) {
    LinearProgram p(1);
    p.set_objective({1}, Sense::Minimize);
    p.add_row({1}, Relation::GreaterEqual, 2);
    p.add_row({1}, Relation::LessEqual, 1);
    EXPECT_EQ(p.solve().status, Status::Infeasible);
}

TEST(LinearProgram, Unbounded) {
    LinearProgram p(2);
    p.set_objective({1, 0}, Sense::Maximize);
    p.add_row({1, -1}, Relation::LessEqual, 1);
    EXPECT_EQ(p.solve().status, Status::Unbounded);
}

TEST(LinearProgram, FreeVariablesAndEqualities) {
    LinearProgram p(2);
    p.set_free(0);
    p.set_objective({1, 0}, Sense::Minimize);
    p.add_row({1, 1}, Relation::Equal, -3);
    p.add_row({0, 1}, Relation::LessEqual, 2);
    auto r = p.solve();
    ASSERT_EQ(r.status, Status::Optimal);
    EXPECT_EQ(r.objective, Rational(-5));
}

TEST(LinearProgram, DegenerateCycleProneProblemTerminates) {
    // Beale's example, which cycles under the textbook pivot rule.
    LinearProgram p(4);
    p.set_objective({Rational(-3, 4), 150, Rational(-1, 50), 6}, Sense::Minimize);
    p.add_row({Rational(1, 4), -60, Rational(-1, 25), 9}, Relation::LessEqual, 0);
    p.add_row({Rational(1, 2), -90, Rational(-1, 50), 3}, Relation::LessEqual, 0);
    p.add_row({0, 0, 1, 0}, Relation::LessEqual, 1);
    auto r = p.solve();
    ASSERT_EQ(r.status, Status::Optimal);
    EXPECT_EQ(r.objective, Rational(-1, 20));
}

// Property: on random bounded boxes with random cuts, the reported optimum
// is feasible and no vertex of the integer grid inside does better.
TEST(LinearProgram, RandomProblemsAgreeWithGridSearch) {
    std::mt19937 gen(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        LinearProgram p(2);
        std::vector<Rational> obj = {coef(gen), coef(gen)};
        p.set_objective(obj, Sense::Maximize);
        p.add_row({1, 0}, Relation::LessEqual, 4);
        p.add_row({0, 1}, Relation::LessEqual, 4);
        std::vector<std::pair<std::vector<Rational>, Rational>> cuts;
        for (int k = 0; k < 2; ++k) {
            std::vector<Rational> row = {coef(gen), coef(gen)};
            Rational rhs = coef(gen) + 4;
            p.add_row(row, Relation::LessEqual, rhs);
            cuts.emplace_back(row, rhs);
        }
        auto r = p.solve();
        auto feasible = [&](const Rational& x, const Rational& y) {
            if (x < 0 || y < 0 || x > 4 || y > 4) return false;
            for (auto& [row, rhs] : cuts)
                if (row[0] * x + row[1] * y > rhs) return false;
            return true;
        };
        bool any = false;
        for (int x = 0; x <= 4; ++x)
            for (int y = 0; y <= 4; ++y)
                if (feasible(x, y)) {
                    any = true;
                    if (r.status == Status::Optimal) EXPECT_LE(obj[0] * x + obj[1] * y, r.objective);
                }
        if (r.status == Status::Optimal) {
            EXPECT_TRUE(feasible(r.x[0], r.x[1]));
            EXPECT_EQ(obj[0] * r.x[0] + obj[1] * r.x[1], r.objective);
        } else {
            EXPECT_EQ(r.status, Status::Infeasible);
            EXPECT_FALSE(any);
        }
    }
}
