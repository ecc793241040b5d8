#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "finlab/choquet.hpp"
#include "fixtures.hpp"
#include "harness/oracle.hpp"
#include "harness/suites.hpp"

using namespace finlab;

namespace {

struct Line {
    bool pass;
    std::string detail;
};

struct SuiteRun {
    std::string id;
    int trials;
    std::uint64_t seed;
};

Line suites_line(const std::vector<SuiteRun>& runs, double limit_seconds) {
    std::ostringstream os;
    bool pass = true;
    double total = 0;
    for (const auto& run : runs) {
        const auto start = std::chrono::steady_clock::now();
        const SuiteReport r = run_suite(run.id, run.trials, run.seed);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += secs;
        const bool ok = r.pass() && r.skipped == 0 && r.passed == run.trials;
        pass = pass && ok;
        os << run.id << " " << r.passed << "/" << run.trials << " passed, " << r.skipped << " skipped, "
           << r.failures.size() << " failed";
        if (!r.failures.empty()) os << " [" << r.failures[0].note << "]";
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.1f s); ", secs);
        os << buf;
    }
    if (limit_seconds > 0) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "total %.1f s, limit %.0f s", total, limit_seconds);
        os << buf;
        pass = pass && total < limit_seconds;
    }
    return {pass, os.str()};
}

PointSet oracle_m(const Subspace& a) {
    const auto verts = oracle::ball_vertices(a);
    PointSet out;
    for (std::size_t z = 0; z < a.num_points(); ++z)
        if (std::binary_search(verts.begin(), verts.end(), a.generator(z).coords)) out.push_back(z);
    return out;
}

Line worked_examples() {
    std::vector<std::string> failed;
    auto expect = [&](bool cond, const char* what) {
        if (!cond) failed.emplace_back(what);
    };
    auto a = fixtures::three_point();
    expect(m_set(LinearMap::identity(a)) == PointSet{0, 1}, "M of span{(1,1,1),(1,-1,0)} is {a,b}");
    expect(oracle_m(*a) == PointSet{0, 1}, "oracle M of span{(1,1,1),(1,-1,0)} is {a,b}");

    auto b = fixtures::affine_three_point();
    expect(m_set(LinearMap::identity(b)) == PointSet{0, 2}, "M of span{(1,1,1),(0,1/2,1)} is {a,c}");
    expect(oracle_m(*b) == PointSet{0, 2}, "oracle M of span{(1,1,1),(0,1/2,1)} is {a,c}");
    const FaceChoquet face = prop63_set(*b);
    expect(face.points == PointSet{0, 2} && face.matches_m_set, "face construction gives {a,c}");

    const LinearMap t = fixtures::averaging_map();
    expect(verify_into_isometry(t).isometry, "averaging map is an isometry");
    expect(m_set(t) == PointSet{0, 1}, "M_T is {x,y}");
    const CompositionForm form = decompose(t);
    expect(form.on() == PointSet{0, 1} && form.phi.at(0) == Scalar(1) && form.phi.at(1) == Scalar(-1) &&
               form.tau.at(0) == 0 && form.tau.at(1) == 1,
           "phi = (1,-1), tau = (a,b)");
    const auto verts = oracle::ball_vertices(t.domain());
    PointSet oracle_mt;
    for (std::size_t z = 0; z < 3; ++z)
        if (std::binary_search(verts.begin(), verts.end(), t.pulled_generator(z).coords)) oracle_mt.push_back(z);
    expect(oracle_mt == PointSet{0, 1}, "oracle M_T is {x,y}");
    const AlphaBeta ab = property_alpha_beta(t);
    expect(ab.beta_at == std::vector<Tristate>{Tristate::True, Tristate::True, Tristate::False}, "beta fails exactly at z");

    std::string detail = "three worked examples";
    for (const auto& f : failed) detail += "; failed: " + f;
    return {failed.empty(), detail};
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        std::function<Line()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "extreme test agrees with vertex enumeration", [] { return suites_line({{"EXT-ORACLE", 500, 1}}, 60); }},
        {2, "ball vertices are pulled generators", [] { return suites_line({{"T3.1", 200, 7}}, 0); }},
        {3, "centered families: extreme points by face enumeration", [] { return suites_line({{"L4.2", 200, 11}}, 0); }},
        {4, "pinned families give the pulled generator pair", [] { return suites_line({{"C4.1", 100, 13}}, 0); }},
        {5, "decompose round trip and impostor rejection", [] { return suites_line({{"T7.2", 300, 17}}, 120); }},
        {6, "composition and inverse laws", [] { return suites_line({{"C7.4", 100, 3}, {"C7.5", 100, 19}}, 0); }},
        {7, "worked examples", worked_examples},
        {8, "M(A) is a boundary", [] { return suites_line({{"R6.3", 500, 23}}, 0); }},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Line l;
        try {
            l = c.run();
        } catch (const std::exception& e) {
            l = {false, std::string("exception: ") + e.what()};
        }
        if (!l.pass) ++failures;
        std::printf("criterion %d %s: %s: %s\n", c.number, l.pass ? "PASS" : "FAIL", c.name, l.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
