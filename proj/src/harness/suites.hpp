#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "harness/instance.hpp"

namespace finlab {

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
    Verdict verdict = Verdict::Pass;
    std::string note;
};

struct Suite {
    std::string id;
    std::string summary;
    std::function<RawInstance(std::uint64_t seed)> generate;
    std::function<Outcome(const Instance&)> check;
    std::string note;  ///< attached to every report of this suite
};

const std::vector<Suite>& suites();
/// Throws an unknown-suite error.
const Suite& find_suite(std::string_view id);

/// Runs the check, turning exceptions into failures.
Outcome evaluate_check(const Suite& suite, const Instance& instance);

struct Counterexample {
    RawInstance instance;
    std::string note;
    std::uint64_t trial_seed = 0;
};

struct SuiteReport {
    std::string suite_id;
    int trials = 0;
    int passed = 0;
    int skipped = 0;
    std::vector<Counterexample> failures;
    std::vector<std::string> notes;

    bool pass() const { return failures.empty(); }
};

SuiteReport run_suite(std::string_view id, int trials, std::uint64_t seed);

json to_json(const SuiteReport& report);

/// Deletes codomain points, then domain points, then basis vectors while the
/// check keeps failing.
RawInstance shrink(const RawInstance& failing, const Suite& suite, std::string* note = nullptr);

}  // namespace finlab
