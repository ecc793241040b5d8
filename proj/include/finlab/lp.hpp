#pragma once

#include <cstddef>
#include <vector>

#include "finlab/scalar.hpp"

namespace finlab::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Maximize };
enum class Status { Optimal, Infeasible, Unbounded };

const char* to_string(Status status);

struct Result {
    Status status = Status::Infeasible;
    Rational objective;
    std::vector<Rational> x;  ///< original variables; empty unless Optimal
};

/// Dense exact linear program over the rationals. Variables are nonnegative
/// unless marked free. Solved by two-phase tableau simplex with Bland's rule,
/// so it terminates on degenerate problems and never rounds.
class LinearProgram {
public:
    explicit LinearProgram(std::size_t num_vars);

    std::size_t num_vars() const { return num_vars_; }

    void set_free(std::size_t var);
    void set_objective(std::vector<Rational> coeffs, Sense sense);
    void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs);

    Result solve() const;

private:
    struct Row {
        std::vector<Rational> coeffs;
        Relation rel;
        Rational rhs;
    };

    std::size_t num_vars_;
    std::vector<bool> free_;
    std::vector<Rational> objective_;
    Sense sense_ = Sense::Minimize;
    std::vector<Row> rows_;
};

}  // namespace finlab::lp
