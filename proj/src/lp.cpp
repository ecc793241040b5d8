#include "finlab/lp.hpp"

#include <optional>

#include "finlab/errors.hpp"

namespace finlab::lp {

const char* to_string(Status status) {
    switch (status) {
        case Status::Optimal: return "optimal";
        case Status::Infeasible: return "infeasible";
        case Status::Unbounded: return "unbounded";
    }
    return "unknown";
}

LinearProgram::LinearProgram(std::size_t num_vars)
    : num_vars_(num_vars), free_(num_vars, false), objective_(num_vars) {}

void LinearProgram::set_free(std::size_t var) {
    if (var >= num_vars_) throw LabError(ErrorCode::InvalidArgument, "lp: variable out of range");
    free_[var] = true;
}

void LinearProgram::set_objective(std::vector<Rational> coeffs, Sense sense) {
    if (coeffs.size() != num_vars_) throw LabError(ErrorCode::DimensionMismatch, "lp: objective length");
    objective_ = std::move(coeffs);
    sense_ = sense;
}

void LinearProgram::add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    if (coeffs.size() != num_vars_) throw LabError(ErrorCode::DimensionMismatch, "lp: row length");
    rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : cells_(rows, std::vector<Rational>(cols + 1)), cost_(cols + 1), basis_(rows), cols_(cols) {}

    Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
    Rational& rhs(std::size_t r) { return cells_[r][cols_]; }
    std::vector<Rational>& cost() { return cost_; }
    std::size_t& basis(std::size_t r) { return basis_[r]; }
    std::size_t rows() const { return cells_.size(); }
    std::size_t cols() const { return cols_; }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / cells_[r][c];
        auto& prow = cells_[r];
        for (auto& x : prow)
            if (sgn(x) != 0) x *= inv;
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (i == r) continue;
            eliminate(cells_[i], prow, c);
        }
        eliminate(cost_, prow, c);
        basis_[r] = c;
    }

    void drop_row(std::size_t r) {
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    /// Minimizes the current cost row over columns allowed by `enterable`.
    /// Returns false when unbounded.
    template <class Pred>
    bool run(Pred enterable) {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (sgn(cost_[j]) < 0 && enterable(j)) {
                    enter = j;
                    break;
                }
            }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < cells_.size(); ++i) {
                const Rational& a = cells_[i][*enter];
                if (sgn(a) <= 0) continue;
                Rational ratio = cells_[i][cols_] / a;
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }

private:
    static void eliminate(std::vector<Rational>& row, const std::vector<Rational>& prow, std::size_t c) {
        if (sgn(row[c]) == 0) return;
        Rational f = row[c];
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (sgn(prow[k]) != 0) row[k] -= f * prow[k];
        }
    }

    std::vector<std::vector<Rational>> cells_;
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
    std::size_t cols_;
};

}  // namespace

Result LinearProgram::solve() const {
    // Column layout: structural columns (free variables split into +/-),
    // then one slack or surplus per inequality row, then artificials.
    std::vector<std::size_t> pos_col(num_vars_), neg_col(num_vars_, SIZE_MAX);
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < num_vars_; ++j) {
        pos_col[j] = ncols++;
        if (free_[j]) neg_col[j] = ncols++;
    }

    struct Normalized {
        std::vector<Rational> coeffs;
        Relation rel;
        Rational rhs;
    };
    std::vector<Normalized> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) {
        Normalized n{r.coeffs, r.rel, r.rhs};
        if (sgn(n.rhs) < 0) {
            for (auto& a : n.coeffs) a = -a;
            n.rhs = -n.rhs;
            if (n.rel == Relation::LessEqual) n.rel = Relation::GreaterEqual;
            else if (n.rel == Relation::GreaterEqual) n.rel = Relation::LessEqual;
        }
        rows.push_back(std::move(n));
    }

    const std::size_t m = rows.size();
    std::vector<std::optional<std::size_t>> slack(m), artificial(m);
    for (std::size_t i = 0; i < m; ++i)
        if (rows[i].rel != Relation::Equal) slack[i] = ncols++;
    const std::size_t first_artificial = ncols;
    for (std::size_t i = 0; i < m; ++i)
        if (rows[i].rel != Relation::LessEqual) artificial[i] = ncols++;

    Tableau t(m, ncols);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < num_vars_; ++j) {
            const Rational& a = rows[i].coeffs[j];
            if (sgn(a) == 0) continue;
            t.at(i, pos_col[j]) = a;
            if (free_[j]) t.at(i, neg_col[j]) = -a;
        }
        if (slack[i]) t.at(i, *slack[i]) = rows[i].rel == Relation::LessEqual ? 1 : -1;
        if (artificial[i]) {
            t.at(i, *artificial[i]) = 1;
            t.basis(i) = *artificial[i];
        } else {
            t.basis(i) = *slack[i];
        }
        t.rhs(i) = rows[i].rhs;
    }

    // Phase I: minimize the sum of artificials.
    if (first_artificial < ncols) {
        auto& cost = t.cost();
        for (std::size_t j = first_artificial; j < ncols; ++j) cost[j] = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (!artificial[i]) continue;
            for (std::size_t k = 0; k <= ncols; ++k) cost[k] -= t.at(i, k);
            cost[*artificial[i]] = 0;
        }
        // Artificial columns may re-enter during phase I; harmless.
        t.run([](std::size_t) { return true; });
        if (sgn(t.cost()[ncols]) != 0) return Result{Status::Infeasible, 0, {}};

        // Drive zero-valued artificials out of the basis.
        for (std::size_t i = 0; i < t.rows();) {
            if (t.basis(i) < first_artificial) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < first_artificial; ++j) {
                if (sgn(t.at(i, j)) != 0) {
                    col = j;
                    break;
                }
            }
            if (col) {
                t.pivot(i, *col);
                ++i;
            } else {
                t.drop_row(i);  // redundant equality
            }
        }
    }

    // Phase II cost row: minimize c (negated when maximizing).
    auto& cost = t.cost();
    std::fill(cost.begin(), cost.end(), Rational(0));
    for (std::size_t j = 0; j < num_vars_; ++j) {
        Rational c = sense_ == Sense::Maximize ? Rational(-objective_[j]) : objective_[j];
        cost[pos_col[j]] = c;
        if (free_[j]) cost[neg_col[j]] = -c;
    }
    for (std::size_t i = 0; i < t.rows(); ++i) {
        const Rational f = cost[t.basis(i)];
        if (sgn(f) == 0) continue;
        for (std::size_t k = 0; k <= ncols; ++k) {
            const Rational& a = t.at(i, k);
            if (sgn(a) != 0) cost[k] -= f * a;
        }
    }
    if (!t.run([&](std::size_t j) { return j < first_artificial; })) {
        return Result{Status::Unbounded, 0, {}};
    }

    std::vector<Rational> col_value(ncols);
    for (std::size_t i = 0; i < t.rows(); ++i) col_value[t.basis(i)] = t.rhs(i);
    Result res;
    res.status = Status::Optimal;
    res.x.resize(num_vars_);
    for (std::size_t j = 0; j < num_vars_; ++j) {
        res.x[j] = col_value[pos_col[j]];
        if (free_[j]) res.x[j] -= col_value[neg_col[j]];
    }
    Rational value = 0;
    for (std::size_t j = 0; j < num_vars_; ++j) value += objective_[j] * res.x[j];
    res.objective = value;
    return res;
}

}  // namespace finlab::lp
