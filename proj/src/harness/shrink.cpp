#include <algorithm>
#include <optional>

#include "harness/suites.hpp"

namespace finlab {

namespace {

bool still_fails(const RawInstance& candidate, const Suite& suite, std::string* note) {
    try {
        Instance inst(candidate);
        Outcome o = evaluate_check(suite, inst);
        if (o.verdict != Verdict::Fail) return false;
        if (note) *note = o.note;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void drop_row(Mat& m, std::size_t r) { m.erase(m.begin() + static_cast<std::ptrdiff_t>(r)); }

void drop_column(Mat& m, std::size_t c) {
    for (auto& row : m) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
}

/// Removes basis vector j of subspace s together with the matching row or
/// column of every map touching it.
void drop_basis_vector(RawInstance& raw, std::size_t s, std::size_t j) {
    const std::string& id = raw.subspaces[s].id;
    for (auto& m : raw.maps) {
        if (m.codomain == id) drop_row(m.matrix, j);
        if (m.domain == id) drop_column(m.matrix, j);
    }
    auto& basis = raw.subspaces[s].basis;
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
}

std::optional<RawInstance> without_point(const RawInstance& raw, std::size_t space, std::size_t z) {
    RawInstance out = raw;
    auto& sp = out.spaces[space];
    if (sp.points.size() <= 1) return std::nullopt;
    sp.points.erase(sp.points.begin() + static_cast<std::ptrdiff_t>(z));
    sp.weight.erase(sp.weight.begin() + static_cast<std::ptrdiff_t>(z));
    for (std::size_t s = 0; s < out.subspaces.size(); ++s) {
        if (out.subspaces[s].space != sp.id) continue;
        for (auto& b : out.subspaces[s].basis) b.erase(b.begin() + static_cast<std::ptrdiff_t>(z));
        for (std::size_t j = out.subspaces[s].basis.size(); j-- > 0;)
            if (linalg::is_zero(out.subspaces[s].basis[j])) drop_basis_vector(out, s, j);
        if (out.subspaces[s].basis.empty()) return std::nullopt;
    }
    return out;
}

std::optional<RawInstance> without_basis_vector(const RawInstance& raw, std::size_t s, std::size_t j) {
    if (raw.subspaces[s].basis.size() <= 1) return std::nullopt;
    RawInstance out = raw;
    drop_basis_vector(out, s, j);
    return out;
}

std::size_t space_index(const RawInstance& raw, const std::string& id) {
    for (std::size_t i = 0; i < raw.spaces.size(); ++i)
        if (raw.spaces[i].id == id) return i;
    return raw.spaces.size();
}

/// Spaces in shrinking order: codomains of maps first, then the rest.
std::vector<std::size_t> space_order(const RawInstance& raw) {
    std::vector<std::size_t> codomains, others;
    for (const auto& m : raw.maps) {
        for (const auto& sub : raw.subspaces) {
            if (sub.id != m.codomain) continue;
            const std::size_t i = space_index(raw, sub.space);
            if (i < raw.spaces.size() && std::find(codomains.begin(), codomains.end(), i) == codomains.end()) codomains.push_back(i);
        }
    }
    for (std::size_t i = 0; i < raw.spaces.size(); ++i)
        if (std::find(codomains.begin(), codomains.end(), i) == codomains.end()) others.push_back(i);
    codomains.insert(codomains.end(), others.begin(), others.end());
    return codomains;
}

}  // namespace

RawInstance shrink(const RawInstance& failing, const Suite& suite, std::string* note) {
    RawInstance current = failing;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t sp : space_order(current)) {
            for (std::size_t z = current.spaces[sp].points.size(); z-- > 0;) {
                auto candidate = without_point(current, sp, z);
                if (candidate && still_fails(*candidate, suite, note)) {
                    current = std::move(*candidate);
                    progress = true;
                }
            }
        }
        for (std::size_t s = 0; s < current.subspaces.size(); ++s) {
            for (std::size_t j = current.subspaces[s].basis.size(); j-- > 0;) {
                auto candidate = without_basis_vector(current, s, j);
                if (candidate && still_fails(*candidate, suite, note)) {
                    current = std::move(*candidate);
                    progress = true;
                }
            }
        }
    }
    return current;
}

}  // namespace finlab
