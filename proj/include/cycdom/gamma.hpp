#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "cycdom/bounds.hpp"
#include "cycdom/construct.hpp"
#include "cycdom/core.hpp"
#include "cycdom/solver.hpp"

namespace cycdom {

struct GammaResult {
    long long lower = 0;
    long long upper = 0;
    std::optional<long long> exact;
    Method method = Method::theorem1;
    std::optional<CandidateSet> certificate;
};

// Throws std::logic_error when a result breaks lower <= exact <= upper or
// carries a certificate that does not dominate or has the wrong size.
inline void check_consistent(const GammaResult& r) {
    auto fail = [](const std::string& what) { throw std::logic_error("inconsistent gamma result: " + what); };
    if (r.lower > r.upper) fail("lower > upper");
    if (r.exact && (*r.exact < r.lower || *r.exact > r.upper)) fail("exact outside [lower, upper]");
    if (r.certificate) {
        if (!is_dominating(*r.certificate)) fail("certificate does not dominate");
        if (r.exact && r.certificate->size() != *r.exact) fail("certificate size differs from exact value");
    }
}

// Closed forms first, then the exact solvers within budget, then bounds.
// Budget exhaustion yields an interval, never an exception.
inline GammaResult gamma(const CycleProduct& inst, const SolverBudget& budget = {}) {
    const BoundWithSource lb = lower_bound_with_source(inst);
    const long long ub = generic_upper_bound(inst);

    auto exact_result = [&](long long value, Method method, std::optional<CandidateSet> cert) {
        GammaResult r{lb.value, std::min(ub, value), value, method, std::move(cert)};
        check_consistent(r);
        return r;
    };

    const bool representable =
        inst.m() <= ColumnMask::max_universe && inst.n() <= ColumnMask::max_universe;

    if (auto known = known_gamma(inst)) {
        auto cert = minimum_dominating_set(inst);
        // No construction (C_4 formula): borrow an optimal set from the solver if affordable.
        if (!cert && representable) {
            try {
                cert = inst.vertex_count() <= budget.max_bruteforce_cells ? gamma_bruteforce(inst, budget).witness
                                                                          : witness_dp(inst, budget);
            } catch (const budget_error&) {
            }
        }
        return exact_result(known->value, known->method, std::move(cert));
    }
    try {
        if (inst.vertex_count() <= budget.max_bruteforce_cells) {
            auto bf = gamma_bruteforce(inst, budget);
            return exact_result(bf.gamma, Method::exact_bruteforce, std::move(bf.witness));
        }
        if (representable) {
            CandidateSet w = witness_dp(inst, budget);
            const long long size = w.size();
            return exact_result(size, Method::exact_dp, std::move(w));
        }
        return exact_result(gamma_dp(inst, budget), Method::exact_dp, std::nullopt);
    } catch (const budget_error&) {
    }

    if (lb.value == ub) {
        std::optional<CandidateSet> cert;
        if (representable) cert = generic_upper_set(inst);
        return exact_result(ub, Method::generic_upper, std::move(cert));
    }
    GammaResult r{lb.value, ub, std::nullopt, lb.source, std::nullopt};
    check_consistent(r);
    return r;
}

}  // namespace cycdom
