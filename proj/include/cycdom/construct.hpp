#pragma once

// Minimum dominating sets of C_m x C_n for m = 3*k1 + 2.
//
// Every column is a cyclic translate A_i of the base pattern
// A = {0, 2, 5, ..., m-3}. Consecutive columns differ by a step of +1 or -2
// in the translate offset, and the last column steps back to the first the
// same way; such "A-sets" dominate and have n*(k1+1) vertices, which matches
// the lower bound for this residue class.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycdom/core.hpp"

namespace cycdom {

enum class Step : int { plus_one = 1, minus_two = -2 };

using StepWord = std::vector<Step>;

inline std::string to_string(Step s) { return s == Step::plus_one ? "+1" : "-2"; }

inline std::string to_string(const StepWord& word) {
    std::string out;
    for (std::size_t j = 0; j < word.size(); ++j) {
        if (j) out += ",";
        out += to_string(word[j]);
    }
    return out;
}

// Accepts "+1,-2,1" style lists (commas or spaces); "" is the empty word.
inline StepWord parse_step_word(const std::string& text) {
    StepWord word;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        if (token == "1" || token == "+1")
            word.push_back(Step::plus_one);
        else if (token == "-2")
            word.push_back(Step::minus_two);
        else
            throw input_error("bad step '" + token + "', expected +1 or -2");
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ')
            flush();
        else
            token += c;
    }
    flush();
    return word;
}

struct ABPair {
    int a = 0;  // number of +1 steps
    int b = 0;  // number of -2 steps

    friend bool operator==(const ABPair&, const ABPair&) = default;
};

// a + b = n - 1 and a - 2b = 2 or m - 1 (mod m).
inline bool satisfies_ab_system(const CycleProduct& inst, ABPair p) {
    if (p.a < 0 || p.b < 0 || p.a + p.b != inst.n() - 1) return false;
    const int m = inst.m();
    const int r = mod_floor(static_cast<long long>(p.a) - 2LL * p.b, m);
    return r == 2 % m || r == m - 1;
}

struct ASetDescriptor {
    CycleProduct instance;
    std::vector<int> offsets;  // offsets[j]: column j is A_{offsets[j]}
    StepWord word;             // word[j-1] = offsets[j] - offsets[j-1] (mod m)

    // The wrap from column n-1 back to column 0 is itself a +1 or -2 step.
    bool closure_holds() const {
        const int m = instance.m();
        const int last = offsets.back();
        return offsets.front() == mod_floor(last + 1, m) || offsets.front() == mod_floor(last - 2, m);
    }
};

struct Construction {
    CandidateSet set;
    ASetDescriptor descriptor;
};

namespace detail {

inline void require_two_mod_three(int m) {
    if (m < 2 || m % 3 != 2)
        throw input_error("A-set constructions need m = 2 (mod 3), got m=" + std::to_string(m));
}

}  // namespace detail

inline ColumnMask base_set(int m) {
    detail::require_two_mod_three(m);
    ColumnMask a(m, {0});
    for (int x = 2; x <= m - 3; x += 3) a.insert(x);
    return a;
}

inline ColumnMask translate(const ColumnMask& a, long long i) { return a.rotated(i); }

// Step counts from the case analysis for m = 3*k1 + 2; nullopt when the
// instance needs the transposed construction (n = 2 mod 3, n < m) or no
// A-set reaches the bound (n = 1 mod 3, 2*k2 < k1).
inline std::optional<ABPair> solve_ab(const CycleProduct& inst) {
    detail::require_two_mod_three(inst.m());
    const int k1 = inst.k1();
    const int k2 = inst.k2();
    std::optional<ABPair> p;
    switch (inst.n() % 3) {
    case 0:
        p = ABPair{2 * k2, k2 - 1};
        break;
    case 1:
        if (2 * k2 >= k1) p = ABPair{2 * k2 - k1, k2 + k1};
        break;
    default:
        if (k2 >= k1) p = ABPair{2 * k2 - 2 * k1, k2 + 2 * k1 + 1};
        break;
    }
    if (p && !satisfies_ab_system(inst, *p))
        throw std::logic_error("solve_ab produced an invalid pair for m=" + std::to_string(inst.m()) +
                               " n=" + std::to_string(inst.n()));
    return p;
}

// (+1)^a (-2)^b
inline StepWord canonical_word(ABPair p) {
    StepWord w(static_cast<std::size_t>(p.a), Step::plus_one);
    w.insert(w.end(), static_cast<std::size_t>(p.b), Step::minus_two);
    return w;
}

inline ABPair letter_counts(const StepWord& word) {
    ABPair p;
    for (Step s : word) (s == Step::plus_one ? p.a : p.b) += 1;
    return p;
}

inline Construction build_from_word(const CycleProduct& inst, const StepWord& word) {
    detail::require_two_mod_three(inst.m());
    if (word.size() != static_cast<std::size_t>(inst.n()) - 1)
        throw input_error("step word must have n-1=" + std::to_string(inst.n() - 1) +
                          " letters, got " + std::to_string(word.size()));

    const ColumnMask a = base_set(inst.m());
    ASetDescriptor d{inst, {0}, word};
    d.offsets.reserve(static_cast<std::size_t>(inst.n()));
    for (Step s : word)
        d.offsets.push_back(mod_floor(d.offsets.back() + static_cast<int>(s), inst.m()));

    std::vector<ColumnMask> columns;
    columns.reserve(d.offsets.size());
    for (int off : d.offsets) columns.push_back(translate(a, off));
    return {CandidateSet(inst, std::move(columns)), std::move(d)};
}

// Optimal set from the A-set construction, directly when m = 2 (mod 3) and
// the step system is solvable, otherwise built on the transposed instance and
// mapped back. nullopt when neither orientation applies or the instance does
// not fit in column masks.
inline std::optional<CandidateSet> minimum_dominating_set(const CycleProduct& inst) {
    auto verified = [](CandidateSet w) {
        if (!is_dominating(w))
            throw std::logic_error("A-set construction failed to dominate");
        return w;
    };

    if (inst.m() % 3 == 2 && inst.m() <= ColumnMask::max_universe) {
        if (auto p = solve_ab(inst)) return verified(build_from_word(inst, canonical_word(*p)).set);
    }
    const CycleProduct t = inst.transposed();
    if (t.m() % 3 == 2 && t.m() <= ColumnMask::max_universe && inst.m() <= ColumnMask::max_universe) {
        if (auto p = solve_ab(t)) return verified(transpose(build_from_word(t, canonical_word(*p)).set));
    }
    return std::nullopt;
}

}  // namespace cycdom
