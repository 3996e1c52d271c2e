#pragma once

// Closed-form bounds and known values for gamma(C_m x C_n), plus the
// residue-class taxonomy of which instances have a known formula.

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cycdom/core.hpp"

namespace cycdom {

// Provenance of a value; the strings are stable (CSV output).
enum class Method {
    theorem1,
    theorem2_case_i,
    theorem2_case_ii,
    theorem2_case_iii,
    theorem2_case_iv,
    theorem2_case_v,
    theorem4_c4,
    trivial_third,
    generic_upper,
    exact_dp,
    exact_bruteforce,
    strict_lb_case_iii,
};

inline constexpr std::array<std::pair<Method, std::string_view>, 12> method_names{{
    {Method::theorem1, "theorem1"},
    {Method::theorem2_case_i, "theorem2-case-i"},
    {Method::theorem2_case_ii, "theorem2-case-ii"},
    {Method::theorem2_case_iii, "theorem2-case-iii"},
    {Method::theorem2_case_iv, "theorem2-case-iv"},
    {Method::theorem2_case_v, "theorem2-case-v"},
    {Method::theorem4_c4, "theorem4-c4"},
    {Method::trivial_third, "trivial-third"},
    {Method::generic_upper, "generic-upper"},
    {Method::exact_dp, "exact-dp"},
    {Method::exact_bruteforce, "exact-bruteforce"},
    {Method::strict_lb_case_iii, "strict-lb-case-iii"},
}};

inline std::string_view to_string(Method m) {
    for (const auto& [value, name] : method_names)
        if (value == m) return name;
    throw std::logic_error("unnamed Method");
}

inline std::optional<Method> parse_method(std::string_view s) {
    for (const auto& [value, name] : method_names)
        if (name == s) return value;
    return std::nullopt;
}

enum class Subcase { solved, open_a, open_b, open_c, open_d_i, open_d_ii };

inline std::string_view to_string(Subcase s) {
    switch (s) {
    case Subcase::solved: return "solved";
    case Subcase::open_a: return "open-a";
    case Subcase::open_b: return "open-b";
    case Subcase::open_c: return "open-c";
    case Subcase::open_d_i: return "open-d-i";
    case Subcase::open_d_ii: return "open-d-ii";
    }
    throw std::logic_error("unnamed Subcase");
}

struct CaseTag {
    int m_residue;
    int n_residue;
    Subcase subcase;

    friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

struct ColumnInequalityReport {
    bool holds = true;
    std::optional<int> violating_index;

    explicit operator bool() const { return holds; }
};

// Every dominating set has |W cap C^{i-1}| + 2|W cap C^i| >= m for all i,
// because column i is only reached from columns i and i-1.
inline ColumnInequalityReport check_column_inequality(int m, std::span<const int> counts) {
    if (counts.empty()) throw input_error("column counts must be non-empty");
    for (int a : counts)
        if (a < 0 || a > m)
            throw input_error("column count " + std::to_string(a) + " outside [0, " +
                              std::to_string(m) + "]");
    const auto n = counts.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (counts[(i + n - 1) % n] + 2 * counts[i] < m)
            return {false, static_cast<int>(i)};
    }
    return {true, std::nullopt};
}

namespace detail {

constexpr long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// m = 3*k1 + 2 and n = 3*k2 + 1 with 2*k2 < k1: no A-set meets n*(k1+1).
constexpr bool is_strict_case(int m, int n) {
    return m % 3 == 2 && n % 3 == 1 && 2 * (n / 3) < m / 3;
}

}  // namespace detail

// Lower bound from the first coordinate's residue alone (one orientation).
// For m = 1 (mod 3) the half-integral bound n*k1 + n/2 is rounded up.
inline long long theorem1_bound(const CycleProduct& inst) {
    const long long n = inst.n();
    const long long k1 = inst.k1();
    switch (inst.m() % 3) {
    case 0: return n * k1;
    case 1: return n * k1 + detail::ceil_div(n, 2);
    default: return n * (k1 + 1);
    }
}

struct BoundWithSource {
    long long value;
    Method source;
};

// max(Theorem 1 in both orientations, ceil(mn/3)), tagged with its source.
inline BoundWithSource lower_bound_with_source(const CycleProduct& inst) {
    const long long direct = theorem1_bound(inst);
    const long long swapped = theorem1_bound(inst.transposed());
    const long long third = detail::ceil_div(inst.vertex_count(), 3);
    const long long t1 = std::max(direct, swapped);
    if (third > t1) return {third, Method::trivial_third};
    if (detail::is_strict_case(inst.m(), inst.n()) || detail::is_strict_case(inst.n(), inst.m()))
        return {t1, Method::strict_lb_case_iii};
    return {t1, Method::theorem1};
}

inline long long lower_bound(const CycleProduct& inst) { return lower_bound_with_source(inst).value; }

// Smallest of three explicit dominating sets:
//   every row dominated along C_n by the even positions: m * ceil(n/2),
//   every column dominated along C_m by the even positions: n * ceil(m/2),
//   {(k,i) : k + 2i = 0 mod 3} when 3 | m and 3 | n: mn/3.
inline long long generic_upper_bound(const CycleProduct& inst) {
    const long long m = inst.m();
    const long long n = inst.n();
    long long best = std::min(m * detail::ceil_div(n, 2), n * detail::ceil_div(m, 2));
    if (m % 3 == 0 && n % 3 == 0) best = std::min(best, m * n / 3);
    return best;
}

// The set whose size generic_upper_bound reports.
inline CandidateSet generic_upper_set(const CycleProduct& inst) {
    const int m = inst.m();
    const int n = inst.n();
    const long long target = generic_upper_bound(inst);
    CandidateSet w(inst);
    if (m % 3 == 0 && n % 3 == 0 && static_cast<long long>(m) * n / 3 == target) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m; ++k)
                if ((k + 2 * i) % 3 == 0) w.insert({k, i});
    } else if (static_cast<long long>(m) * detail::ceil_div(n, 2) == target) {
        for (int i = 0; i < n; i += 2) w.column(i) = ColumnMask::full(m);
    } else {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m; k += 2) w.insert({k, i});
    }
    return w;
}

struct KnownGamma {
    long long value;
    Method method;

    friend bool operator==(const KnownGamma&, const KnownGamma&) = default;
};

namespace detail {

// m = 2 (mod 3), orientation as given; nothing for the strict case.
inline std::optional<KnownGamma> two_mod_three_formula(int m, int n) {
    if (m % 3 != 2) return std::nullopt;
    const long long k1 = m / 3;
    const long long k2 = n / 3;
    switch (n % 3) {
    case 0: return KnownGamma{n * (k1 + 1), Method::theorem2_case_i};
    case 1:
        if (2 * k2 >= k1) return KnownGamma{n * (k1 + 1), Method::theorem2_case_ii};
        return std::nullopt;
    default:
        if (n >= m) return KnownGamma{n * (k1 + 1), Method::theorem2_case_iv};
        return KnownGamma{m * (k2 + 1), Method::theorem2_case_v};
    }
}

}  // namespace detail

// gamma(C_4 x C_n): 3n/2 when 8 | n, otherwise n + ceil((n+1)/2).
inline long long c4_gamma(int n) {
    const long long nn = n;
    if (n % 8 == 0) return 3 * nn / 2;
    return nn + detail::ceil_div(nn + 1, 2);
}

namespace detail {

inline std::optional<KnownGamma> c4_formula(int m, int n) {
    if (m != 4) return std::nullopt;
    return KnownGamma{c4_gamma(n), Method::theorem4_c4};
}

}  // namespace detail

// Exact gamma from the closed forms, if one covers the instance. All formulas
// that apply (in either orientation) must agree; the instance's own
// orientation is reported first, with the m = 2 (mod 3) family ahead of C_4.
// Strict-case instances (either orientation) are never reported, even if
// another dimension is 4.
inline std::optional<KnownGamma> known_gamma(const CycleProduct& inst) {
    const int m = inst.m();
    const int n = inst.n();
    if (detail::is_strict_case(m, n) || detail::is_strict_case(n, m)) return std::nullopt;

    const std::array<std::optional<KnownGamma>, 4> found{
        detail::two_mod_three_formula(m, n), detail::c4_formula(m, n),
        detail::two_mod_three_formula(n, m), detail::c4_formula(n, m)};

    std::optional<KnownGamma> first;
    for (const auto& f : found) {
        if (!f) continue;
        if (!first)
            first = f;
        else if (f->value != first->value)
            throw std::logic_error("closed forms disagree for m=" + std::to_string(m) +
                                   " n=" + std::to_string(n) + ": " + std::string(to_string(first->method)) +
                                   "=" + std::to_string(first->value) + " vs " +
                                   std::string(to_string(f->method)) + "=" + std::to_string(f->value));
    }
    return first;
}

inline CaseTag classify(const CycleProduct& inst) {
    const int m = inst.m();
    const int n = inst.n();
    CaseTag tag{m % 3, n % 3, Subcase::solved};
    if (detail::is_strict_case(m, n))
        tag.subcase = Subcase::open_d_i;
    else if (detail::is_strict_case(n, m))
        tag.subcase = Subcase::open_d_ii;
    else if (tag.m_residue == 2 || tag.n_residue == 2 || m == 4 || n == 4)
        tag.subcase = Subcase::solved;
    else if (tag.m_residue == 0 && tag.n_residue == 1)
        tag.subcase = Subcase::open_a;
    else if (tag.m_residue == 1 && tag.n_residue == 0)
        tag.subcase = Subcase::open_b;
    else if (tag.m_residue == 1 && tag.n_residue == 1)
        tag.subcase = Subcase::open_c;
    return tag;
}

}  // namespace cycdom
