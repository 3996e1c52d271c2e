#include <catch2/catch_amalgamated.hpp>

#include <bit>

#include "cycdom/bounds.hpp"
#include "cycdom/solver.hpp"
#include "oracle.hpp"

using namespace cycdom;

namespace {

SolverBudget with_strategy(DpStrategy s) {
    SolverBudget b;
    b.strategy = s;
    return b;
}

}  // namespace

TEST_CASE("Cost is the min-plus semiring") {
    CHECK(Cost{3} + Cost{4} == Cost{7});
    CHECK((Cost{3} + Cost::infinite()).is_infinite());
    CHECK((Cost{0xFFFFFFF0u} + Cost{0x20}).is_infinite());
    CHECK(std::min(Cost{5}, Cost::infinite()) == Cost{5});
    CHECK(Cost{} == Cost::infinite());
}

TEST_CASE("transfer matrix examples") {
    const TransferMatrix t2 = build_transfer_matrix(2);
    CHECK(t2.at(0b00, 0b11) == Cost{2});
    CHECK(t2.at(0b11, 0b00) == Cost{0});
    const TransferMatrix t3 = build_transfer_matrix(3);
    CHECK(t3.at(0b000, 0b001).is_infinite());
    CHECK_THROWS_AS(build_transfer_matrix(15), budget_error);
    SolverBudget small;
    small.max_profile_bits = 3;
    CHECK_THROWS_AS(build_transfer_matrix(4, small), budget_error);
}

TEST_CASE("transfer matrix invariants") {
    for (int m = 2; m <= 8; ++m) {
        const TransferMatrix t = build_transfer_matrix(m);
        const std::size_t full = t.dim() - 1;
        for (std::size_t q = 0; q < t.dim(); ++q) {
            CHECK(t.at(full, q) == Cost{static_cast<std::uint32_t>(std::popcount(q))});
            for (std::size_t p = 0; p < t.dim(); ++p) {
                // Valid iff every vertex of Q's column is covered by Q, rot(Q) or P.
                const auto cur = ColumnMask::from_bits(m, q);
                const auto prev = ColumnMask::from_bits(m, p);
                const bool valid = undominated_in_column(cur, prev).empty();
                REQUIRE(t.at(p, q).is_infinite() == !valid);
                // Monotone: supersets of a valid predecessor stay valid.
                if (valid)
                    for (int b = 0; b < m; ++b) REQUIRE_FALSE(t.at(p | (std::size_t{1} << b), q).is_infinite());
            }
        }
    }
}

TEST_CASE("squaring matches direct two-step enumeration") {
    for (int m = 2; m <= 4; ++m) {
        const TransferMatrix t = build_transfer_matrix(m);
        const TransferMatrix sq = min_plus_product(t, t, 1);
        for (std::size_t p = 0; p < t.dim(); ++p)
            for (std::size_t r = 0; r < t.dim(); ++r) {
                Cost best = Cost::infinite();
                for (std::size_t q = 0; q < t.dim(); ++q) best = std::min(best, t.at(p, q) + t.at(q, r));
                CHECK(sq.at(p, r) == best);
            }
        CHECK(min_plus_power(t, 2, 1) == sq);
        CHECK(min_plus_power(t, 1, 1) == t);
        CHECK(min_plus_power(t, 0, 1) == TransferMatrix::identity(m));
        CHECK(min_plus_power(t, 5, 1) == min_plus_product(min_plus_product(sq, sq, 1), t, 1));
    }
}

TEST_CASE("gamma_bruteforce examples") {
    auto r = gamma_bruteforce(CycleProduct(2, 2));
    CHECK(r.gamma == 2);
    CHECK(r.witness.size() == 2);
    CHECK(is_dominating(r.witness));
    CandidateSet diag(CycleProduct(2, 2));
    diag.insert({0, 0});
    diag.insert({1, 1});
    CHECK(is_dominating(diag));

    r = gamma_bruteforce(CycleProduct(3, 3));
    CHECK(r.gamma == 3);
    CHECK(is_dominating(r.witness));

    CHECK(gamma_bruteforce(CycleProduct(2, 3)).gamma == 3);
    CHECK_THROWS_AS(gamma_bruteforce(CycleProduct(5, 5)), budget_error);
}

TEST_CASE("gamma_bruteforce matches the definition-level scan") {
    for (int m = 2; m <= 8; ++m)
        for (int n = 2; m * n <= 16; ++n) {
            const CycleProduct inst(m, n);
            INFO("m=" << m << " n=" << n);
            CHECK(gamma_bruteforce(inst).gamma == oracle::gamma_by_definition(inst));
        }
}

TEST_CASE("gamma_dp examples") {
    for (auto s : {DpStrategy::automatic, DpStrategy::power, DpStrategy::forward}) {
        const SolverBudget b = with_strategy(s);
        CHECK(gamma_dp(CycleProduct(4, 4), b) == 7);
        CHECK(gamma_dp(CycleProduct(9, 4), b) == 14);
        CHECK(gamma_dp(CycleProduct(2, 2), b) == 2);
        CHECK(gamma_dp(CycleProduct(5, 6), b) == 12);
    }
}

TEST_CASE("gamma_dp equals brute force for every mn <= 16 and sampled mn <= 20") {
    for (int m = 2; m <= 10; ++m)
        for (int n = 2; m * n <= 20; ++n) {
            const CycleProduct inst(m, n);
            INFO("m=" << m << " n=" << n);
            const long long bf = gamma_bruteforce(inst).gamma;
            CHECK(gamma_dp(inst, with_strategy(DpStrategy::power)) == bf);
            CHECK(gamma_dp(inst, with_strategy(DpStrategy::forward)) == bf);
        }
}

TEST_CASE("strategies, orientation and thread count do not change gamma_dp") {
    for (int m = 2; m <= 9; ++m)
        for (int n = 2; n <= 12; ++n) {
            const CycleProduct inst(m, n);
            INFO("m=" << m << " n=" << n);
            SolverBudget one = with_strategy(DpStrategy::forward);
            one.threads = 1;
            SolverBudget four = with_strategy(DpStrategy::forward);
            four.threads = 4;
            const long long g = gamma_dp(inst, one);
            CHECK(gamma_dp(inst, four) == g);
            CHECK(gamma_dp(inst.transposed(), one) == g);
            if (std::min(m, n) <= 7) CHECK(gamma_dp(inst, with_strategy(DpStrategy::power)) == g);
            CHECK(lower_bound(inst) <= g);
            CHECK(g <= generic_upper_bound(inst));
            if (auto k = known_gamma(inst)) CHECK(k->value == g);
        }
}

TEST_CASE("witness_dp examples") {
    const CandidateSet w33 = witness_dp(CycleProduct(3, 3));
    CHECK(w33.size() == 3);
    CHECK(is_dominating(w33));
    CHECK(oracle::dominates_by_definition(w33.instance(), w33.vertices()));

    const CandidateSet w44 = witness_dp(CycleProduct(4, 4));
    CHECK(w44.size() == 7);
    CHECK(is_dominating(w44));

    const CandidateSet w53 = witness_dp(CycleProduct(5, 3));
    CHECK(w53.instance() == CycleProduct(5, 3));
    CHECK(w53.size() == 6);
    CHECK(is_dominating(w53));
}

TEST_CASE("witness_dp is an optimal dominating set") {
    for (int m = 2; m <= 9; ++m)
        for (int n = 2; n <= 11; ++n) {
            const CycleProduct inst(m, n);
            INFO("m=" << m << " n=" << n);
            const CandidateSet w = witness_dp(inst);
            CHECK(w.instance() == inst);
            CHECK(is_dominating(w));
            CHECK(w.size() == gamma_dp(inst));
            CHECK(check_column_inequality(m, column_counts(w)));
        }
}

TEST_CASE("budgets are enforced") {
    SolverBudget b;
    b.max_profile_bits = 3;
    CHECK_THROWS_AS(gamma_dp(CycleProduct(11, 4), b), budget_error);
    b.max_profile_bits = 4;
    CHECK(gamma_dp(CycleProduct(11, 4), b) == 17);

    SolverBudget rushed;
    rushed.time_limit = std::chrono::duration<double>(0);
    CHECK_THROWS_AS(gamma_dp(CycleProduct(14, 14), rushed), budget_error);

    SolverBudget broken;
    broken.max_profile_bits = 0;
    CHECK_THROWS_AS(gamma_dp(CycleProduct(4, 4), broken), input_error);
}

TEST_CASE("large profile dimensions use the forward walk") {
    const CycleProduct inst(14, 12);
    const long long g = gamma_dp(inst);
    CHECK(g == known_gamma(inst)->value);
    const CandidateSet w = witness_dp(inst);
    CHECK(w.size() == g);
    CHECK(is_dominating(w));
}
