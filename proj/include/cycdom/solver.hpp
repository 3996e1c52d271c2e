#pragma once

// Exact domination numbers.
//
// A dominating set is a closed walk of column profiles P_0 -> P_1 -> ... ->
// P_{n-1} -> P_0 in which every step P -> Q leaves no vertex of Q's column
// undominated: complement(Q | rot(Q)) must lie inside P. Entering Q costs
// |Q|, so gamma is the cheapest closed walk of length n, i.e. the smallest
// diagonal entry of the n-th min-plus power of the transfer matrix.
//
// Two evaluation strategies give identical results:
//   power   - dense 2^d x 2^d matrix, square-and-multiply over n;
//   forward - one vector per start profile, each step a superset-min
//             transform (O(d 2^d)); starts are limited to rotation-canonical
//             profiles of minimum column weight.
// The profile dimension d is min(m, n); the product is transposed when needed.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycdom/core.hpp"
#include "cycdom/detail/parallel.hpp"

namespace cycdom {

class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class DpStrategy { automatic, power, forward };

struct SolverBudget {
    int max_profile_bits = 14;
    int max_bruteforce_cells = 20;
    std::optional<std::chrono::duration<double>> time_limit;
    unsigned threads = 0;  // 0: hardware concurrency
    DpStrategy strategy = DpStrategy::automatic;
};

// Element of the min-plus semiring: "addition" is min, "multiplication" is
// saturating +, and the default value is the additive identity (infinity).
class Cost {
public:
    constexpr Cost() = default;
    constexpr explicit Cost(std::uint32_t v) : v_(v) {}

    static constexpr Cost infinite() { return Cost{}; }
    static constexpr Cost zero() { return Cost{0}; }

    constexpr bool is_infinite() const { return v_ == inf_; }
    constexpr std::uint32_t value() const { return v_; }

    friend constexpr Cost operator+(Cost a, Cost b) {
        if (a.is_infinite() || b.is_infinite() || a.v_ >= inf_ - b.v_) return {};
        return Cost{a.v_ + b.v_};
    }

    friend constexpr auto operator<=>(Cost, Cost) = default;

private:
    static constexpr std::uint32_t inf_ = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t v_ = inf_;
};

inline constexpr int max_dense_profile_bits = 12;
inline constexpr int max_profile_bits_limit = 24;

class TransferMatrix {
public:
    TransferMatrix(int bits, Cost fill)
        : bits_(bits), dim_(std::size_t{1} << bits), entries_(dim_ * dim_, fill) {}

    int bits() const { return bits_; }
    std::size_t dim() const { return dim_; }

    Cost& at(std::size_t p, std::size_t q) { return entries_[p * dim_ + q]; }
    Cost at(std::size_t p, std::size_t q) const { return entries_[p * dim_ + q]; }

    const Cost* row(std::size_t p) const { return entries_.data() + p * dim_; }
    Cost* row(std::size_t p) { return entries_.data() + p * dim_; }

    static TransferMatrix identity(int bits) {
        TransferMatrix id(bits, Cost::infinite());
        for (std::size_t p = 0; p < id.dim_; ++p) id.at(p, p) = Cost::zero();
        return id;
    }

    friend bool operator==(const TransferMatrix&, const TransferMatrix&) = default;

private:
    int bits_;
    std::size_t dim_;
    std::vector<Cost> entries_;
};

namespace detail {

class Deadline {
public:
    explicit Deadline(const SolverBudget& b) {
        if (b.time_limit)
            at_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(*b.time_limit);
    }

    void check() const {
        if (at_ && std::chrono::steady_clock::now() > *at_)
            throw budget_error("solver time limit exceeded");
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

inline std::uint32_t rotate_bits(std::uint32_t q, int bits) {
    const std::uint32_t full = (std::uint32_t{1} << bits) - 1;
    return ((q << 1) | (q >> (bits - 1))) & full;
}

// Vertices of column Q's column that Q itself leaves undominated; the
// previous profile must contain all of them.
inline std::uint32_t needed_from_previous(std::uint32_t q, int bits) {
    const std::uint32_t full = (std::uint32_t{1} << bits) - 1;
    return ~(q | rotate_bits(q, bits)) & full;
}

inline void check_profile_bits(int bits, const SolverBudget& budget) {
    if (budget.max_profile_bits < 1 || budget.max_profile_bits > max_profile_bits_limit)
        throw input_error("max_profile_bits must be in [1, " + std::to_string(max_profile_bits_limit) + "]");
    if (bits > budget.max_profile_bits)
        throw budget_error("profile dimension " + std::to_string(bits) + " exceeds budget of " +
                           std::to_string(budget.max_profile_bits) + " bits");
}

}  // namespace detail

inline TransferMatrix build_transfer_matrix(int m, const SolverBudget& budget = {}) {
    if (m < 2) throw input_error("transfer matrix needs m >= 2");
    detail::check_profile_bits(m, budget);
    if (m > max_dense_profile_bits)
        throw budget_error("dense transfer matrix limited to " + std::to_string(max_dense_profile_bits) +
                           " profile bits");
    TransferMatrix t(m, Cost::infinite());
    const std::size_t dim = t.dim();
    for (std::size_t q = 0; q < dim; ++q) {
        const auto need = detail::needed_from_previous(static_cast<std::uint32_t>(q), m);
        const Cost enter{static_cast<std::uint32_t>(std::popcount(q))};
        for (std::size_t p = 0; p < dim; ++p)
            if ((need & ~p) == 0) t.at(p, q) = enter;
    }
    return t;
}

// C[p][r] = min_q A[p][q] + B[q][r]; rows are computed independently.
inline TransferMatrix min_plus_product(const TransferMatrix& a, const TransferMatrix& b, unsigned threads = 0,
                                       const detail::Deadline* deadline = nullptr) {
    if (a.bits() != b.bits()) throw input_error("min-plus product of mismatched matrices");
    TransferMatrix c(a.bits(), Cost::infinite());
    const std::size_t dim = a.dim();
    detail::parallel_for(dim, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            if (deadline) deadline->check();
            Cost* out = c.row(p);
            const Cost* arow = a.row(p);
            for (std::size_t q = 0; q < dim; ++q) {
                const Cost head = arow[q];
                if (head.is_infinite()) continue;
                const Cost* brow = b.row(q);
                for (std::size_t r = 0; r < dim; ++r) out[r] = std::min(out[r], head + brow[r]);
            }
        }
    });
    return c;
}

inline TransferMatrix min_plus_power(const TransferMatrix& base, long long exponent, unsigned threads = 0,
                                     const detail::Deadline* deadline = nullptr) {
    if (exponent < 0) throw input_error("negative matrix exponent");
    TransferMatrix result = TransferMatrix::identity(base.bits());
    TransferMatrix square = base;
    bool first = true;
    while (exponent > 0) {
        if (exponent & 1) {
            result = first ? square : min_plus_product(result, square, threads, deadline);
            first = false;
        }
        exponent >>= 1;
        if (exponent > 0) square = min_plus_product(square, square, threads, deadline);
    }
    return result;
}

struct BruteForceResult {
    long long gamma;
    CandidateSet witness;
};

// Definition-level oracle: subsets by increasing size, first dominating one
// wins. Cell c is vertex (c mod m, c div m).
inline BruteForceResult gamma_bruteforce(const CycleProduct& inst, const SolverBudget& budget = {}) {
    const long long cells = inst.vertex_count();
    if (cells > budget.max_bruteforce_cells || cells > 63)
        throw budget_error("brute force limited to " + std::to_string(std::min(budget.max_bruteforce_cells, 63)) +
                           " cells, instance has " + std::to_string(cells));
    const detail::Deadline deadline(budget);
    const int m = inst.m();
    const int n = inst.n();
    const std::uint64_t column_bits = (std::uint64_t{1} << m) - 1;
    const std::uint64_t all = cells == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;

    CandidateSet w(inst);
    auto load = [&](std::uint64_t subset) {
        for (int i = 0; i < n; ++i) w.column(i) = ColumnMask::from_bits(m, (subset >> (i * m)) & column_bits);
    };

    for (long long size = 0; size <= cells; ++size) {
        deadline.check();
        if (size == 0) {
            load(0);
            if (is_dominating(w)) return {0, w};
            continue;
        }
        // Gosper's hack over all subsets with `size` bits.
        std::uint64_t subset = (std::uint64_t{1} << size) - 1;
        for (std::uint64_t steps = 0;; ++steps) {
            if ((steps & 0xFFFF) == 0xFFFF) deadline.check();
            load(subset);
            if (is_dominating(w)) return {size, w};
            const std::uint64_t low = subset & (~subset + 1);
            const std::uint64_t ripple = subset + low;
            if (ripple == 0 || (ripple & ~all) != 0) break;
            subset = ripple | (((subset ^ ripple) >> 2) / low);
            if (subset & ~all) break;
        }
    }
    throw std::logic_error("no dominating set found; the full vertex set always dominates");
}

namespace detail {

// Closed walks of a fixed length over profiles of `bits` bits, evaluated
// one start profile at a time.
class ProfileWalk {
public:
    ProfileWalk(int bits, long long length) : bits_(bits), length_(length), dim_(std::size_t{1} << bits) {
        need_.resize(dim_);
        weight_.resize(dim_);
        for (std::size_t q = 0; q < dim_; ++q) {
            need_[q] = needed_from_previous(static_cast<std::uint32_t>(q), bits);
            weight_[q] = static_cast<std::uint32_t>(std::popcount(q));
        }
        for (std::size_t s = 0; s < dim_; ++s)
            if (is_rotation_canonical(static_cast<std::uint32_t>(s))) starts_.push_back(static_cast<std::uint32_t>(s));
        std::stable_sort(starts_.begin(), starts_.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return weight_[a] < weight_[b]; });
    }

    const std::vector<std::uint32_t>& canonical_starts() const { return starts_; }
    std::uint32_t weight(std::uint32_t s) const { return weight_[s]; }

    // Cheapest closed walk with P_0 = start. With min_weight set, every
    // column must hold at least that many vertices. When parents is given it
    // receives, for each step t >= 1, the best predecessor of each profile,
    // and the closing profile P_{n-1} is written to *last.
    Cost closed_walk(std::uint32_t start, std::uint32_t min_weight, const Deadline& deadline,
                     std::vector<std::vector<std::uint32_t>>* parents = nullptr,
                     std::uint32_t* last = nullptr) const {
        std::vector<Cost> cur(dim_), best(dim_);
        std::vector<std::uint32_t> arg(parents ? dim_ : 0);
        cur[start] = Cost{weight_[start]};
        if (parents) parents->assign(static_cast<std::size_t>(length_), {});

        for (long long t = 1; t < length_; ++t) {
            deadline.check();
            superset_min(cur, best, parents ? &arg : nullptr);
            for (std::size_t q = 0; q < dim_; ++q) {
                cur[q] = weight_[q] < min_weight ? Cost::infinite() : Cost{weight_[q]} + best[need_[q]];
            }
            if (parents) {
                auto& link = (*parents)[static_cast<std::size_t>(t)];
                link.resize(dim_);
                for (std::size_t q = 0; q < dim_; ++q) link[q] = arg[need_[q]];
            }
        }
        superset_min(cur, best, parents ? &arg : nullptr);
        if (last) *last = parents ? arg[need_[start]] : 0;
        return best[need_[start]];
    }

private:
    bool is_rotation_canonical(std::uint32_t s) const {
        std::uint32_t r = s;
        for (int k = 1; k < bits_; ++k) {
            r = rotate_bits(r, bits_);
            if (r < s) return false;
        }
        return true;
    }

    // out[p] = min over supersets r of p of in[r]; arg[p] = a minimising r.
    void superset_min(const std::vector<Cost>& in, std::vector<Cost>& out,
                      std::vector<std::uint32_t>* arg) const {
        out = in;
        if (arg)
            for (std::size_t p = 0; p < dim_; ++p) (*arg)[p] = static_cast<std::uint32_t>(p);
        for (int b = 0; b < bits_; ++b) {
            const std::size_t bit = std::size_t{1} << b;
            for (std::size_t p = 0; p < dim_; ++p) {
                if (p & bit) continue;
                if (out[p | bit] < out[p]) {
                    out[p] = out[p | bit];
                    if (arg) (*arg)[p] = (*arg)[p | bit];
                }
            }
        }
    }

    int bits_;
    long long length_;
    std::size_t dim_;
    std::vector<std::uint32_t> need_;
    std::vector<std::uint32_t> weight_;
    std::vector<std::uint32_t> starts_;
};

// Instance oriented so that the first cycle is the shorter one.
struct OrientedInstance {
    CycleProduct oriented;
    bool transposed;
};

inline OrientedInstance orient(const CycleProduct& inst) {
    if (inst.m() <= inst.n()) return {inst, false};
    return {inst.transposed(), true};
}

inline DpStrategy choose_strategy(int bits, long long length, const SolverBudget& budget) {
    if (budget.strategy != DpStrategy::automatic) return budget.strategy;
    if (bits > max_dense_profile_bits) return DpStrategy::forward;
    const double dim = static_cast<double>(std::size_t{1} << bits);
    const double squarings = 2.0 * std::ceil(std::log2(static_cast<double>(length) + 1.0));
    const double dense = dim * dim * dim * squarings;
    const double forward = (dim / bits + 1.0) * static_cast<double>(length) * bits * dim;
    return dense < forward ? DpStrategy::power : DpStrategy::forward;
}

inline long long gamma_forward(const ProfileWalk& walk, long long length, const SolverBudget& budget,
                               const Deadline& deadline) {
    const auto& starts = walk.canonical_starts();
    std::atomic<std::uint32_t> best{std::numeric_limits<std::uint32_t>::max()};
    parallel_for(starts.size(), budget.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const std::uint32_t s = starts[idx];
            // Every column weighs at least |start|, so the walk costs at least length*|start|.
            if (static_cast<long long>(walk.weight(s)) * length >= best.load()) continue;
            const Cost c = walk.closed_walk(s, walk.weight(s), deadline);
            if (c.is_infinite()) continue;
            std::uint32_t seen = best.load();
            while (c.value() < seen && !best.compare_exchange_weak(seen, c.value())) {
            }
        }
    });
    if (best.load() == std::numeric_limits<std::uint32_t>::max())
        throw std::logic_error("no closed profile walk found");
    return best.load();
}

inline long long gamma_power(int bits, long long length, const SolverBudget& budget, const Deadline& deadline) {
    const TransferMatrix step = build_transfer_matrix(bits, budget);
    const TransferMatrix walk = min_plus_power(step, length, budget.threads, &deadline);
    Cost best = Cost::infinite();
    for (std::size_t s = 0; s < walk.dim(); ++s) best = std::min(best, walk.at(s, s));
    if (best.is_infinite()) throw std::logic_error("no closed profile walk found");
    return best.value();
}

}  // namespace detail

inline long long gamma_dp(const CycleProduct& inst, const SolverBudget& budget = {}) {
    const auto [oriented, swapped] = detail::orient(inst);
    const int bits = oriented.m();
    const long long length = oriented.n();
    detail::check_profile_bits(bits, budget);
    const detail::Deadline deadline(budget);
    if (detail::choose_strategy(bits, length, budget) == DpStrategy::power)
        return detail::gamma_power(bits, length, budget, deadline);
    return detail::gamma_forward(detail::ProfileWalk(bits, length), length, budget, deadline);
}

// One optimal dominating set, reconstructed from a start profile that
// attains gamma_dp.
inline CandidateSet witness_dp(const CycleProduct& inst, const SolverBudget& budget = {}) {
    const auto [oriented, swapped] = detail::orient(inst);
    const int bits = oriented.m();
    const long long length = oriented.n();
    if (bits > ColumnMask::max_universe || (swapped && inst.m() > ColumnMask::max_universe))
        throw input_error("instance too large for an explicit vertex set");
    const long long gamma = gamma_dp(inst, budget);

    const detail::Deadline deadline(budget);
    const detail::ProfileWalk walk(bits, length);
    for (std::uint32_t s : walk.canonical_starts()) {
        if (static_cast<long long>(walk.weight(s)) * length > gamma) break;
        std::vector<std::vector<std::uint32_t>> parents;
        std::uint32_t last = 0;
        const Cost c = walk.closed_walk(s, walk.weight(s), deadline, &parents, &last);
        if (c.is_infinite() || c.value() != gamma) continue;

        CandidateSet w(oriented);
        std::uint32_t profile = last;
        for (long long t = length - 1; t >= 1; --t) {
            w.column(static_cast<int>(t)) = ColumnMask::from_bits(bits, profile);
            profile = parents[static_cast<std::size_t>(t)][profile];
        }
        w.column(0) = ColumnMask::from_bits(bits, s);
        if (profile != s) throw std::logic_error("profile walk traceback did not return to its start");
        return swapped ? transpose(w) : w;
    }
    throw std::logic_error("no start profile attains gamma_dp");
}

}  // namespace cycdom
