#pragma once

// Cartesian products of two directed cycles, C_m x C_n.
//
// Vertex (k, i): k indexes the first cycle (0..m-1), i the second (0..n-1).
// Arcs go (k,i) -> (k+1,i) and (k,i) -> (k,i+1), indices taken cyclically.
// Column i is the copy {(k,i) : k} of C_m; a vertex set is stored column by
// column as bitmasks over the first coordinate.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycdom {

class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Canonical representative of x modulo mod, in [0, mod).
constexpr int mod_floor(long long x, int mod) {
    long long r = x % mod;
    return static_cast<int>(r < 0 ? r + mod : r);
}

class CycleProduct {
public:
    // Keeps m*n and the bound formulas far away from int64 overflow.
    static constexpr int max_dimension = 1 << 20;

    CycleProduct(int m, int n) : m_(m), n_(n) {
        if (m < 2 || n < 2)
            throw input_error("cycle lengths must be >= 2, got m=" + std::to_string(m) +
                              " n=" + std::to_string(n));
        if (m > max_dimension || n > max_dimension)
            throw input_error("cycle length exceeds " + std::to_string(max_dimension));
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int k1() const { return m_ / 3; }
    int k2() const { return n_ / 3; }
    long long vertex_count() const { return static_cast<long long>(m_) * n_; }

    CycleProduct transposed() const { return {n_, m_}; }

    friend bool operator==(const CycleProduct&, const CycleProduct&) = default;

private:
    int m_;
    int n_;
};

struct Vertex {
    int k;  // position on C_m
    int i;  // position on C_n (column)

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline std::string to_string(const Vertex& v) {
    return "(" + std::to_string(v.k) + "," + std::to_string(v.i) + ")";
}

// Subset of {0..m-1} held in one machine word.
class ColumnMask {
public:
    static constexpr int max_universe = 62;

    ColumnMask() = default;

    explicit ColumnMask(int m) : m_(m) {
        if (m < 1 || m > max_universe)
            throw input_error("column universe must be in [1, " + std::to_string(max_universe) +
                              "], got " + std::to_string(m));
    }

    ColumnMask(int m, std::initializer_list<int> members) : ColumnMask(m) {
        for (int k : members) insert(k);
    }

    static ColumnMask from_bits(int m, std::uint64_t bits) {
        ColumnMask c(m);
        if (bits & ~c.universe_bits())
            throw input_error("bit pattern has members outside [0, " + std::to_string(m) + ")");
        c.bits_ = bits;
        return c;
    }

    static ColumnMask full(int m) {
        ColumnMask c(m);
        c.bits_ = c.universe_bits();
        return c;
    }

    int universe() const { return m_; }
    std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    bool contains(int k) const {
        return k >= 0 && k < m_ && ((bits_ >> k) & 1U);
    }

    void insert(int k) {
        check_member(k);
        bits_ |= std::uint64_t{1} << k;
    }

    void erase(int k) {
        check_member(k);
        bits_ &= ~(std::uint64_t{1} << k);
    }

    // {(x + by) mod m : x in this}
    ColumnMask rotated(long long by) const {
        int s = mod_floor(by, m_);
        ColumnMask r(*this);
        if (s != 0)
            r.bits_ = ((bits_ << s) | (bits_ >> (m_ - s))) & universe_bits();
        return r;
    }

    ColumnMask complement() const {
        ColumnMask r(*this);
        r.bits_ = ~bits_ & universe_bits();
        return r;
    }

    bool is_subset_of(const ColumnMask& other) const {
        return (bits_ & ~other.bits_) == 0;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    ColumnMask& operator|=(const ColumnMask& o) {
        same_universe(o);
        bits_ |= o.bits_;
        return *this;
    }
    ColumnMask& operator&=(const ColumnMask& o) {
        same_universe(o);
        bits_ &= o.bits_;
        return *this;
    }
    friend ColumnMask operator|(ColumnMask a, const ColumnMask& b) { return a |= b; }
    friend ColumnMask operator&(ColumnMask a, const ColumnMask& b) { return a &= b; }

    friend bool operator==(const ColumnMask&, const ColumnMask&) = default;

private:
    std::uint64_t universe_bits() const { return (std::uint64_t{1} << m_) - 1; }

    void check_member(int k) const {
        if (k < 0 || k >= m_)
            throw input_error("member " + std::to_string(k) + " outside [0, " +
                              std::to_string(m_) + ")");
    }

    void same_universe(const ColumnMask& o) const {
        if (o.m_ != m_)
            throw input_error("column universe mismatch: " + std::to_string(m_) + " vs " +
                              std::to_string(o.m_));
    }

    int m_ = 0;
    std::uint64_t bits_ = 0;
};

// A vertex subset W of C_m x C_n, organised by column.
class CandidateSet {
public:
    explicit CandidateSet(CycleProduct inst)
        : inst_(inst), columns_(static_cast<std::size_t>(inst.n()), ColumnMask(inst.m())) {}

    CandidateSet(CycleProduct inst, std::vector<ColumnMask> columns)
        : inst_(inst), columns_(std::move(columns)) {
        if (columns_.size() != static_cast<std::size_t>(inst_.n()))
            throw input_error("expected " + std::to_string(inst_.n()) + " columns, got " +
                              std::to_string(columns_.size()));
        for (const auto& c : columns_)
            if (c.universe() != inst_.m())
                throw input_error("column universe " + std::to_string(c.universe()) +
                                  " does not match m=" + std::to_string(inst_.m()));
    }

    static CandidateSet all(CycleProduct inst) {
        return {inst, std::vector<ColumnMask>(static_cast<std::size_t>(inst.n()),
                                              ColumnMask::full(inst.m()))};
    }

    const CycleProduct& instance() const { return inst_; }
    const std::vector<ColumnMask>& columns() const { return columns_; }
    const ColumnMask& column(int j) const { return columns_.at(static_cast<std::size_t>(j)); }
    ColumnMask& column(int j) { return columns_.at(static_cast<std::size_t>(j)); }

    bool contains(Vertex v) const {
        return v.i >= 0 && v.i < inst_.n() && column(v.i).contains(v.k);
    }
    void insert(Vertex v) { checked_column(v).insert(v.k); }
    void erase(Vertex v) { checked_column(v).erase(v.k); }

    long long size() const {
        long long s = 0;
        for (const auto& c : columns_) s += c.size();
        return s;
    }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        for (int i = 0; i < inst_.n(); ++i)
            for (int k : column(i).members()) out.push_back({k, i});
        return out;
    }

    friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

private:
    ColumnMask& checked_column(Vertex v) {
        if (v.i < 0 || v.i >= inst_.n())
            throw input_error("column " + std::to_string(v.i) + " outside [0, " +
                              std::to_string(inst_.n()) + ")");
        return column(v.i);
    }

    CycleProduct inst_;
    std::vector<ColumnMask> columns_;
};

// Closed out-neighbourhood: the vertex itself and its two out-neighbours.
inline std::array<Vertex, 3> out_dominated(Vertex v, const CycleProduct& inst) {
    if (v.k < 0 || v.k >= inst.m() || v.i < 0 || v.i >= inst.n())
        throw input_error("vertex " + to_string(v) + " outside the " + std::to_string(inst.m()) +
                          "x" + std::to_string(inst.n()) + " product");
    return {{{v.k, v.i}, {(v.k + 1) % inst.m(), v.i}, {v.k, (v.i + 1) % inst.n()}}};
}

// Vertices of a column reached neither from inside the column (cur, via the
// C_m arcs) nor from the preceding column (prev, via the C_n arcs).
inline ColumnMask undominated_in_column(const ColumnMask& cur, const ColumnMask& prev) {
    if (cur.universe() != prev.universe())
        throw input_error("column universe mismatch: " + std::to_string(cur.universe()) + " vs " +
                          std::to_string(prev.universe()));
    return (cur | cur.rotated(1) | prev).complement();
}

struct DominationReport {
    bool dominating = false;
    std::optional<Vertex> witness;  // an undominated vertex when !dominating

    explicit operator bool() const { return dominating; }
};

// Column-local check; never materialises the product digraph.
inline DominationReport is_dominating(const CandidateSet& w) {
    const int n = w.instance().n();
    for (int j = 0; j < n; ++j) {
        ColumnMask missed = undominated_in_column(w.column(j), w.column((j + n - 1) % n));
        if (!missed.empty())
            return {false, Vertex{std::countr_zero(missed.bits()), j}};
    }
    return {true, std::nullopt};
}

inline std::vector<int> column_counts(const CandidateSet& w) {
    std::vector<int> a;
    a.reserve(w.columns().size());
    for (const auto& c : w.columns()) a.push_back(c.size());
    return a;
}

// (k, i) -> (i, k): a set of C_m x C_n becomes a set of C_n x C_m.
inline CandidateSet transpose(const CandidateSet& w) {
    const CycleProduct t = w.instance().transposed();
    CandidateSet out(t);
    for (const Vertex& v : w.vertices()) out.insert({v.i, v.k});
    return out;
}

}  // namespace cycdom
