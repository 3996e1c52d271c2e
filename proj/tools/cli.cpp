#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycdom/cycdom.hpp"
#include "cycdom/detail/parallel.hpp"

namespace cycdom::cli {
namespace {

struct Range {
    int lo = 2;
    int hi = 2;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw input_error("range '" + text + "' is not of the form a..b");
    Range r;
    try {
        std::size_t used = 0;
        r.lo = std::stoi(text.substr(0, dots), &used);
        if (used != dots) throw input_error("");
        const std::string tail = text.substr(dots + 2);
        r.hi = std::stoi(tail, &used);
        if (used != tail.size()) throw input_error("");
    } catch (const std::exception&) {
        throw input_error("range '" + text + "' is not of the form a..b");
    }
    if (r.lo < 2 || r.hi < r.lo || r.hi > CycleProduct::max_dimension)
        throw input_error("range '" + text + "' must satisfy 2 <= a <= b <= " +
                          std::to_string(CycleProduct::max_dimension));
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw input_error("cannot write '" + path + "'");
    f << text;
    if (!f) throw input_error("failed writing '" + path + "'");
}

SolverBudget make_budget(int bits, double seconds) {
    SolverBudget b;
    b.max_profile_bits = bits;
    if (seconds > 0) b.time_limit = std::chrono::duration<double>(seconds);
    return b;
}

std::string case_label(const CaseTag& tag) {
    return std::string(to_string(tag.subcase)) + " (m mod 3 = " + std::to_string(tag.m_residue) +
           ", n mod 3 = " + std::to_string(tag.n_residue) + ")";
}

struct ComputeOptions {
    int m = 0;
    int n = 0;
    int budget_bits = 14;
    double time_limit = 0;
    std::string certificate;
};

int cmd_compute(const ComputeOptions& o, std::ostream& out, std::ostream& err) {
    const CycleProduct inst(o.m, o.n);
    const GammaResult r = gamma(inst, make_budget(o.budget_bits, o.time_limit));
    out << "instance m=" << o.m << " n=" << o.n << "\n";
    out << "case " << case_label(classify(inst)) << "\n";
    out << "lower " << r.lower << "\n";
    out << "upper " << r.upper << "\n";
    if (r.exact)
        out << "exact " << *r.exact << " (" << to_string(r.method) << ")\n";
    else
        out << "interval [" << r.lower << ", " << r.upper << "] (" << to_string(r.method) << ")\n";

    if (!o.certificate.empty()) {
        if (r.certificate) {
            write_file(o.certificate, write_set(*r.certificate));
            out << "certificate " << o.certificate << " (size " << r.certificate->size() << ")\n";
        } else {
            err << "no certificate available for this instance\n";
        }
    }
    return r.exact ? exit_exact : exit_interval;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    CandidateSet w = [&] {
        try {
            return read_set(read_file(path));
        } catch (const parse_error& e) {
            throw input_error(path + ": " + e.what());
        }
    }();
    const DominationReport rep = is_dominating(w);
    if (rep) {
        out << "dominating, size " << w.size() << "\n";
        return exit_exact;
    }
    out << "not dominating, size " << w.size() << ", undominated vertex " << to_string(*rep.witness) << "\n";
    (void)err;
    return exit_not_dominating;
}

struct ConstructOptions {
    int m = 0;
    int n = 0;
    std::optional<std::string> word;
    std::string output;
};

int cmd_construct(const ConstructOptions& o, std::ostream& out, std::ostream& err) {
    const CycleProduct inst(o.m, o.n);
    std::optional<CandidateSet> w;
    if (o.word) {
        Construction c = build_from_word(inst, parse_step_word(*o.word));
        if (!satisfies_ab_system(inst, letter_counts(c.descriptor.word)))
            err << "note: step counts do not solve a+b=n-1, a-2b=2 or m-1 (mod m)\n";
        w = std::move(c.set);
    } else {
        w = minimum_dominating_set(inst);
        if (!w) {
            err << "no A-set construction for m=" << o.m << " n=" << o.n
                << " (needs m or n = 2 mod 3 outside the strict case)\n";
            return exit_usage;
        }
    }

    const std::string text = write_set(*w);
    if (o.output.empty())
        out << text;
    else
        write_file(o.output, text);

    const DominationReport rep = is_dominating(*w);
    if (!rep) {
        err << "constructed set is not dominating; undominated vertex " << to_string(*rep.witness) << "\n";
        return exit_not_dominating;
    }
    return exit_exact;
}

int cmd_bounds(int m, int n, std::ostream& out) {
    const CycleProduct inst(m, n);
    const BoundWithSource lb = lower_bound_with_source(inst);
    out << "instance m=" << m << " n=" << n << " k1=" << inst.k1() << " k2=" << inst.k2() << "\n";
    out << "case " << case_label(classify(inst)) << "\n";
    out << "residue bound (m,n) " << theorem1_bound(inst) << "\n";
    out << "residue bound (n,m) " << theorem1_bound(inst.transposed()) << "\n";
    out << "third bound " << (inst.vertex_count() + 2) / 3 << "\n";
    out << "lower " << lb.value << " (" << to_string(lb.source) << ")\n";
    out << "upper " << generic_upper_bound(inst) << " (generic-upper)\n";
    if (auto k = known_gamma(inst))
        out << "known " << k->value << " (" << to_string(k->method) << ")\n";
    else
        out << "known none\n";
    return exit_exact;
}

struct TableOptions {
    std::string m_range;
    std::string n_range;
    std::string format = "csv";
    int budget_bits = 14;
    double time_limit = 0;
    bool timing = false;
    unsigned threads = 0;
};

int cmd_table(const TableOptions& o, std::ostream& out) {
    if (o.format != "csv") throw input_error("unsupported format '" + o.format + "'");
    const Range mr = parse_range(o.m_range);
    const Range nr = parse_range(o.n_range);
    const long long rows_m = mr.hi - mr.lo + 1;
    const long long rows_n = nr.hi - nr.lo + 1;
    if (rows_m * rows_n > 1'000'000) throw input_error("table limited to 1000000 rows");

    SolverBudget budget = make_budget(o.budget_bits, o.time_limit);
    budget.threads = 1;
    std::vector<std::string> rows(static_cast<std::size_t>(rows_m * rows_n));
    detail::parallel_for(rows.size(), o.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const int m = mr.lo + static_cast<int>(idx / static_cast<std::size_t>(rows_n));
            const int n = nr.lo + static_cast<int>(idx % static_cast<std::size_t>(rows_n));
            const CycleProduct inst(m, n);
            const auto t0 = std::chrono::steady_clock::now();
            const GammaResult r = gamma(inst, budget);
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            const CaseTag tag = classify(inst);

            std::string row = std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(tag.m_residue) +
                              "," + std::to_string(tag.n_residue) + "," + std::string(to_string(tag.subcase)) +
                              "," + std::to_string(r.lower) + "," + std::to_string(r.upper) + "," +
                              (r.exact ? std::to_string(*r.exact) : std::string()) + "," +
                              std::string(to_string(r.method)) + ",";
            if (o.timing) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", ms);
                row += buf;
            }
            rows[idx] = std::move(row);
        }
    });

    out << "m,n,m_mod3,n_mod3,case,lower,upper,exact,method,ms\n";
    for (const auto& row : rows) out << row << "\n";
    return exit_exact;
}

struct ConjectureOptions {
    int k_max = 4;
    int budget_bits = 14;
    double time_limit = 0;
    bool no_dp = false;
};

// Conjectured k(n+1) for C_{3k} x C_4 against the C_4 formula (and the DP).
int cmd_conjecture(const ConjectureOptions& o, std::ostream& out, std::ostream& err) {
    if (o.k_max < 2) throw input_error("--k-max must be >= 2");
    if (3LL * o.k_max > CycleProduct::max_dimension) throw input_error("--k-max too large");
    const SolverBudget budget = make_budget(o.budget_bits, o.time_limit);
    constexpr int n = 4;
    std::optional<int> first_counterexample;
    bool dp_disagrees = false;
    for (int k = 2; k <= o.k_max; ++k) {
        const long long conjectured = static_cast<long long>(k) * (n + 1);
        const long long actual = c4_gamma(3 * k);
        out << "k=" << k << " m=" << 3 * k << " n=" << n << ": conjectured " << conjectured << ", actual "
            << actual;
        if (!o.no_dp) {
            try {
                const long long dp = gamma_dp(CycleProduct(3 * k, n), budget);
                out << ", dp " << dp;
                if (dp != actual) {
                    out << " (DP DISAGREES)";
                    dp_disagrees = true;
                }
            } catch (const budget_error&) {
                out << ", dp skipped";
            }
        }
        if (conjectured == actual) {
            out << ": agree\n";
        } else {
            out << ": COUNTEREXAMPLE\n";
            if (!first_counterexample) first_counterexample = k;
        }
    }
    if (first_counterexample) {
        const int k = *first_counterexample;
        out << "first counterexample k=" << k << " (conjectured " << 5LL * k << ", actual " << c4_gamma(3 * k)
            << ")\n";
    } else {
        out << "no counterexample for k <= " << o.k_max << "\n";
    }
    if (dp_disagrees) {
        err << "exact solver disagrees with the C_4 formula\n";
        return exit_not_dominating;
    }
    return exit_exact;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Domination numbers of products of two directed cycles", "cycdom"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* c = app.add_subcommand("compute", "Compute or bound gamma(C_m x C_n)");
    c->add_option("m", compute.m, "Length of the first cycle")->required();
    c->add_option("n", compute.n, "Length of the second cycle")->required();
    c->add_option("--budget-bits", compute.budget_bits, "Largest profile dimension for the exact solver")
        ->capture_default_str();
    c->add_option("--time-limit", compute.time_limit, "Solver time limit in seconds (0: none)");
    c->add_option("--certificate", compute.certificate, "Write a domset v1 certificate here");

    std::string verify_path;
    auto* v = app.add_subcommand("verify", "Check that a domset v1 file is a dominating set");
    v->add_option("path", verify_path, "domset v1 file")->required();

    ConstructOptions construct;
    auto* k = app.add_subcommand("construct", "Emit the A-set construction as domset v1");
    k->add_option("m", construct.m)->required();
    k->add_option("n", construct.n)->required();
    k->add_option("--word", construct.word, "Step word, e.g. +1,+1,-2 (needs m = 2 mod 3)");
    k->add_option("-o,--output", construct.output, "Output file (default: stdout)");

    int bounds_m = 0;
    int bounds_n = 0;
    auto* b = app.add_subcommand("bounds", "Print every bound and the known value");
    b->add_option("m", bounds_m)->required();
    b->add_option("n", bounds_n)->required();

    TableOptions table;
    auto* t = app.add_subcommand("table", "Sweep a range of instances to CSV");
    t->add_option("--m-range", table.m_range, "a..b")->required();
    t->add_option("--n-range", table.n_range, "c..d")->required();
    t->add_option("--format", table.format)->capture_default_str();
    t->add_option("--budget-bits", table.budget_bits)->capture_default_str();
    t->add_option("--time-limit", table.time_limit, "Per-instance solver limit in seconds (0: none)");
    t->add_flag("--timing", table.timing, "Fill the ms column (output is then run-dependent)");
    t->add_option("--threads", table.threads, "Worker threads (0: all cores)");

    ConjectureOptions conj;
    auto* j = app.add_subcommand("conjecture", "Compare k(n+1) with gamma(C_3k x C_4)");
    j->add_option("--k-max", conj.k_max)->capture_default_str();
    j->add_option("--budget-bits", conj.budget_bits)->capture_default_str();
    j->add_option("--time-limit", conj.time_limit);
    j->add_flag("--no-dp", conj.no_dp, "Skip the exact solver column");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_exact : exit_usage;
    }

    try {
        if (*c) return cmd_compute(compute, out, err);
        if (*v) return cmd_verify(verify_path, out, err);
        if (*k) return cmd_construct(construct, out, err);
        if (*b) return cmd_bounds(bounds_m, bounds_n, out);
        if (*t) return cmd_table(table, out);
        if (*j) return cmd_conjecture(conj, out, err);
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace cycdom::cli
