#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "goldbach/harness.hpp"
#include "goldbach/primes.hpp"
#include "goldbach/progressions.hpp"

namespace {

using goldbach::PrimeTable;
using goldbach::Task;

int write_out(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << path << "\n";
        return 1;
    }
    out << payload;
    return 0;
}

struct VerifyOpts {
    std::string task = "goldbach";
    uint64_t from = 0;  // 0 = task default
    uint64_t to = 0;
    uint64_t chunk = uint64_t{1} << 16;
    unsigned workers = 1;
    uint64_t grid_from = 2;
    uint64_t grid_to = 1000;
    std::string format = "csv";
    std::string out;
    bool no_timing = false;
    bool with_chunks = false;
};

uint64_t default_lo(Task task) {
    switch (task) {
        case Task::Goldbach:
        case Task::Midpoint: return 4;
        case Task::C3: return 5;
        case Task::T5: return 1;
        default: return 2;
    }
}

int emit_job(const goldbach::VerifyJob& job, const VerifyOpts& o) {
    const auto report = goldbach::run_job(job);
    goldbach::EmitOptions opts;
    opts.with_timing = !o.no_timing;
    opts.with_chunks = o.with_chunks;
    const auto format =
        o.format == "json" ? goldbach::ReportFormat::Json : goldbach::ReportFormat::Csv;
    if (const int rc = write_out(o.out, goldbach::emit_report(report, format, opts))) return rc;
    if (report.anomaly_count > 0) {
        std::cerr << "anomalies: " << report.anomaly_count << "\n";
        return 2;
    }
    return 0;
}

int run_verify(const VerifyOpts& o) {
    const auto task = goldbach::parse_task(o.task);
    if (!task) {
        std::cerr << "unknown task: " << o.task << "\n";
        return 1;
    }
    goldbach::VerifyJob job;
    job.task = *task;
    job.lo = o.from != 0 ? o.from : default_lo(*task);
    job.hi = o.to;
    job.chunk = o.chunk;
    job.workers = o.workers;
    job.grid_n_lo = o.grid_from;
    job.grid_n_hi = o.grid_to;
    return emit_job(job, o);
}

int run_witness(uint64_t n, const std::string& task_str) {
    const auto task = goldbach::parse_task(task_str);
    if (!task || *task == Task::T5 || *task == Task::T6 || *task == Task::T7 ||
        *task == Task::Census) {
        std::cerr << "witness task must be one of goldbach, midpoint, c2, c3, c4\n";
        return 1;
    }
    uint64_t span = n + 1;
    if (*task == Task::C2 || *task == Task::C4) span = 4 * n + 1;
    if (*task == Task::C3) span = 2 * n + 1;
    const PrimeTable table = goldbach::sieve_range(0, span);
    const auto text = goldbach::show_witness(table, n, *task);
    if (text.empty()) {
        std::cerr << "no witness for " << n << "\n";
        return 2;
    }
    std::cout << text;
    return 0;
}

const char* outcome_name(goldbach::CollapseOutcome outcome) {
    switch (outcome) {
        case goldbach::CollapseOutcome::Vacuous: return "vacuous";
        case goldbach::CollapseOutcome::CollapseConfirmed: return "collapse-confirmed";
        case goldbach::CollapseOutcome::Violation: return "violation";
    }
    return "unknown";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Range verification and witness search for prime-sum decompositions"};
    app.require_subcommand(1);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "Verify a task over an inclusive range");
    verify->add_option("--task", vo.task, "goldbach|midpoint|c2|c3|c4|t5|t6|t7|census");
    verify->add_option("--from", vo.from, "Range start (task default when omitted)");
    verify->add_option("--to", vo.to, "Range end, inclusive")->required();
    verify->add_option("--chunk", vo.chunk, "Instances per work chunk");
    verify->add_option("--workers", vo.workers, "Worker threads");
    verify->add_option("--grid-from", vo.grid_from, "Inner index start (t5 only)");
    verify->add_option("--grid-to", vo.grid_to, "Inner index end (t5 only)");
    verify->add_option("--format", vo.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", vo.out, "Output file (stdout when omitted)");
    verify->add_flag("--no-timing", vo.no_timing, "Omit elapsed time and timestamps");
    verify->add_flag("--with-chunks", vo.with_chunks, "Include per-chunk summaries (json)");

    uint64_t witness_n = 0;
    std::string witness_task = "goldbach";
    auto* witness = app.add_subcommand("witness", "Show all witnesses for one target");
    witness->add_option("n", witness_n, "Target value (level for c2/c4, odd midpoint for c3)")
        ->required();
    witness->add_option("--task", witness_task, "goldbach|midpoint|c2|c3|c4");

    VerifyOpts co;
    auto* census = app.add_subcommand("census", "Count primes by residue class mod 4");
    census->add_option("--to", co.to, "Census limit, inclusive")->required();
    census->add_option("--format", co.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    census->add_option("--out", co.out, "Output file (stdout when omitted)");
    census->add_flag("--no-timing", co.no_timing, "Omit elapsed time");

    auto* progression = app.add_subcommand("progression", "Arithmetic progression tools");
    progression->require_subcommand(1);

    uint64_t pg_t = 1, pg_offset = 1, pg_n = 2, pg_n_max = 100;
    int pg_direction = 1;
    auto* scan = progression->add_subcommand("scan", "List prime terms of 2tn +/- offset");
    scan->add_option("--t", pg_t, "Step half-modulus t")->required();
    scan->add_option("--offset", pg_offset, "Odd offset in [1, 2t-1]");
    scan->add_option("--direction", pg_direction, "+1 or -1");
    scan->add_option("--n-max", pg_n_max, "Scan n = 1..n_max");

    auto* offsets = progression->add_subcommand("offsets", "Odd offsets making 2tn +/- I prime");
    offsets->add_option("--t", pg_t, "Step half-modulus t")->required();
    offsets->add_option("--n", pg_n, "Index n >= 2")->required();
    offsets->add_option("--direction", pg_direction, "+1 or -1");

    auto* coprime = progression->add_subcommand("coprime", "Smallest coprime offset with 2n - I prime");
    coprime->add_option("--n", pg_n, "Index n >= 2")->required();

    auto* collapse = progression->add_subcommand("collapse", "Shared-factor collapse check for 2n - I");
    collapse->add_option("--n", pg_n, "Index n >= 2")->required();
    collapse->add_option("--offset", pg_offset, "Odd offset in [1, 2n)")->required();

    uint64_t rd_base = 3, rd_shift = 2;
    auto* reduce = progression->add_subcommand("reduce", "Rewrite base*(2m+1) +/- shift as an even-step progression");
    reduce->add_option("--base", rd_base, "Odd base >= 3")->required();
    reduce->add_option("--shift", rd_shift, "Even shift < base")->required();
    reduce->add_option("--direction", pg_direction, "+1 or -1");

    uint64_t pr_factor = 3, pr_index = 3;
    bool pr_positive = false;
    auto* pair = progression->add_subcommand("pair", "Even shift pairing primes around an odd center");
    pair->add_option("--factor", pr_factor, "Odd factor")->required();
    pair->add_option("--index", pr_index, "Odd index")->required();
    pair->add_flag("--positive", pr_positive, "Require a strictly positive shift");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (verify->parsed()) return run_verify(vo);
        if (witness->parsed()) return run_witness(witness_n, witness_task);
        if (census->parsed()) {
            co.task = "census";
            co.from = 2;
            return run_verify(co);
        }
        if (scan->parsed()) {
            const goldbach::ProgressionSpec spec{pg_t, pg_offset, pg_direction};
            const auto table =
                goldbach::sieve_range(0, 2 * pg_t * pg_n_max + pg_offset + 1);
            const auto report = goldbach::progression_primes(table, spec, pg_n_max);
            if (report.degenerate)
                std::cout << "degenerate: every term shares a factor with " << 2 * pg_t << "\n";
            for (const auto& hit : report.hits)
                std::cout << "n=" << hit.n << " " << hit.value << "\n";
            std::cout << "hits: " << report.hits.size() << " of " << report.n_max << "\n";
            return 0;
        }
        if (offsets->parsed()) {
            const uint64_t base = 2 * pg_t * pg_n;
            const auto table =
                goldbach::sieve_range(0, (pg_direction > 0 ? 2 * base : base) + 1);
            const auto scan_result =
                goldbach::offset_witnesses(table, pg_t, pg_n, pg_direction);
            for (const auto& w : scan_result.witnesses)
                std::cout << "I=" << w.offset << " " << w.value << "\n";
            std::cout << "witnesses: " << scan_result.witnesses.size()
                      << ", smallest within [1, " << 2 * pg_t - 1 << "]: "
                      << (scan_result.within_statement_window ? "yes" : "no") << "\n";
            return scan_result.witnesses.empty() ? 2 : 0;
        }
        if (coprime->parsed()) {
            const auto table = goldbach::sieve_range(0, 2 * pg_n + 1);
            if (const auto w = goldbach::coprime_witness(table, pg_n)) {
                std::cout << "I=" << w->offset << " " << 2 * pg_n << "-" << w->offset << "="
                          << w->value << "\n";
                return 0;
            }
            std::cerr << "no coprime witness for n=" << pg_n << "\n";
            return 2;
        }
        if (collapse->parsed()) {
            const auto table = goldbach::sieve_range(0, 2 * pg_n + 1);
            const auto check = goldbach::gcd_collapse_check(table, pg_n, pg_offset);
            std::cout << "gcd(" << 2 * pg_n << ", " << pg_offset << ")=" << check.gcd_value
                      << " candidate=" << check.candidate << " -> "
                      << outcome_name(check.outcome) << "\n";
            return check.outcome == goldbach::CollapseOutcome::Violation ? 2 : 0;
        }
        if (reduce->parsed()) {
            const auto spec = goldbach::reduce_odd_progression(rd_base, rd_shift, pg_direction);
            std::cout << "2*" << spec.t << "*m + " << spec.offset
                      << (spec.coprime() ? "" : " (degenerate)") << "\n";
            return 0;
        }
        if (pair->parsed()) {
            const uint64_t center = pr_factor * pr_index;
            const auto table = goldbach::sieve_range(0, 2 * center + 1);
            if (const auto w =
                    goldbach::odd_pair_witness(table, pr_factor, pr_index, !pr_positive)) {
                std::cout << "P=" << w->shift << " " << w->prime_lo << " " << w->prime_hi
                          << "\n";
                return 0;
            }
            std::cerr << "no prime pair around " << center << "\n";
            return 2;
        }
    } catch (const std::length_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
