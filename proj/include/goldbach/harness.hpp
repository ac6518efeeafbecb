#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goldbach/anomaly.hpp"
#include "goldbach/primes.hpp"

namespace goldbach {

// Range-verification tasks. The first five walk one even/odd/level range;
// T5 walks a (t, n) grid; Census is a single whole-range instance.
enum class Task { Goldbach, Midpoint, C2, C3, C4, T5, T6, T7, Census };

const char* task_name(Task task);
std::optional<Task> parse_task(std::string_view name);

// chunk and workers steer execution only; they never appear in report bodies,
// which must not depend on either. For T5 the [lo, hi] range is the t axis
// and grid_n_lo/grid_n_hi bound the inner index.
struct VerifyJob {
    Task task = Task::Goldbach;
    uint64_t lo = 4;
    uint64_t hi = 4;  // inclusive
    uint64_t chunk = uint64_t{1} << 16;
    unsigned workers = 1;
    uint64_t grid_n_lo = 2;
    uint64_t grid_n_hi = 1000;

    friend bool operator==(const VerifyJob&, const VerifyJob&) = default;
};

// Per-chunk tallies; lo/hi are cursor-space bounds (values, or flat grid
// indices for T5). Timing-free so merged bodies stay byte-comparable.
struct ChunkSummary {
    uint64_t index = 0;
    uint64_t lo = 0;
    uint64_t hi = 0;
    uint64_t verified = 0;
    uint64_t anomaly_count = 0;
    uint64_t max_min_witness = 0;

    friend bool operator==(const ChunkSummary&, const ChunkSummary&) = default;
};

// Invariant: verified + anomaly_count equals the number of task instances in
// the chunks covered. complete means chunks [0, chunk_count) are all covered;
// otherwise resume_cursor is the next chunk index to run.
struct RangeReport {
    VerifyJob job;
    uint64_t verified = 0;
    uint64_t anomaly_count = 0;
    uint64_t max_min_witness = 0;
    std::vector<Anomaly> anomalies;
    std::vector<ChunkSummary> chunks;
    std::optional<CensusRow> census;
    uint64_t elapsed_ms = 0;
    bool complete = true;
    uint64_t resume_cursor = 0;
};

// Exclusive sieve bound a table must reach for the job: run_job requires a
// shared table with lo() == 0 and hi() >= this, and sieves exactly this span
// when no table is passed.
uint64_t required_table_span(const VerifyJob& job);

// Number of chunks the job's cursor space splits into.
uint64_t chunk_count(const VerifyJob& job);

inline constexpr uint64_t kAllChunks = std::numeric_limits<uint64_t>::max();

// Run chunks [start_chunk, start_chunk + max_chunks) of the job across
// job.workers threads. Chunk results merge in chunk order, so the report body
// is identical for every worker count and the anomaly list is in range order.
// Throws std::invalid_argument on a malformed job, std::out_of_range when the
// shared table does not cover required_table_span(job).
RangeReport run_job(const VerifyJob& job, const PrimeTable* shared_table = nullptr,
                    uint64_t start_chunk = 0, uint64_t max_chunks = kAllChunks);

// Continue an incomplete report and fold the new chunks into it. A complete
// report is returned unchanged.
RangeReport resume_job(const RangeReport& partial, const PrimeTable* shared_table = nullptr,
                       uint64_t max_chunks = kAllChunks);

enum class ReportFormat { Csv, Json };

// with_timing=false drops elapsed milliseconds and anomaly timestamps so two
// emissions of equal report bodies compare byte-identical.
struct EmitOptions {
    bool with_timing = true;
    bool with_chunks = false;
};

// CSV columns exactly: task,lo,hi,verified,anomalies,max_min_offset,elapsed_ms.
// One row per report; header only when the report covers no instances. The
// census row carries its three counts as one/three/total in the stats column.
// JSON mirrors the report with a fixed key order.
std::string emit_report(const RangeReport& report, ReportFormat format,
                        const EmitOptions& options = {});

// All witnesses for one target under the task's notion of witness, one per
// line. Goldbach: "n = p1 + p2" ascending. Midpoint: "(P, I, lo, hi)"
// ascending by offset. C2/C4 take a level, C3 an odd target midpoint.
std::string show_witness(const PrimeTable& table, uint64_t n, Task task);

}  // namespace goldbach
