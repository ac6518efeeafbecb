#include "goldbach/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"

#include "goldbach/forms.hpp"
#include "goldbach/partitions.hpp"
#include "goldbach/progressions.hpp"

namespace goldbach {

namespace {

uint64_t now_epoch_ms() {
    const auto since_epoch = std::chrono::system_clock::now().time_since_epoch();
    return uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(since_epoch).count());
}

struct ChunkResult {
    ChunkSummary summary;
    std::vector<Anomaly> anomalies;
    std::optional<CensusRow> census;
};

void validate_job(const VerifyJob& job) {
    if (job.lo > job.hi) throw std::invalid_argument("job: lo must be <= hi");
    if (job.chunk < 1) throw std::invalid_argument("job: chunk must be >= 1");
    if (job.workers < 1) throw std::invalid_argument("job: workers must be >= 1");
    if (job.hi > uint64_t{1} << 32) throw std::invalid_argument("job: hi beyond desk scale");
    switch (job.task) {
        case Task::Goldbach:
        case Task::Midpoint:
            if (job.lo < 4 || job.lo % 2 != 0)
                throw std::invalid_argument("job: task needs an even lo >= 4");
            break;
        case Task::C3:
            if (job.lo < 5 || job.lo % 2 == 0)
                throw std::invalid_argument("job: c3 needs an odd lo >= 5");
            break;
        case Task::C2:
        case Task::C4:
        case Task::T6:
        case Task::T7:
            if (job.lo < 2) throw std::invalid_argument("job: lo must be >= 2");
            break;
        case Task::T5:
            if (job.lo < 1) throw std::invalid_argument("job: t range starts at 1");
            if (job.grid_n_lo < 2 || job.grid_n_lo > job.grid_n_hi)
                throw std::invalid_argument("job: grid needs 2 <= n_lo <= n_hi");
            if (job.grid_n_hi > uint64_t{1} << 20)
                throw std::invalid_argument("job: grid index beyond desk scale");
            break;
        case Task::Census:
            if (job.hi < 2) throw std::invalid_argument("job: census needs hi >= 2");
            break;
    }
}

// Chunks partition a cursor space: plain values for range tasks, flattened
// (t, n) cells for the grid, a single point for the census.
uint64_t cursor_span(const VerifyJob& job) {
    switch (job.task) {
        case Task::T5: return (job.hi - job.lo + 1) * (job.grid_n_hi - job.grid_n_lo + 1);
        case Task::Census: return 1;
        default: return job.hi - job.lo + 1;
    }
}

ChunkResult run_chunk(const VerifyJob& job, const PrimeTable& table, uint64_t index) {
    ChunkResult res;
    const uint64_t span = cursor_span(job);
    const uint64_t c_lo = index * job.chunk;
    const uint64_t c_hi = std::min(span - 1, c_lo + (job.chunk - 1));
    res.summary.index = index;
    res.summary.lo = job.task == Task::T5 ? c_lo : job.lo + c_lo;
    res.summary.hi = job.task == Task::T5 ? c_hi : job.lo + c_hi;

    uint64_t& verified = res.summary.verified;
    uint64_t& stat = res.summary.max_min_witness;
    auto push_anomaly = [&](uint64_t input, uint64_t aux, uint64_t scan_lo, uint64_t scan_hi,
                            std::string detail) {
        res.anomalies.push_back({task_name(job.task), input, aux, scan_lo, scan_hi,
                                 std::move(detail), now_epoch_ms()});
    };

    const uint64_t v_lo = res.summary.lo;
    const uint64_t v_hi = res.summary.hi;

    switch (job.task) {
        case Task::Goldbach:
            for (uint64_t v = v_lo + v_lo % 2; v <= v_hi; v += 2) {
                if (auto part = first_partition(table, v)) {
                    ++verified;
                    stat = std::max(stat, part->p1);
                } else {
                    push_anomaly(v, 0, 2, v / 2, "no prime pair sums to the target");
                }
            }
            break;

        case Task::Midpoint: {
            // asc holds the smaller primes of the partitions in order; desc
            // holds the lower witness halves, offsets ascending. The two scans
            // run in opposite directions, so their agreement is the bijection.
            std::vector<uint64_t> asc, desc;
            for (uint64_t v = v_lo + v_lo % 2; v <= v_hi; v += 2) {
                const uint64_t mid = v / 2;
                asc.clear();
                desc.clear();
                table.scan_primes(2, mid + 1, [&](uint64_t p) {
                    if (table.is_prime(v - p)) asc.push_back(p);
                    return true;
                });
                table.scan_primes_desc(2, mid + 1, [&](uint64_t q) {
                    if (table.is_prime(v - q)) desc.push_back(q);
                    return true;
                });
                const char* fault = nullptr;
                if (asc.empty())
                    fault = "no midpoint decomposition";
                else if (asc.size() != desc.size())
                    fault = "partition and witness counts differ";
                else
                    for (size_t i = 0; i < asc.size() && fault == nullptr; ++i) {
                        if (asc[i] != desc[asc.size() - 1 - i])
                            fault = "round-trip does not return the original pair";
                        else if (asc[i] > mid || v - asc[i] < mid)
                            fault = "witness halves fall on one side of the midpoint";
                        else if (i + 1 < desc.size() && desc[i] <= desc[i + 1])
                            fault = "witness offsets not strictly ascending";
                    }
                if (fault == nullptr) {
                    ++verified;
                    stat = std::max(stat, mid - desc.front());
                } else {
                    push_anomaly(v, 0, 2, mid, fault);
                }
            }
            break;
        }

        case Task::C2:
            for (uint64_t v = v_lo; v <= v_hi; ++v) {
                if (auto w = conjecture2_witness(table, v)) {
                    ++verified;
                    stat = std::max(stat, w->m);
                } else {
                    push_anomaly(v, 0, 1, v - 1, "no mixed form pair at this level");
                }
            }
            break;

        case Task::C3:
            for (uint64_t v = v_lo + 1 - v_lo % 2; v <= v_hi; v += 2) {
                if (auto w = conjecture3_witness(table, v)) {
                    ++verified;
                    stat = std::max(stat, w->m);
                } else {
                    push_anomaly(v, 0, 1, (v + 1) / 2 - 1,
                                 "no matched form pair for this odd target");
                }
            }
            break;

        case Task::C4:
            for (uint64_t v = v_lo; v <= v_hi; ++v) {
                const auto both = conjecture4_verify(table, v);
                if (both.complete()) {
                    ++verified;
                    stat = std::max(stat, std::max(both.mixed->m, both.matched->m));
                } else {
                    const char* detail = !both.mixed && !both.matched
                                             ? "both halves missing at this level"
                                             : (!both.mixed ? "mixed half missing at this level"
                                                            : "matched half missing at this level");
                    push_anomaly(v, 0, 1, v - 1, detail);
                }
            }
            break;

        case Task::T5: {
            const uint64_t grid = job.grid_n_hi - job.grid_n_lo + 1;
            for (uint64_t c = c_lo; c <= c_hi; ++c) {
                const uint64_t t = job.lo + c / grid;
                const uint64_t inner = job.grid_n_lo + c % grid;
                const auto plus = first_offset_witness(table, t, inner, +1);
                const auto minus = first_offset_witness(table, t, inner, -1);
                if (plus && minus) {
                    ++verified;
                    stat = std::max(stat, std::max(plus->offset, minus->offset));
                } else {
                    const char* detail = !plus && !minus
                                             ? "no offset witness in either direction"
                                             : (!plus ? "no upward offset witness"
                                                      : "no downward offset witness");
                    push_anomaly(t, inner, 1, 2 * t * inner - 1, detail);
                }
            }
            break;
        }

        case Task::T6:
            for (uint64_t v = v_lo; v <= v_hi; ++v) {
                bool clean = true;
                uint64_t best_g = 0;
                for (uint64_t off = 1; off < 2 * v; off += 2) {
                    const auto check = gcd_collapse_check(table, v, off);
                    if (check.outcome == CollapseOutcome::Violation) {
                        clean = false;
                        push_anomaly(v, off, 1, 2 * v - 1,
                                     "prime with a shared factor escaped collapse");
                    } else if (check.outcome == CollapseOutcome::CollapseConfirmed) {
                        best_g = std::max(best_g, check.gcd_value);
                    }
                }
                if (clean) ++verified;
                stat = std::max(stat, best_g);
            }
            break;

        case Task::T7:
            for (uint64_t v = v_lo; v <= v_hi; ++v) {
                if (auto w = coprime_witness(table, v)) {
                    ++verified;
                    stat = std::max(stat, w->offset);
                } else {
                    push_anomaly(v, 0, 1, 2 * v - 1, "no coprime offset with a prime complement");
                }
            }
            break;

        case Task::Census:
            res.census = residue_census(table, job.hi);
            verified = 1;
            break;
    }

    res.summary.anomaly_count = res.anomalies.size();
    return res;
}

std::string form_line(const FormWitness& w) {
    auto term = [](uint64_t idx, int sign) {
        return "(4*" + std::to_string(idx) + (sign > 0 ? "+1)" : "-1)");
    };
    return std::to_string(w.target()) + " = " + std::to_string(w.p1) + " + " +
           std::to_string(w.p2) + " = " + term(w.m, w.sign1) + " + " + term(w.n, w.sign2) + "\n";
}

}  // namespace

const char* task_name(Task task) {
    switch (task) {
        case Task::Goldbach: return "goldbach";
        case Task::Midpoint: return "midpoint";
        case Task::C2: return "c2";
        case Task::C3: return "c3";
        case Task::C4: return "c4";
        case Task::T5: return "t5";
        case Task::T6: return "t6";
        case Task::T7: return "t7";
        case Task::Census: return "census";
    }
    return "unknown";
}

std::optional<Task> parse_task(std::string_view name) {
    for (Task task : {Task::Goldbach, Task::Midpoint, Task::C2, Task::C3, Task::C4, Task::T5,
                      Task::T6, Task::T7, Task::Census})
        if (name == task_name(task)) return task;
    return std::nullopt;
}

uint64_t required_table_span(const VerifyJob& job) {
    validate_job(job);
    switch (job.task) {
        case Task::Goldbach:
        case Task::Midpoint:
        case Task::Census: return job.hi + 1;
        case Task::C2:
        case Task::C4: return 4 * job.hi + 1;
        case Task::C3: return 2 * job.hi + 1;
        case Task::T5: return 4 * job.hi * job.grid_n_hi + 1;
        case Task::T6:
        case Task::T7: return 2 * job.hi + 1;
    }
    return 0;
}

uint64_t chunk_count(const VerifyJob& job) {
    validate_job(job);
    const uint64_t span = cursor_span(job);
    return (span + job.chunk - 1) / job.chunk;
}

RangeReport run_job(const VerifyJob& job, const PrimeTable* shared_table, uint64_t start_chunk,
                    uint64_t max_chunks) {
    validate_job(job);
    const auto t0 = std::chrono::steady_clock::now();
    const uint64_t total = chunk_count(job);
    if (start_chunk > total) throw std::invalid_argument("start chunk beyond the job");
    const uint64_t end =
        max_chunks > total - start_chunk ? total : start_chunk + max_chunks;

    const uint64_t span = required_table_span(job);
    PrimeTable local;
    const PrimeTable* table = shared_table;
    if (table == nullptr) {
        local = sieve_range(0, span);
        table = &local;
    } else if (table->lo() != 0 || table->hi() < span) {
        throw std::out_of_range("shared table does not cover the job");
    }

    std::vector<ChunkResult> results(end - start_chunk);
    std::atomic<uint64_t> cursor{start_chunk};
    std::exception_ptr first_error;
    std::mutex error_mu;
    std::atomic<bool> failed{false};

    auto drain = [&]() {
        try {
            for (;;) {
                const uint64_t c = cursor.fetch_add(1);
                if (c >= end || failed.load()) return;
                results[c - start_chunk] = run_chunk(job, *table, c);
            }
        } catch (...) {
            const std::scoped_lock lock(error_mu);
            if (!first_error) first_error = std::current_exception();
            failed.store(true);
        }
    };

    const uint64_t pending = end - start_chunk;
    const unsigned pool = unsigned(std::min<uint64_t>(job.workers, std::max<uint64_t>(pending, 1)));
    if (pool <= 1) {
        drain();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (unsigned w = 0; w < pool; ++w) threads.emplace_back(drain);
        for (auto& th : threads) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    // Single-threaded merge in chunk order keeps the body independent of the
    // worker schedule.
    RangeReport report;
    report.job = job;
    for (auto& r : results) {
        report.verified += r.summary.verified;
        report.anomaly_count += r.summary.anomaly_count;
        report.max_min_witness = std::max(report.max_min_witness, r.summary.max_min_witness);
        report.anomalies.insert(report.anomalies.end(),
                                std::make_move_iterator(r.anomalies.begin()),
                                std::make_move_iterator(r.anomalies.end()));
        if (r.census) report.census = r.census;
        report.chunks.push_back(r.summary);
    }
    report.complete = start_chunk == 0 && end == total;
    report.resume_cursor = end;
    report.elapsed_ms = uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count());
    return report;
}

RangeReport resume_job(const RangeReport& partial, const PrimeTable* shared_table,
                       uint64_t max_chunks) {
    if (partial.complete) return partial;
    const RangeReport rest = run_job(partial.job, shared_table, partial.resume_cursor, max_chunks);
    RangeReport merged = partial;
    merged.verified += rest.verified;
    merged.anomaly_count += rest.anomaly_count;
    merged.max_min_witness = std::max(merged.max_min_witness, rest.max_min_witness);
    merged.anomalies.insert(merged.anomalies.end(), rest.anomalies.begin(), rest.anomalies.end());
    merged.chunks.insert(merged.chunks.end(), rest.chunks.begin(), rest.chunks.end());
    if (rest.census) merged.census = rest.census;
    merged.elapsed_ms += rest.elapsed_ms;
    merged.resume_cursor = rest.resume_cursor;
    merged.complete = merged.resume_cursor == chunk_count(partial.job);
    return merged;
}

std::string emit_report(const RangeReport& report, ReportFormat format,
                        const EmitOptions& options) {
    if (format == ReportFormat::Csv) {
        std::string out = "task,lo,hi,verified,anomalies,max_min_offset,elapsed_ms\n";
        if (report.verified + report.anomaly_count == 0) return out;
        out += task_name(report.job.task);
        out += ',';
        out += std::to_string(report.job.lo);
        out += ',';
        out += std::to_string(report.job.hi);
        out += ',';
        out += std::to_string(report.verified);
        out += ',';
        out += std::to_string(report.anomaly_count);
        out += ',';
        if (report.census)
            out += std::to_string(report.census->one_mod_4) + '/' +
                   std::to_string(report.census->three_mod_4) + '/' +
                   std::to_string(report.census->total);
        else
            out += std::to_string(report.max_min_witness);
        out += ',';
        if (options.with_timing) out += std::to_string(report.elapsed_ms);
        out += '\n';
        return out;
    }

    nlohmann::ordered_json j;
    j["task"] = task_name(report.job.task);
    j["lo"] = report.job.lo;
    j["hi"] = report.job.hi;
    if (report.job.task == Task::T5) {
        j["grid_n_lo"] = report.job.grid_n_lo;
        j["grid_n_hi"] = report.job.grid_n_hi;
    }
    j["verified"] = report.verified;
    j["anomalies"] = report.anomaly_count;
    if (report.census)
        j["max_min_offset"] = {{"one_mod_4", report.census->one_mod_4},
                               {"three_mod_4", report.census->three_mod_4},
                               {"total", report.census->total}};
    else
        j["max_min_offset"] = report.max_min_witness;
    j["complete"] = report.complete;
    if (!report.complete) j["resume_cursor"] = report.resume_cursor;
    auto records = nlohmann::ordered_json::array();
    for (const auto& a : report.anomalies) {
        nlohmann::ordered_json rec;
        rec["task"] = a.task;
        rec["input"] = a.input;
        rec["aux"] = a.aux;
        rec["scan_lo"] = a.scan_lo;
        rec["scan_hi"] = a.scan_hi;
        rec["detail"] = a.detail;
        if (options.with_timing) rec["timestamp_ms"] = a.timestamp_ms;
        records.push_back(std::move(rec));
    }
    j["anomaly_records"] = std::move(records);
    if (options.with_chunks) {
        auto chunks = nlohmann::ordered_json::array();
        for (const auto& c : report.chunks)
            chunks.push_back({{"index", c.index},
                              {"lo", c.lo},
                              {"hi", c.hi},
                              {"verified", c.verified},
                              {"anomalies", c.anomaly_count},
                              {"max_min_offset", c.max_min_witness}});
        j["chunks"] = std::move(chunks);
    }
    if (options.with_timing) j["elapsed_ms"] = report.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string show_witness(const PrimeTable& table, uint64_t n, Task task) {
    std::string out;
    switch (task) {
        case Task::Goldbach:
            for (const auto& part : partitions(table, n))
                out += std::to_string(part.n) + " = " + std::to_string(part.p1) + " + " +
                       std::to_string(part.p2) + "\n";
            break;
        case Task::Midpoint:
            for (const auto& w : midpoint_witnesses(table, n))
                out += "(" + std::to_string(w.midpoint) + ", " + std::to_string(w.offset) +
                       ", " + std::to_string(w.prime_lo) + ", " + std::to_string(w.prime_hi) +
                       ")\n";
            break;
        case Task::C2:
            if (auto w = conjecture2_witness(table, n)) out += form_line(*w);
            break;
        case Task::C3:
            if (auto w = conjecture3_witness(table, n)) out += form_line(*w);
            break;
        case Task::C4: {
            const auto both = conjecture4_verify(table, n);
            if (both.mixed) out += form_line(*both.mixed);
            if (both.matched) out += form_line(*both.matched);
            break;
        }
        default:
            throw std::invalid_argument("task has no single-target witness display");
    }
    return out;
}

}  // namespace goldbach
