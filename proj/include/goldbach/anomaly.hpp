#pragma once

#include <cstdint>
#include <string>

namespace goldbach {

// A failed check, kept as data so runs can be merged, counted, and replayed.
// input is the instance that failed; aux disambiguates grid tasks (second
// index) and property suites (property number), otherwise 0. scan_lo/scan_hi
// bound the search that came up empty, both 0 when no scan was involved.
struct Anomaly {
    std::string task;
    uint64_t input = 0;
    uint64_t aux = 0;
    uint64_t scan_lo = 0;
    uint64_t scan_hi = 0;
    std::string detail;
    uint64_t timestamp_ms = 0;

    friend bool operator==(const Anomaly&, const Anomaly&) = default;
};

}  // namespace goldbach
