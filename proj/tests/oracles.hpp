#pragma once

// Slow reference implementations the tests trust instead of the library.
// Everything here is plain trial division on purpose.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Prime pairs (p1, p2) with p1 <= p2 and p1 + p2 = n, ascending.
inline std::vector<std::pair<uint64_t, uint64_t>> partitions(uint64_t n) {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (uint64_t p = 2; p <= n / 2; ++p)
        if (is_prime(p) && is_prime(n - p)) out.push_back({p, n - p});
    return out;
}

// Odd offsets I < 2tn with 2tn + direction*I prime, ascending.
inline std::vector<uint64_t> offset_witnesses(uint64_t t, uint64_t n, int direction) {
    std::vector<uint64_t> out;
    const uint64_t base = 2 * t * n;
    for (uint64_t i = 1; i < base; i += 2) {
        const uint64_t value = direction > 0 ? base + i : base - i;
        if (value >= 2 && is_prime(value)) out.push_back(i);
    }
    return out;
}

// All primes in [lo, hi].
inline std::vector<uint64_t> primes_between(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> out;
    for (uint64_t v = lo; v <= hi; ++v)
        if (is_prime(v)) out.push_back(v);
    return out;
}

}  // namespace oracle
