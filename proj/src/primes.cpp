#include "goldbach/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace goldbach {

namespace {

uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

// Bit-packed simple sieve; returns the primes up to limit inclusive.
std::vector<uint64_t> base_primes_upto(uint64_t limit) {
    std::vector<uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<uint64_t> words((limit + 64) / 64, ~uint64_t{0});
    auto clear = [&](uint64_t i) { words[i >> 6] &= ~(uint64_t{1} << (i & 63)); };
    auto test = [&](uint64_t i) { return (words[i >> 6] >> (i & 63)) & 1u; };
    clear(0);
    clear(1);
    for (uint64_t p = 2; p * p <= limit; ++p)
        if (test(p))
            for (uint64_t m = p * p; m <= limit; m += p) clear(m);
    for (uint64_t i = 2; i <= limit; ++i)
        if (test(i)) primes.push_back(i);
    return primes;
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

uint64_t PrimeTable::count_primes() const {
    uint64_t count = 0;
    for (uint64_t w : words_) count += uint64_t(std::popcount(w));
    return count;
}

std::vector<uint64_t> PrimeTable::primes() const {
    std::vector<uint64_t> out;
    scan_primes(lo_, hi_, [&](uint64_t p) {
        out.push_back(p);
        return true;
    });
    return out;
}

PrimeTable sieve_range(uint64_t lo, uint64_t hi, const SieveConfig& cfg) {
    if (lo > hi)
        throw std::invalid_argument("sieve_range: lo > hi");
    if (cfg.segment_size == 0)
        throw std::invalid_argument("sieve_range: segment_size must be positive");
    const uint64_t span = hi - lo;
    if (span / cfg.segment_size + 1 > cfg.max_segments)
        throw std::length_error("sieve_range: span exceeds segment budget");

    PrimeTable table;
    table.lo_ = lo;
    table.hi_ = hi;
    if (span == 0) return table;
    table.words_.assign((span + 63) / 64, ~uint64_t{0});

    const auto base = base_primes_upto(isqrt_u64(hi - 1));
    auto clear = [&](uint64_t n) {
        const uint64_t i = n - lo;
        table.words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    };

    for (uint64_t seg_lo = lo; seg_lo < hi; ) {
        const uint64_t seg_hi =
            (hi - seg_lo > cfg.segment_size) ? seg_lo + cfg.segment_size : hi;
        for (uint64_t p : base) {
            // k*p for k in [k_lo, k_hi] are the multiples of p in the segment;
            // k starts at p so p itself is never cleared.
            const uint64_t k_hi = (seg_hi - 1) / p;
            if (p > k_hi) break;  // p*p beyond the segment; later p only larger
            uint64_t k_lo = seg_lo / p + (seg_lo % p != 0 ? 1 : 0);
            k_lo = std::max(k_lo, p);
            for (uint64_t k = k_lo; k <= k_hi; ++k) clear(k * p);
        }
        seg_lo = seg_hi;
    }

    if (lo == 0) clear(0);
    if (lo <= 1 && 1 < hi) clear(1);

    // zero tail bits past the span so popcounts stay exact
    if ((span & 63) != 0)
        table.words_.back() &= ~uint64_t{0} >> (64 - (span & 63));
    return table;
}

bool is_prime_u64(uint64_t n) {
    // Deterministic base set for the full 64-bit range.
    static constexpr uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (uint64_t p : kBases) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    const int s = std::countr_zero(n - 1);
    const uint64_t d = (n - 1) >> s;
    for (uint64_t a : kBases) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(uint64_t n, const PrimeTable* table) {
    if (table != nullptr && table->covers(n)) return table->is_prime(n);
    return is_prime_u64(n);
}

ResidueClass classify_mod4(uint64_t p, const PrimeTable* table) {
    if (!is_prime(p, table))
        throw std::domain_error("classify_mod4: " + std::to_string(p) + " is not prime");
    if (p == 2) return ResidueClass::Two;
    return p % 4 == 1 ? ResidueClass::OneMod4 : ResidueClass::ThreeMod4;
}

CensusRow residue_census(const PrimeTable& table, uint64_t limit) {
    if (limit < 2)
        throw std::invalid_argument("residue_census: limit must be >= 2");
    if (table.lo() != 0 || table.hi() <= limit)
        throw std::out_of_range("residue_census: table must cover [0, limit]");
    CensusRow row;
    row.limit = limit;
    table.scan_primes(2, limit + 1, [&](uint64_t p) {
        ++row.total;
        if (p % 4 == 1)
            ++row.one_mod_4;
        else if (p % 4 == 3)
            ++row.three_mod_4;
        return true;
    });
    return row;
}

}  // namespace goldbach
