#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace goldbach {

// Residue class of a prime mod 4. Only the prime 2 maps to Two; every odd
// prime is either 4k+1 (OneMod4) or 4k-1 (ThreeMod4), never both.
enum class ResidueClass { Two, OneMod4, ThreeMod4 };

// Counts of primes <= limit, split by residue class mod 4.
// Invariant: one_mod_4 + three_mod_4 + 1 == total for limit >= 2.
struct CensusRow {
    uint64_t limit = 0;
    uint64_t one_mod_4 = 0;    // pi(limit; 4, 1)
    uint64_t three_mod_4 = 0;  // pi(limit; 4, 3)
    uint64_t total = 0;        // pi(limit)

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct SieveConfig {
    uint64_t segment_size = uint64_t{1} << 20;  // integers per segment
    uint64_t max_segments = uint64_t{1} << 16;  // span budget = segment_size * max_segments
};

// Bit-per-integer primality table over [lo, hi): bit i is set iff lo + i is
// prime. Immutable once built; safe to share across threads.
class PrimeTable {
public:
    PrimeTable() = default;

    uint64_t lo() const { return lo_; }
    uint64_t hi() const { return hi_; }
    bool covers(uint64_t n) const { return n >= lo_ && n < hi_; }

    // Throws std::out_of_range when n is outside [lo, hi).
    bool is_prime(uint64_t n) const {
        if (!covers(n))
            throw std::out_of_range("PrimeTable: query outside [lo, hi)");
        return bit(n - lo_);
    }

    uint64_t count_primes() const;
    std::vector<uint64_t> primes() const;

    // Visit primes in [first, last) ascending; f returns false to stop.
    template <typename F>
    void scan_primes(uint64_t first, uint64_t last, F&& f) const {
        if (first < lo_) first = lo_;
        if (last > hi_) last = hi_;
        if (first >= last) return;
        const uint64_t b = first - lo_;
        const uint64_t e = last - lo_;
        const uint64_t w_hi = (e - 1) >> 6;
        uint64_t mask = ~uint64_t{0} << (b & 63);
        for (uint64_t w = b >> 6; w <= w_hi; ++w) {
            uint64_t word = words_[w] & mask;
            mask = ~uint64_t{0};
            if (w == w_hi && (e & 63) != 0)
                word &= ~uint64_t{0} >> (64 - (e & 63));
            while (word != 0) {
                const int tz = std::countr_zero(word);
                if (!f(lo_ + (w << 6) + uint64_t(tz))) return;
                word &= word - 1;
            }
        }
    }

    // Visit primes in [first, last) descending; f returns false to stop.
    template <typename F>
    void scan_primes_desc(uint64_t first, uint64_t last, F&& f) const {
        if (first < lo_) first = lo_;
        if (last > hi_) last = hi_;
        if (first >= last) return;
        const uint64_t b = first - lo_;
        const uint64_t e = last - lo_;
        const uint64_t w_lo = b >> 6;
        uint64_t w = (e - 1) >> 6;
        uint64_t mask = (e & 63) != 0 ? ~uint64_t{0} >> (64 - (e & 63)) : ~uint64_t{0};
        for (;;) {
            uint64_t word = words_[w] & mask;
            mask = ~uint64_t{0};
            if (w == w_lo) word &= ~uint64_t{0} << (b & 63);
            while (word != 0) {
                const int hb = 63 - std::countl_zero(word);
                if (!f(lo_ + (w << 6) + uint64_t(hb))) return;
                word ^= uint64_t{1} << hb;
            }
            if (w == w_lo) break;
            --w;
        }
    }

private:
    friend PrimeTable sieve_range(uint64_t lo, uint64_t hi, const SieveConfig& cfg);

    bool bit(uint64_t offset) const {
        return (words_[offset >> 6] >> (offset & 63)) & 1u;
    }

    uint64_t lo_ = 0;
    uint64_t hi_ = 0;
    std::vector<uint64_t> words_;
};

// Segmented sieve of Eratosthenes over [lo, hi). Memory stays bounded by one
// segment of bits plus the base primes up to sqrt(hi).
// Throws std::invalid_argument when lo > hi, std::length_error when the span
// exceeds segment_size * max_segments.
PrimeTable sieve_range(uint64_t lo, uint64_t hi, const SieveConfig& cfg = {});

// Deterministic Miller-Rabin over the full 64-bit unsigned range.
bool is_prime_u64(uint64_t n);

// Table answer where the table applies, deterministic test elsewhere.
bool is_prime(uint64_t n, const PrimeTable* table = nullptr);

// Residue class of the prime p. Throws std::domain_error when p is not prime.
ResidueClass classify_mod4(uint64_t p, const PrimeTable* table = nullptr);

// Exact census of primes <= limit per odd residue class mod 4.
// Requires limit >= 2 and a table covering [0, limit].
CensusRow residue_census(const PrimeTable& table, uint64_t limit);

}  // namespace goldbach
