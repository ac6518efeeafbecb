#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "goldbach/primes.hpp"

namespace goldbach {

// Witness built from primes of the forms 4m+sign1 and 4n+sign2 at level
// l = m + n. Opposite signs (mixed) sum to 4l, an even-midpoint target;
// equal signs (matched) sum to 2(2l + sign), an odd-midpoint target.
struct FormWitness {
    uint64_t level = 0;  // m + n
    uint64_t m = 0;
    uint64_t n = 0;
    int sign1 = +1;
    int sign2 = +1;
    uint64_t p1 = 0;  // 4m + sign1
    uint64_t p2 = 0;  // 4n + sign2

    uint64_t target() const { return p1 + p2; }
    bool mixed() const { return sign1 != sign2; }

    friend bool operator==(const FormWitness&, const FormWitness&) = default;
};

// 4(m+n) = (4m+1) + (4n-1), midpoint 2(m+n) even. Throws std::domain_error
// naming the composite form when a precondition fails.
std::pair<uint64_t, FormWitness> construct_even_target(const PrimeTable& table,
                                                       uint64_t m, uint64_t n);

// 2(2(m+n)+sign) = (4m+sign) + (4n+sign), midpoint 2(m+n)+sign odd.
std::pair<uint64_t, FormWitness> construct_odd_target(const PrimeTable& table,
                                                      uint64_t m, uint64_t n, int sign);

// Smallest-m mixed witness at the level: 4m+1 and 4(level-m)-1 both prime.
// Empty means a counterexample candidate. Requires level >= 2 and a table
// covering [0, 4*level].
std::optional<FormWitness> conjecture2_witness(const PrimeTable& table, uint64_t level);

// Matched witness for an odd target midpoint >= 5; the witness sums to
// 2*target_midpoint. The +1 branch at level (target-1)/2 is tried first, then
// the -1 branch at level (target+1)/2; smallest m within the first branch
// that succeeds. Requires a table covering [0, 2*target_midpoint].
std::optional<FormWitness> conjecture3_witness(const PrimeTable& table,
                                               uint64_t target_midpoint);

// Matched witness constrained to one level: equal signs, m + n = level.
// Sign +1 is tried before -1, smallest m within a sign.
std::optional<FormWitness> matched_witness(const PrimeTable& table, uint64_t level);

struct Conjecture4Result {
    std::optional<FormWitness> mixed;
    std::optional<FormWitness> matched;
    bool complete() const { return mixed.has_value() && matched.has_value(); }
};

// Both halves at one level: a mixed witness and a matched witness.
Conjecture4Result conjecture4_verify(const PrimeTable& table, uint64_t level);

struct IdentityViolation {
    int property = 0;  // 1..8
    uint64_t m = 0, n = 0, l = 0, k = 0;
};

struct IdentityReport {
    uint64_t bound = 0;
    uint64_t checked = 0;
    std::vector<IdentityViolation> violations;
    bool passed() const { return violations.empty(); }
};

// The eight form identities: (1)-(7) checked as integer biconditionals over
// all positive indices up to bound, (8) as the coprimality of midpoint and
// offset whenever both forms are prime and distinct. Requires a table
// covering [0, 4*bound + 2].
IdentityReport identity_suite(const PrimeTable& table, uint64_t bound);

}  // namespace goldbach
