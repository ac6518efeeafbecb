#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "goldbach/primes.hpp"

namespace goldbach {

// Arithmetic progression 2tn + direction*offset, indexed by n >= 1.
struct ProgressionSpec {
    uint64_t t = 1;
    uint64_t offset = 1;
    int direction = 1;

    bool coprime() const;

    friend bool operator==(const ProgressionSpec&, const ProgressionSpec&) = default;
};

struct ProgressionHit {
    uint64_t n = 0;
    uint64_t value = 0;

    friend bool operator==(const ProgressionHit&, const ProgressionHit&) = default;
};

// degenerate marks a non-coprime spec: every term shares a factor with 2t,
// so the scan can hit at most the shared factor itself.
struct ProgressionReport {
    ProgressionSpec spec;
    uint64_t n_max = 0;
    bool degenerate = false;
    std::vector<ProgressionHit> hits;
};

// Odd offset I with 2tn + direction*I prime.
struct OffsetWitness {
    uint64_t t = 0;
    uint64_t n = 0;
    uint64_t offset = 0;
    int direction = 1;
    uint64_t value = 0;

    friend bool operator==(const OffsetWitness&, const OffsetWitness&) = default;
};

// within_statement_window: the smallest witness offset already lies in
// [1, 2t-1], the window the existence claim quantifies over.
struct OffsetScan {
    std::vector<OffsetWitness> witnesses;
    bool within_statement_window = false;
};

enum class CollapseOutcome { Vacuous, CollapseConfirmed, Violation };

// For g = gcd(2n, offset) > 1, a prime 2n - offset must equal g itself.
// Vacuous: g == 1 or 2n - offset composite. Violation should be impossible.
struct CollapseCheck {
    uint64_t n = 0;
    uint64_t offset = 0;
    uint64_t gcd_value = 0;
    uint64_t candidate = 0;
    CollapseOutcome outcome = CollapseOutcome::Vacuous;

    friend bool operator==(const CollapseCheck&, const CollapseCheck&) = default;
};

// Even shift around an odd center with both center-shift and center+shift prime.
struct OddPairWitness {
    uint64_t center = 0;
    uint64_t shift = 0;
    uint64_t prime_lo = 0;
    uint64_t prime_hi = 0;

    friend bool operator==(const OddPairWitness&, const OddPairWitness&) = default;
};

// Scan the progression at n = 1..n_max and collect the prime terms.
// Requires odd offset in [1, 2t-1]; table must cover every term.
ProgressionReport progression_primes(const PrimeTable& table, const ProgressionSpec& spec,
                                     uint64_t n_max);

// All odd offsets I in [1, 2tn) with 2tn + direction*I prime, ascending.
// Requires n >= 2 so the scan window strictly contains [1, 2t-1].
OffsetScan offset_witnesses(const PrimeTable& table, uint64_t t, uint64_t n, int direction);

// Smallest such offset only.
std::optional<OffsetWitness> first_offset_witness(const PrimeTable& table, uint64_t t,
                                                  uint64_t n, int direction);

// Classify one (n, offset) pair under the shared-factor collapse rule.
// Requires n >= 2 and odd offset in [1, 2n).
CollapseCheck gcd_collapse_check(const PrimeTable& table, uint64_t n, uint64_t offset);

// Smallest odd offset coprime to 2n with 2n - offset prime, for n >= 2.
std::optional<OffsetWitness> coprime_witness(const PrimeTable& table, uint64_t n);

// Rewrite the odd-indexed progression odd_base*(2m+1) + direction*even_shift
// as an even-step progression in m. Requires odd base, even shift < base.
ProgressionSpec reduce_odd_progression(uint64_t odd_base, uint64_t even_shift, int direction);

// Smallest even shift pairing primes around center = odd_factor * odd_index.
// allow_zero admits shift 0 (center itself prime, counted twice).
std::optional<OddPairWitness> odd_pair_witness(const PrimeTable& table, uint64_t odd_factor,
                                               uint64_t odd_index, bool allow_zero = true);

}  // namespace goldbach
