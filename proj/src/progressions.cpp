#include "goldbach/progressions.hpp"

#include <numeric>
#include <stdexcept>

namespace goldbach {

namespace {

void require_direction(int direction) {
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("direction must be +1 or -1");
}

void require_table_base(const PrimeTable& table, uint64_t needed) {
    if (table.lo() != 0 || table.hi() <= needed)
        throw std::out_of_range("prime table too small for this scan");
}

}  // namespace

bool ProgressionSpec::coprime() const {
    return std::gcd(2 * t, offset) == 1;
}

ProgressionReport progression_primes(const PrimeTable& table, const ProgressionSpec& spec,
                                     uint64_t n_max) {
    require_direction(spec.direction);
    if (spec.t < 1)
        throw std::invalid_argument("progression step t must be >= 1");
    if (spec.offset % 2 == 0 || spec.offset > 2 * spec.t - 1)
        throw std::invalid_argument("offset must be odd and within [1, 2t-1]");
    if (n_max < 1)
        throw std::invalid_argument("n_max must be >= 1");
    require_table_base(table, 2 * spec.t * n_max + spec.offset);

    ProgressionReport report;
    report.spec = spec;
    report.n_max = n_max;
    report.degenerate = !spec.coprime();
    for (uint64_t n = 1; n <= n_max; ++n) {
        const uint64_t base = 2 * spec.t * n;
        if (spec.direction < 0 && base < spec.offset + 2) continue;
        const uint64_t value = spec.direction > 0 ? base + spec.offset : base - spec.offset;
        if (table.is_prime(value)) report.hits.push_back({n, value});
    }
    return report;
}

OffsetScan offset_witnesses(const PrimeTable& table, uint64_t t, uint64_t n, int direction) {
    require_direction(direction);
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    const uint64_t base = 2 * t * n;
    require_table_base(table, direction > 0 ? 2 * base : base);

    OffsetScan scan;
    for (uint64_t i = 1; i < base; i += 2) {
        const uint64_t value = direction > 0 ? base + i : base - i;
        if (value >= 2 && table.is_prime(value))
            scan.witnesses.push_back({t, n, i, direction, value});
    }
    if (!scan.witnesses.empty())
        scan.within_statement_window = scan.witnesses.front().offset <= 2 * t - 1;
    return scan;
}

std::optional<OffsetWitness> first_offset_witness(const PrimeTable& table, uint64_t t,
                                                  uint64_t n, int direction) {
    require_direction(direction);
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    const uint64_t base = 2 * t * n;
    require_table_base(table, direction > 0 ? 2 * base : base);

    for (uint64_t i = 1; i < base; i += 2) {
        const uint64_t value = direction > 0 ? base + i : base - i;
        if (value >= 2 && table.is_prime(value))
            return OffsetWitness{t, n, i, direction, value};
    }
    return std::nullopt;
}

CollapseCheck gcd_collapse_check(const PrimeTable& table, uint64_t n, uint64_t offset) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (offset % 2 == 0 || offset >= 2 * n)
        throw std::invalid_argument("offset must be odd and within [1, 2n)");
    require_table_base(table, 2 * n);

    CollapseCheck check;
    check.n = n;
    check.offset = offset;
    check.gcd_value = std::gcd(2 * n, offset);
    check.candidate = 2 * n - offset;
    if (check.gcd_value == 1 || check.candidate < 2 || !table.is_prime(check.candidate))
        check.outcome = CollapseOutcome::Vacuous;
    else
        check.outcome = check.candidate == check.gcd_value ? CollapseOutcome::CollapseConfirmed
                                                           : CollapseOutcome::Violation;
    return check;
}

std::optional<OffsetWitness> coprime_witness(const PrimeTable& table, uint64_t n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    require_table_base(table, 2 * n);

    for (uint64_t i = 1; i < 2 * n; i += 2) {
        if (std::gcd(2 * n, i) != 1) continue;
        const uint64_t value = 2 * n - i;
        if (value >= 2 && table.is_prime(value))
            return OffsetWitness{1, n, i, -1, value};
    }
    return std::nullopt;
}

ProgressionSpec reduce_odd_progression(uint64_t odd_base, uint64_t even_shift, int direction) {
    require_direction(direction);
    if (odd_base % 2 == 0 || odd_base < 1)
        throw std::invalid_argument("base must be odd and >= 1");
    if (even_shift % 2 != 0)
        throw std::invalid_argument("shift must be even");
    if (even_shift >= odd_base)
        throw std::invalid_argument("shift must be smaller than the base");
    // base*(2m+1) + d*shift = 2*base*m + (base + d*shift); the residue stays
    // odd and inside [1, 2*base - 1] because shift < base.
    const uint64_t residue =
        direction > 0 ? odd_base + even_shift : odd_base - even_shift;
    return {odd_base, residue, +1};
}

std::optional<OddPairWitness> odd_pair_witness(const PrimeTable& table, uint64_t odd_factor,
                                               uint64_t odd_index, bool allow_zero) {
    if (odd_factor % 2 == 0 || odd_index % 2 == 0)
        throw std::invalid_argument("factor and index must both be odd");
    const uint64_t center = odd_factor * odd_index;
    if (center < 3) throw std::invalid_argument("center must be >= 3");
    require_table_base(table, 2 * center);

    for (uint64_t shift = allow_zero ? 0 : 2; shift + 2 <= center; shift += 2) {
        const uint64_t lo = center - shift;
        const uint64_t hi = center + shift;
        if (table.is_prime(lo) && table.is_prime(hi))
            return OddPairWitness{center, shift, lo, hi};
    }
    return std::nullopt;
}

}  // namespace goldbach
