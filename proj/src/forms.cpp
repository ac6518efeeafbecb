#include "goldbach/forms.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace goldbach {

namespace {

uint64_t form_value(uint64_t index, int sign) {
    return sign > 0 ? 4 * index + 1 : 4 * index - 1;
}

void require_positive_indices(uint64_t m, uint64_t n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("form indices must be positive");
}

void require_sign(int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign must be +1 or -1");
}

void require_form_prime(const PrimeTable& table, uint64_t index, int sign, const char* name) {
    const uint64_t value = form_value(index, sign);
    if (!is_prime(value, &table))
        throw std::domain_error(std::string("form 4") + name + (sign > 0 ? "+1 = " : "-1 = ") +
                                std::to_string(value) + " is not prime");
}

void require_level_coverage(const PrimeTable& table, uint64_t level) {
    if (level < 2)
        throw std::invalid_argument("level must be >= 2");
    if (table.lo() != 0 || table.hi() <= 4 * level)
        throw std::out_of_range("prime table must cover [0, 4*level]");
}

// Smallest-m matched witness at one level for one sign, or nothing.
std::optional<FormWitness> matched_at_level(const PrimeTable& table, uint64_t level, int sign) {
    for (uint64_t m = 1; m < level; ++m) {
        const uint64_t n = level - m;
        if (table.is_prime(form_value(m, sign)) && table.is_prime(form_value(n, sign)))
            return construct_odd_target(table, m, n, sign).second;
    }
    return std::nullopt;
}

}  // namespace

std::pair<uint64_t, FormWitness> construct_even_target(const PrimeTable& table,
                                                       uint64_t m, uint64_t n) {
    require_positive_indices(m, n);
    require_form_prime(table, m, +1, "m");
    require_form_prime(table, n, -1, "n");
    const FormWitness witness{m + n, m, n, +1, -1, form_value(m, +1), form_value(n, -1)};
    return {4 * (m + n), witness};
}

std::pair<uint64_t, FormWitness> construct_odd_target(const PrimeTable& table,
                                                      uint64_t m, uint64_t n, int sign) {
    require_positive_indices(m, n);
    require_sign(sign);
    require_form_prime(table, m, sign, "m");
    require_form_prime(table, n, sign, "n");
    const FormWitness witness{m + n, m, n, sign, sign, form_value(m, sign), form_value(n, sign)};
    const uint64_t target = sign > 0 ? 4 * (m + n) + 2 : 4 * (m + n) - 2;
    return {target, witness};
}

std::optional<FormWitness> conjecture2_witness(const PrimeTable& table, uint64_t level) {
    require_level_coverage(table, level);
    for (uint64_t m = 1; m < level; ++m) {
        const uint64_t n = level - m;
        if (table.is_prime(form_value(m, +1)) && table.is_prime(form_value(n, -1)))
            return construct_even_target(table, m, n).second;
    }
    return std::nullopt;
}

std::optional<FormWitness> conjecture3_witness(const PrimeTable& table,
                                               uint64_t target_midpoint) {
    if (target_midpoint < 5 || target_midpoint % 2 == 0)
        throw std::invalid_argument("target midpoint must be odd and >= 5");
    if (table.lo() != 0 || table.hi() <= 2 * target_midpoint)
        throw std::out_of_range("prime table must cover [0, 2*target]");
    // Matched plus-forms at level l sum to 2(2l+1), minus-forms to 2(2l-1),
    // so one odd target is served by two different levels.
    if (auto witness = matched_at_level(table, (target_midpoint - 1) / 2, +1))
        return witness;
    return matched_at_level(table, (target_midpoint + 1) / 2, -1);
}

std::optional<FormWitness> matched_witness(const PrimeTable& table, uint64_t level) {
    require_level_coverage(table, level);
    if (auto witness = matched_at_level(table, level, +1)) return witness;
    return matched_at_level(table, level, -1);
}

Conjecture4Result conjecture4_verify(const PrimeTable& table, uint64_t level) {
    return {conjecture2_witness(table, level), matched_witness(table, level)};
}

IdentityReport identity_suite(const PrimeTable& table, uint64_t bound) {
    if (bound < 1)
        throw std::invalid_argument("identity_suite: bound must be >= 1");
    if (table.lo() != 0 || table.hi() <= 4 * bound + 2)
        throw std::out_of_range("prime table must cover [0, 4*bound + 2]");

    IdentityReport report;
    report.bound = bound;
    auto fail = [&](int property, uint64_t m, uint64_t n, uint64_t l, uint64_t k) {
        report.violations.push_back({property, m, n, l, k});
    };

    for (uint64_t m = 1; m <= bound; ++m)
        for (uint64_t n = 1; n <= bound; ++n)
            for (uint64_t l = 1; l <= bound; ++l)
                for (uint64_t k = 1; k <= bound; ++k) {
                    report.checked += 3;
                    // (1) matched-plus sum vs matched-minus sum shifts the level by one
                    if ((l + k == m + n + 1) !=
                        ((4 * m + 1) + (4 * n + 1) == (4 * l - 1) + (4 * k - 1)))
                        fail(1, m, n, l, k);
                    // (2) mixed sums agree at equal levels, both orders
                    {
                        const uint64_t lhs = (4 * m + 1) + (4 * n - 1);
                        const bool same_level = l + k == m + n;
                        if (same_level != (lhs == (4 * l + 1) + (4 * k - 1)) ||
                            same_level != (lhs == (4 * l - 1) + (4 * k + 1)))
                            fail(2, m, n, l, k);
                    }
                    // (3) matched-plus sums agree exactly at equal levels
                    if ((l + k == m + n) !=
                        ((4 * m + 1) + (4 * n + 1) == (4 * l + 1) + (4 * k + 1)))
                        fail(3, m, n, l, k);
                }

    for (uint64_t m = 1; m <= bound; ++m)
        for (uint64_t n = 1; n <= bound; ++n) {
            // (4) doubling an odd midpoint pins it to 2(m+n)+1
            for (uint64_t i = 1; i <= 4 * (m + n) + 3; i += 2) {
                ++report.checked;
                if ((2 * i == 4 * (m + n) + 2) != (i == 2 * (m + n) + 1))
                    fail(4, m, n, i, 0);
            }
            // (5) doubling an even midpoint pins it to 2(m+n)
            for (uint64_t p = 2; p <= 4 * (m + n) + 2; p += 2) {
                ++report.checked;
                if ((2 * p == 4 * (m + n)) != (p == 2 * (m + n)))
                    fail(5, m, n, p, 0);
            }
        }

    // (6) and (7) use the gaps 2(m-n) and 2(m-n)+1; both relations are
    // symmetric in the pair, so scanning m >= n keeps the gaps nonnegative.
    for (uint64_t m = 1; m <= bound; ++m)
        for (uint64_t n = 1; n <= m; ++n) {
            const uint64_t even_gap = 2 * (m - n);      // P of (6)
            const uint64_t odd_gap = 2 * (m - n) + 1;   // I of (7)
            for (uint64_t i = 1; i <= 4 * (m + n) + 3; i += 2) {
                ++report.checked;
                const bool lhs = i == 2 * (m + n) + 1;
                const bool rhs = i >= even_gap && i + even_gap == 4 * m + 1 &&
                                 i - even_gap == 4 * n + 1;
                if (lhs != rhs) fail(6, m, n, i, 0);
            }
            for (uint64_t p = 2; p <= 4 * (m + n) + 2; p += 2) {
                ++report.checked;
                const bool lhs = p == 2 * (m + n);
                const bool rhs = p >= odd_gap && p + odd_gap == 4 * m + 1 &&
                                 p - odd_gap == 4 * n - 1;
                if (lhs != rhs) fail(7, m, n, p, 0);
            }
            // (8) prime forms force midpoint and offset coprime (distinct primes)
            if (m != n && table.is_prime(4 * m + 1) && table.is_prime(4 * n + 1)) {
                ++report.checked;
                if (std::gcd(2 * (m + n) + 1, even_gap) != 1) fail(8, m, n, 1, 0);
            }
            if (table.is_prime(4 * m + 1) && table.is_prime(4 * n - 1)) {
                ++report.checked;
                if (std::gcd(2 * (m + n), odd_gap) != 1) fail(8, m, n, 2, 0);
            }
        }

    return report;
}

}  // namespace goldbach
