#include "goldbach/partitions.hpp"

#include <stdexcept>
#include <string>

namespace goldbach {

namespace {

void require_even_target(const PrimeTable& table, uint64_t n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("expected an even target >= 4, got " + std::to_string(n));
    if (table.lo() != 0 || table.hi() <= n)
        throw std::out_of_range("prime table must cover [0, n]");
}

}  // namespace

std::vector<GoldbachPartition> partitions(const PrimeTable& table, uint64_t n) {
    require_even_target(table, n);
    std::vector<GoldbachPartition> out;
    table.scan_primes(2, n / 2 + 1, [&](uint64_t p) {
        if (table.is_prime(n - p)) out.push_back({n, p, n - p});
        return true;
    });
    return out;
}

std::optional<GoldbachPartition> first_partition(const PrimeTable& table, uint64_t n) {
    require_even_target(table, n);
    std::optional<GoldbachPartition> found;
    table.scan_primes(2, n / 2 + 1, [&](uint64_t p) {
        if (table.is_prime(n - p)) {
            found = GoldbachPartition{n, p, n - p};
            return false;
        }
        return true;
    });
    return found;
}

std::vector<MidpointWitness> midpoint_witnesses(const PrimeTable& table, uint64_t n) {
    require_even_target(table, n);
    const uint64_t midpoint = n / 2;
    std::vector<MidpointWitness> out;
    // q = midpoint - offset runs downward, so offsets come out ascending.
    table.scan_primes_desc(2, midpoint + 1, [&](uint64_t q) {
        if (table.is_prime(n - q)) out.push_back({n, midpoint, midpoint - q, n - q, q});
        return true;
    });
    return out;
}

std::optional<MidpointWitness> first_midpoint_witness(const PrimeTable& table, uint64_t n) {
    require_even_target(table, n);
    const uint64_t midpoint = n / 2;
    std::optional<MidpointWitness> found;
    table.scan_primes_desc(2, midpoint + 1, [&](uint64_t q) {
        if (table.is_prime(n - q)) {
            found = MidpointWitness{n, midpoint, midpoint - q, n - q, q};
            return false;
        }
        return true;
    });
    return found;
}

std::pair<uint64_t, uint64_t> parity_split(uint64_t a, uint64_t c) {
    if (a % 2 == 0 || c % 2 == 0)
        throw std::invalid_argument("parity_split: both inputs must be odd");
    if (a < c)
        throw std::invalid_argument("parity_split: requires a >= c");
    return {(a + c) / 2, (a - c) / 2};
}

bool is_goldbach(const PrimeTable& table, uint64_t n) {
    return first_partition(table, n).has_value();
}

MidpointWitness to_witness(const GoldbachPartition& part) {
    const uint64_t midpoint = part.n / 2;
    return {part.n, midpoint, part.p2 - midpoint, part.p2, part.p1};
}

GoldbachPartition to_partition(const MidpointWitness& witness) {
    return {witness.n, witness.prime_lo, witness.prime_hi};
}

}  // namespace goldbach
