#include "doctest.h"

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "goldbach/partitions.hpp"
#include "goldbach/primes.hpp"
#include "oracles.hpp"

using goldbach::GoldbachPartition;
using goldbach::MidpointWitness;
using goldbach::PrimeTable;
using goldbach::sieve_range;

namespace {

std::vector<std::pair<uint64_t, uint64_t>> as_pairs(const std::vector<GoldbachPartition>& parts) {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (const auto& part : parts) out.push_back({part.p1, part.p2});
    return out;
}

}  // namespace

TEST_CASE("partition lists for small targets") {
    const PrimeTable table = sieve_range(0, 10001);
    using Pairs = std::vector<std::pair<uint64_t, uint64_t>>;
    CHECK(as_pairs(partitions(table, 4)) == Pairs{{2, 2}});
    CHECK(as_pairs(partitions(table, 6)) == Pairs{{3, 3}});
    CHECK(as_pairs(partitions(table, 8)) == Pairs{{3, 5}});
    CHECK(as_pairs(partitions(table, 10)) == Pairs{{3, 7}, {5, 5}});
    CHECK(as_pairs(partitions(table, 12)) == Pairs{{5, 7}});
    CHECK(as_pairs(partitions(table, 14)) == Pairs{{3, 11}, {7, 7}});
    CHECK(as_pairs(partitions(table, 16)) == Pairs{{3, 13}, {5, 11}});
    CHECK(as_pairs(partitions(table, 24)) == Pairs{{5, 19}, {7, 17}, {11, 13}});
    CHECK(as_pairs(partitions(table, 80)) == Pairs{{7, 73}, {13, 67}, {19, 61}, {37, 43}});
    CHECK(as_pairs(partitions(table, 100)) ==
          Pairs{{3, 97}, {11, 89}, {17, 83}, {29, 71}, {41, 59}, {47, 53}});
    CHECK(as_pairs(partitions(table, 8900)) == oracle::partitions(8900));
}

TEST_CASE("partitions match the oracle across a range") {
    const PrimeTable table = sieve_range(0, 2001);
    uint64_t mismatches = 0;
    for (uint64_t n = 4; n <= 2000; n += 2)
        if (as_pairs(partitions(table, n)) != oracle::partitions(n)) ++mismatches;
    CHECK(mismatches == 0);
}

TEST_CASE("midpoint witnesses for small targets") {
    const PrimeTable table = sieve_range(0, 101);
    const auto w4 = midpoint_witnesses(table, 4);
    REQUIRE(w4.size() == 1);
    CHECK(w4[0] == MidpointWitness{4, 2, 0, 2, 2});

    const auto w16 = midpoint_witnesses(table, 16);
    REQUIRE(w16.size() == 2);
    CHECK(w16[0] == MidpointWitness{16, 8, 3, 11, 5});
    CHECK(w16[1] == MidpointWitness{16, 8, 5, 13, 3});

    const auto w10 = midpoint_witnesses(table, 10);
    REQUIRE(w10.size() == 2);
    CHECK(w10[0] == MidpointWitness{10, 5, 0, 5, 5});
    CHECK(w10[1] == MidpointWitness{10, 5, 2, 7, 3});
}

TEST_CASE("partitions and witnesses are the same set, exhaustively") {
    const PrimeTable table = sieve_range(0, 10001);
    uint64_t faults = 0;
    for (uint64_t n = 4; n <= 10000; n += 2) {
        const auto parts = partitions(table, n);
        const auto wits = midpoint_witnesses(table, n);
        if (parts.empty() || parts.size() != wits.size()) {
            ++faults;
            continue;
        }
        const size_t count = parts.size();
        for (size_t i = 0; i < count; ++i) {
            const auto& part = parts[i];
            const auto& wit = wits[count - 1 - i];
            if (to_witness(part) != wit) ++faults;
            if (to_partition(wit) != part) ++faults;
            if (to_partition(to_witness(part)) != part) ++faults;
            if (to_witness(to_partition(wit)) != wit) ++faults;
        }
        for (size_t i = 1; i < count; ++i)
            if (wits[i].offset <= wits[i - 1].offset) ++faults;
    }
    CHECK(faults == 0);
}

TEST_CASE("witness structure invariants") {
    const PrimeTable table = sieve_range(0, 10001);
    uint64_t faults = 0;
    for (uint64_t n = 6; n <= 10000; n += 2) {
        const uint64_t mid = n / 2;
        for (const auto& w : midpoint_witnesses(table, n)) {
            if (w.midpoint != mid) ++faults;
            if (w.prime_hi != mid + w.offset || w.prime_lo != mid - w.offset) ++faults;
            if (!table.is_prime(w.prime_hi) || !table.is_prime(w.prime_lo)) ++faults;
            if (w.offset > 0) {
                if (std::gcd(w.midpoint, w.offset) != 1) ++faults;
                if (w.midpoint % 2 == w.offset % 2) ++faults;
            }
        }
        const auto first = first_midpoint_witness(table, n);
        if (!first) ++faults;
        else if ((first->offset == 0) != table.is_prime(mid)) ++faults;
    }
    CHECK(faults == 0);
}

TEST_CASE("first variants agree with the full lists") {
    const PrimeTable table = sieve_range(0, 10001);
    for (const uint64_t n : {uint64_t{4}, uint64_t{6}, uint64_t{100}, uint64_t{8900}}) {
        const auto part = first_partition(table, n);
        REQUIRE(part.has_value());
        CHECK(*part == partitions(table, n).front());
        const auto wit = first_midpoint_witness(table, n);
        REQUIRE(wit.has_value());
        CHECK(*wit == midpoint_witnesses(table, n).front());
        CHECK(is_goldbach(table, n));
    }
}

TEST_CASE("parity split") {
    CHECK(goldbach::parity_split(13, 3) == std::pair<uint64_t, uint64_t>{8, 5});
    CHECK(goldbach::parity_split(7, 7) == std::pair<uint64_t, uint64_t>{7, 0});
    uint64_t faults = 0;
    for (uint64_t a = 1; a <= 99; a += 2)
        for (uint64_t c = 1; c <= a; c += 2) {
            const auto [sum, diff] = goldbach::parity_split(a, c);
            if (sum + diff != a || sum - diff != c) ++faults;
            if (a != c && (sum % 2) == (diff % 2)) ++faults;
        }
    CHECK(faults == 0);
    CHECK_THROWS_AS(goldbach::parity_split(8, 3), std::invalid_argument);
    CHECK_THROWS_AS(goldbach::parity_split(3, 5), std::invalid_argument);
}

TEST_CASE("contract errors") {
    const PrimeTable table = sieve_range(0, 100);
    CHECK_THROWS_AS(partitions(table, 3), std::invalid_argument);
    CHECK_THROWS_AS(partitions(table, 7), std::invalid_argument);
    CHECK_THROWS_AS(partitions(table, 2), std::invalid_argument);
    CHECK_THROWS_AS(partitions(table, 100), std::out_of_range);
    const PrimeTable shifted = sieve_range(10, 100);
    CHECK_THROWS_AS(partitions(shifted, 50), std::out_of_range);
}
