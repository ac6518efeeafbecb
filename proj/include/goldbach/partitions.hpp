#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "goldbach/primes.hpp"

namespace goldbach {

// Prime pair with p1 <= p2 and p1 + p2 = n.
struct GoldbachPartition {
    uint64_t n = 0;
    uint64_t p1 = 0;
    uint64_t p2 = 0;

    friend bool operator==(const GoldbachPartition&, const GoldbachPartition&) = default;
};

// Decomposition n = (P + I) + (P - I) around the midpoint P = n/2.
// offset == 0 exactly when the midpoint itself is prime; for offset > 0 the
// offset and midpoint have opposite parity and are coprime.
struct MidpointWitness {
    uint64_t n = 0;
    uint64_t midpoint = 0;
    uint64_t offset = 0;
    uint64_t prime_hi = 0;  // midpoint + offset
    uint64_t prime_lo = 0;  // midpoint - offset

    friend bool operator==(const MidpointWitness&, const MidpointWitness&) = default;
};

// All partitions of even n >= 4, ascending by the smaller prime. An empty
// result is not an error: it is a counterexample candidate that range drivers
// must surface as an anomaly. Requires a table covering [0, n].
std::vector<GoldbachPartition> partitions(const PrimeTable& table, uint64_t n);

// Smallest-p1 partition, or nothing when none exists.
std::optional<GoldbachPartition> first_partition(const PrimeTable& table, uint64_t n);

// All midpoint witnesses of even n >= 4, ascending by offset. Found by its own
// scan over primes below the midpoint, descending, so agreement with
// partitions() is a checkable fact rather than a construction.
std::vector<MidpointWitness> midpoint_witnesses(const PrimeTable& table, uint64_t n);

// Most balanced witness (smallest offset), or nothing.
std::optional<MidpointWitness> first_midpoint_witness(const PrimeTable& table, uint64_t n);

// Half-sum and half-difference of odd a >= c: ((a+c)/2, (a-c)/2). The halves
// reassemble to a and c; for a > c exactly one of the two is even.
std::pair<uint64_t, uint64_t> parity_split(uint64_t a, uint64_t c);

// True iff n has at least one Goldbach partition.
bool is_goldbach(const PrimeTable& table, uint64_t n);

// The bijection between the two representations: offset = p2 - n/2.
MidpointWitness to_witness(const GoldbachPartition& part);
GoldbachPartition to_partition(const MidpointWitness& witness);

}  // namespace goldbach
