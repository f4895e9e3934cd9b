#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tmatch/errors.hpp"

namespace tmatch {

// Ground set for set families: elements are ids 0..n-1.
struct Universe {
    int n = 1;
};

// Equal-size sets with non-negative integer weights. Sets are sorted id
// lists; duplicates are rejected by validate().
struct WeightedSetFamily {
    int set_size = 0;
    std::vector<std::vector<int>> sets;
    std::vector<long long> weights;

    size_t size() const { return sets.size(); }
    void push(std::vector<int> set, long long weight);
    void validate(const Universe& u) const;  // throws std::invalid_argument
};

struct RepResult {
    std::vector<int> indices;  // kept members, in processing order
    int q = 0;
};

struct RepOptions {
    std::ostream* audit = nullptr;  // per-set keep/discard decisions
};

// Arithmetic mod a 64-bit prime.
class PrimeField {
public:
    explicit PrimeField(uint64_t modulus);
    uint64_t modulus() const { return p_; }
    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p_; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p_ - b) % p_; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % p_);
    }
    uint64_t pow(uint64_t base, uint64_t exp) const;
    uint64_t inv(uint64_t a) const;  // a != 0
    static bool is_prime(uint64_t x);
    static uint64_t next_prime_after(uint64_t x);

private:
    uint64_t p_;
};

// C(n, k) saturating at 2^63-1.
unsigned long long binomial(int n, int k);

// Largest row-subset level the fingerprint computation touches.
unsigned long long max_fingerprint_dim(int r, int p);

// Dimension cap for the fingerprint space; beyond it the computation is
// refused with a GuardError rather than attempted.
inline constexpr unsigned long long kRepDimGuard = 5'000'000;
// Cap on projected basis memory in bytes.
inline constexpr unsigned long long kRepMemGuard = 1'500'000'000;

// Max q-representative over the uniform matroid U_{p+q,n}: keeps a
// subfamily of size <= C(p+q, p) such that any set of the family that is
// disjoint from some Y (|Y| <= q) is matched in the subfamily by a set
// that is also disjoint from Y and of weight at least as large.
//
// Sets are processed in non-increasing weight order (ties: input order)
// and kept iff their exterior-algebra fingerprint is linearly independent
// of the fingerprints kept so far.
RepResult representative(const WeightedSetFamily& family, int q, const Universe& universe,
                         const RepOptions& options = {});

struct UnionSet {
    std::vector<int> elements;  // sorted
    long long weight = 0;
    std::vector<int> parts;  // indices into the input family, sorted
};

struct UnionRepResult {
    std::vector<UnionSet> sets;
    int alpha = 0;
    int beta = 0;
    int gamma = 0;
    int r = 0;
};

// Max beta*gamma-representative of the family of all alpha-fold disjoint
// unions of members of h, computed iteratively without materializing the
// union family. Weights of union sets are sums of member weights.
UnionRepResult iterated_union_representative(const WeightedSetFamily& h, int alpha, int beta,
                                             const Universe& universe,
                                             const RepOptions& options = {});

// Exhaustive oracle for the representative property. Throws GuardError
// when more than 10^6 candidate Y sets would be needed.
bool verify_representative(const WeightedSetFamily& full, const std::vector<int>& sub_indices,
                           int q, const Universe& universe);

}  // namespace tmatch
