#ifndef NILORBIT_VERIFIER_HPP
#define NILORBIT_VERIFIER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilorbit/centralizer.hpp"
#include "nilorbit/gf.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

enum class PatternKind { SN, SE };

/// Outcome of a Monte-Carlo sweep over instantiations of a nilpotent
/// pattern. Every observed type must sit below q in dominance order;
/// anything else lands in violations.
struct VerificationReport {
    Partition b;
    uint32_t prime = 0;
    int samples = 0;
    uint64_t seed = 0;
    Partition q;
    std::map<Partition, int> observed;
    std::vector<Partition> max_observed;  // dominance-maximal observed types
    bool attained = false;                // q seen at least once
    std::vector<std::string> violations;

    bool ok() const { return attained && violations.empty(); }
};

VerificationReport sample_max_type(const Partition& b, PrimeModulus p, int k, uint64_t seed,
                                   PatternKind kind = PatternKind::SN);

/// Enumerates every coordinate assignment of sn_pattern(b) over GF(p).
/// Requires coordinate_count * log2(p) <= 24.
struct ExhaustiveResult {
    Partition b;
    uint32_t prime = 0;
    long long total = 0;
    Partition q;
    std::map<Partition, long long> observed;
    bool attained = false;
    std::vector<std::string> violations;
};

ExhaustiveResult exhaustive_max_type(const Partition& b, PrimeModulus p);

/// Rank agreement between corresponding random submatrices of fresh SN and
/// SE instantiations (tied versus untied coordinates).
struct RankEquivalenceReport {
    int trials = 0;
    int mismatches = 0;
};

RankEquivalenceReport rank_pattern_equivalence(const Partition& b, PrimeModulus p, int trials,
                                               uint64_t seed);

/// rank (A^{s_B})^m <= rank J^m for sampled A and every m.
struct InequalityReport {
    int samples = 0;
    int violations = 0;
};

InequalityReport prop_r2_check(const Partition& b, PrimeModulus p, int k, uint64_t seed);

/// Generic block count: how many samples have exactly r_B Jordan blocks.
struct BlockCountReport {
    int samples = 0;
    int attaining = 0;
    int expected_blocks = 0;
};

BlockCountReport prop_r1_check(const Partition& b, PrimeModulus p, int k, uint64_t seed);

/// Dominance-maximal elements of a set of same-n partitions.
std::vector<Partition> dominance_maximal(const std::vector<Partition>& types);

}  // namespace nilorbit

#endif
