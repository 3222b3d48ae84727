#include "nilorbit/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nilorbit/oblak.hpp"

namespace nilorbit {

std::vector<Partition> dominance_maximal(const std::vector<Partition>& types) {
    std::vector<Partition> maximal;
    for (const Partition& t : types) {
        bool dominated = false;
        for (const Partition& other : types)
            if (other != t && dominated_by(t, other)) { dominated = true; break; }
        if (!dominated && std::find(maximal.begin(), maximal.end(), t) == maximal.end())
            maximal.push_back(t);
    }
    return maximal;
}

VerificationReport sample_max_type(const Partition& b, PrimeModulus p, int k, uint64_t seed,
                                   PatternKind kind) {
    if (k < 1) throw std::invalid_argument("sample_max_type: need at least one sample");
    VerificationReport report;
    report.b = b;
    report.prime = p.p;
    report.samples = k;
    report.seed = seed;
    report.q = q_of(b);
    const PatternMatrix pattern = kind == PatternKind::SN ? sn_pattern(b) : se_pattern(b);
    for (int s = 0; s < k; ++s) {
        const FieldMatrix x =
            pattern_instantiate(pattern, p, derive_seed(seed, static_cast<uint64_t>(s)));
        const Partition type = jordan_type(x);
        ++report.observed[type];
        if (!dominated_by(type, report.q))
            report.violations.push_back("type " + to_string(type) +
                                        " is not dominated by Q(B) (sample " +
                                        std::to_string(s) + ")");
        if (type == report.q) report.attained = true;
    }
    std::vector<Partition> types;
    for (const auto& [type, count] : report.observed) types.push_back(type);
    report.max_observed = dominance_maximal(types);
    return report;
}

ExhaustiveResult exhaustive_max_type(const Partition& b, PrimeModulus p) {
    const PatternMatrix pattern = sn_pattern(b);
    const double bits = pattern.coordinate_count * std::log2(static_cast<double>(p.p));
    if (bits > 24.0)
        throw std::invalid_argument("exhaustive_max_type: enumeration budget exceeded");

    ExhaustiveResult result;
    result.b = b;
    result.prime = p.p;
    result.q = q_of(b);

    std::vector<uint32_t> values(static_cast<size_t>(pattern.coordinate_count), 0);
    FieldMatrix x(pattern.n, pattern.n, p);
    while (true) {
        for (int r = 0; r < pattern.n; ++r)
            for (int c = 0; c < pattern.n; ++c) {
                const int32_t id = pattern.coord(r, c);
                if (id >= 0) x.set(r, c, values[static_cast<size_t>(id)]);
            }
        const Partition type = jordan_type(x);
        ++result.observed[type];
        ++result.total;
        if (!dominated_by(type, result.q))
            result.violations.push_back("type " + to_string(type) + " is not dominated by Q(B)");
        if (type == result.q) result.attained = true;

        // odometer over GF(p)^d
        size_t pos = 0;
        while (pos < values.size() && ++values[pos] == p.p) values[pos++] = 0;
        if (pos == values.size()) break;
    }
    return result;
}

RankEquivalenceReport rank_pattern_equivalence(const Partition& b, PrimeModulus p, int trials,
                                               uint64_t seed) {
    const PatternMatrix sn = sn_pattern(b);
    const PatternMatrix se = se_pattern(b);
    RankEquivalenceReport report{trials, 0};
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_seed(seed, static_cast<uint64_t>(t)));
        std::vector<int> row_idx, col_idx;
        while (row_idx.empty() || col_idx.empty()) {
            row_idx.clear();
            col_idx.clear();
            for (int i = 0; i < sn.n; ++i)
                if (rng.next() & 1) row_idx.push_back(i);
            for (int i = 0; i < sn.n; ++i)
                if (rng.next() & 1) col_idx.push_back(i);
        }
        const FieldMatrix xs = pattern_instantiate(sn, p, rng.next());
        const FieldMatrix xe = pattern_instantiate(se, p, rng.next());
        if (rank(xs.submatrix(row_idx, col_idx)) != rank(xe.submatrix(row_idx, col_idx)))
            ++report.mismatches;
    }
    return report;
}

InequalityReport prop_r2_check(const Partition& b, PrimeModulus p, int k, uint64_t seed) {
    const PatternMatrix pattern = sn_pattern(b);
    const std::vector<int> profile = rank_profile_of_partition(b);
    const int s_b = s_index(b);
    InequalityReport report{k, 0};
    for (int s = 0; s < k; ++s) {
        const FieldMatrix a =
            pattern_instantiate(pattern, p, derive_seed(seed, static_cast<uint64_t>(s)));
        const FieldMatrix a_s = mat_pow(a, s_b);
        FieldMatrix power = a_s;
        for (int m = 1;; ++m) {
            const int lhs = rank(power);
            const int rhs =
                m < static_cast<int>(profile.size()) ? profile[static_cast<size_t>(m)] : 0;
            if (lhs > rhs) {
                ++report.violations;
                break;
            }
            if (lhs == 0) break;
            power = mat_mul(power, a_s);
        }
    }
    return report;
}

BlockCountReport prop_r1_check(const Partition& b, PrimeModulus p, int k, uint64_t seed) {
    const PatternMatrix pattern = sn_pattern(b);
    BlockCountReport report{k, 0, r_index(b).r};
    for (int s = 0; s < k; ++s) {
        const FieldMatrix a =
            pattern_instantiate(pattern, p, derive_seed(seed, static_cast<uint64_t>(s)));
        if (jordan_type(a).size() == report.expected_blocks) ++report.attaining;
    }
    return report;
}

}  // namespace nilorbit
