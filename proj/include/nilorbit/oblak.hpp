#ifndef NILORBIT_OBLAK_HPP
#define NILORBIT_OBLAK_HPP

#include <set>
#include <vector>

#include "nilorbit/partition.hpp"

namespace nilorbit {

/// One admissible pair (i, eps) of the run-index maximization, together
/// with its value 2 q_{i-1} + mu_{q_i} (q_i - q_{i-1}) + eps mu_{q_{i+1}}
/// (q_{i+1} - q_i). eps = 1 is admissible only when run i+1 exists and its
/// value is exactly one less than run i's.
struct OblakCandidate {
    int i = 0;
    int eps = 0;
    int value = 0;

    friend bool operator==(const OblakCandidate&, const OblakCandidate&) = default;
};

enum class TieBreakPolicy {
    SmallestIndexPreferMerge,   // smallest i, then eps = 1 first (default)
    SmallestIndexPreferSingle,  // smallest i, then eps = 0 first
};

/// One level of the recursion Q(B) = (omega1, Q(B_hat)).
struct OblakStep {
    int omega1 = 0;
    int i_tilde = 0;
    int eps_tilde = 0;
    Partition b_hat;
};

std::vector<OblakCandidate> candidates(const Partition& b);

/// Maximum nilpotency index over the nilpotent part of the centralizer;
/// the head of Q(B).
int omega1(const Partition& b);

OblakStep select_step(const Partition& b,
                      TieBreakPolicy policy = TieBreakPolicy::SmallestIndexPreferMerge);

/// Contraction: drop runs i and (if eps = 1) i+1 entirely, lower every part
/// of runs 1..i-1 by 2, drop zero parts. Accepts non-maximizing candidates
/// so that the branching audit can explore them; throws if the candidate
/// does not belong to b.
Partition hat_of(const Partition& b, const OblakCandidate& c);

/// The maximum nilpotent Jordan type commuting with type b.
Partition q_of(const Partition& b,
               TieBreakPolicy policy = TieBreakPolicy::SmallestIndexPreferMerge);

/// Results of the recursion over every maximizing candidate at every level.
/// Always a singleton (Khatami's uniqueness); asserted by the test suite.
std::set<Partition> q_all_choices(const Partition& b);

struct QTraceLevel {
    Partition b;
    std::vector<OblakCandidate> level_candidates;
    int i_tilde = 0;
    int eps_tilde = 0;
    int omega1 = 0;
    Partition b_hat;
};

std::vector<QTraceLevel> q_trace(const Partition& b,
                                 TieBreakPolicy policy = TieBreakPolicy::SmallestIndexPreferMerge);

}  // namespace nilorbit

#endif
