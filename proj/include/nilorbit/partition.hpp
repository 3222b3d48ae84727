#ifndef NILORBIT_PARTITION_HPP
#define NILORBIT_PARTITION_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace nilorbit {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition (n = 0) is legal and acts as the base case of the Q recursion.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int k) const { return parts_[static_cast<size_t>(k)]; }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

enum class Dominance { Less, Equal, Greater, Incomparable };

/// Run-length encoding of a partition: distinct values mu_{q_1} > ... >
/// mu_{q_u} and the cumulative positions q_1 < ... < q_u with q_u = t.
struct RunEncoding {
    std::vector<int> values;
    std::vector<int> cumulative;
    int u = 0;

    /// q_i with the convention q_0 = 0 (i is 1-based).
    int q(int i) const { return i == 0 ? 0 : cumulative[static_cast<size_t>(i - 1)]; }
    int value(int i) const { return values[static_cast<size_t>(i - 1)]; }
    int multiplicity(int i) const { return q(i) - q(i - 1); }
};

/// Contiguous cover of the part indices by almost rectangular segments.
/// Segments are [begin, end) index ranges into parts(), in order.
struct ArDecomposition {
    std::vector<std::pair<int, int>> segments;
};

struct RIndexResult {
    int r = 0;
    ArDecomposition decomposition;
};

/// Parses "15,13,5,4,3^2,2,1" (whitespace ignored, "v^k" expands to k
/// copies of v). Throws std::invalid_argument with the offending position.
Partition parse_partition(const std::string& text);

/// Renders parts separated by commas; with exponent_form, runs of length
/// >= 2 are written as "v^k".
std::string to_string(const Partition& b, bool exponent_form = false);

RunEncoding runs(const Partition& b);
Partition from_runs(const RunEncoding& enc);

/// Prefix-sum comparison; both arguments must partition the same n.
Dominance dominance_compare(const Partition& a, const Partition& b);

/// true iff dominance_compare(a, b) is Less or Equal.
bool dominated_by(const Partition& a, const Partition& b);

Partition conjugate(const Partition& b);

/// mu_1 - mu_t <= 1. Throws on the empty partition.
bool is_almost_rectangular(const Partition& b);

/// Minimum number of contiguous almost rectangular segments covering the
/// parts, with the greedy-from-largest maximal witness. The witness is not
/// canonical; other minimal decompositions may exist.
RIndexResult r_index(const Partition& b);

/// Largest number of parts whose values fit in a window {v, v+1}.
int s_index(const Partition& b);

/// Segment sums of an almost rectangular decomposition, sorted weakly
/// decreasing so the result is a Partition.
Partition tilde_of(const Partition& b, const ArDecomposition& d);

/// Jordan type of J^s where J is the n x n Jordan block: with n = q*s + r,
/// r blocks of size q+1 and s-r of size q (zero parts dropped).
Partition jordan_power_type(int n, int s);

/// r_m = sum_i max(mu_i - m, 0) for m = 0..mu_1; r_0 = n, last entry 0.
std::vector<int> rank_profile_of_partition(const Partition& b);

/// Inverse of rank_profile_of_partition: the partition whose conjugate is
/// the difference sequence. Throws on non-monotone or inconsistent input.
Partition type_from_rank_profile(const std::vector<int>& ranks);

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> all_partitions(int n);

}  // namespace nilorbit

#endif
