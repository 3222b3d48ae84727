#ifndef NILORBIT_CENTRALIZER_HPP
#define NILORBIT_CENTRALIZER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilorbit/gf.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

/// Basis vector v_{mu_{q_i}, j}^l: run index i (1-based), block index j
/// inside the run (q_i - q_{i-1} down to 1), height l in 1..mu_{q_i}.
struct BasisVector {
    int run = 0;
    int j = 0;
    int l = 0;

    friend auto operator<=>(const BasisVector&, const BasisVector&) = default;
};

std::string to_string(const BasisVector& v, const RunEncoding& enc);

enum class OrderKind { DeltaB, DeltaBPrec };

/// A labeling of the canonical basis: order[k] is the vector at position k.
struct BasisOrdering {
    OrderKind kind = OrderKind::DeltaB;
    std::vector<BasisVector> order;

    int n() const { return static_cast<int>(order.size()); }
    int position(const BasisVector& v) const;
};

/// Delta_B order: runs in order, j descending inside a run, l descending.
std::vector<BasisVector> delta_basis(const Partition& b);
BasisOrdering delta_ordering(const Partition& b);

/// The reorder under which both nilpotent subalgebras become strictly upper
/// triangular: mu - l ascending, then run ascending, then j ascending.
/// (Only the ascending j direction keeps the same-run entries above the
/// diagonal.)
BasisOrdering prec_ordering(const Partition& b);

/// Group sizes t_h = |{parts >= h+1}| for h = 0..mu_1-1.
std::vector<int> group_sizes(const Partition& b);

/// Symbolic n x n pattern: each cell is zero or carries a coordinate id in
/// 0..coordinate_count-1; equal ids encode the Toeplitz ties. Ids are dense
/// and assigned by first occurrence in row-major order.
struct PatternMatrix {
    Partition b;
    BasisOrdering ordering;
    int n = 0;
    std::vector<int32_t> cells;  // -1 for zero
    int coordinate_count = 0;

    int32_t coord(int r, int c) const {
        return cells[static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)];
    }
    bool is_zero(int r, int c) const { return coord(r, c) < 0; }
    bool is_strictly_upper_triangular() const;
};

/// Generic element of the centralizer of J (Delta_B ordering): blockwise
/// upper triangular Toeplitz, sum of min(mu_h, mu_k) coordinates per block
/// pair.
PatternMatrix centralizer_pattern(const Partition& b);

/// Generic element of the maximal nilpotent subalgebra of the centralizer
/// (Delta_B-prec ordering): nonzero positions given by the four edge
/// conditions of the commuting relation, with Toeplitz ties kept.
PatternMatrix sn_pattern(const Partition& b);

/// Same zero set as sn_pattern but with every tie broken (the coordinate
/// hull of the centralizer, nilpotent part).
PatternMatrix se_pattern(const Partition& b);

/// Is the entry (row = target, col = source) generically nonzero in the
/// nilpotent subalgebra? Exposed for the R_B graph.
bool sn_nonzero(const RunEncoding& enc, const BasisVector& row, const BasisVector& col);

/// J in the given ordering: J v^l = v^{l+1}, J v^{mu} = 0.
FieldMatrix jordan_operator(const Partition& b, const BasisOrdering& ordering, PrimeModulus mod);

/// Draw each coordinate uniformly from [0, p); tied cells share the value.
FieldMatrix pattern_instantiate(const PatternMatrix& p, PrimeModulus mod, uint64_t seed);

/// Positions grouped by coordinate id ((row, col) pairs, id order).
std::vector<std::vector<std::pair<int, int>>> tie_classes(const PatternMatrix& p);

}  // namespace nilorbit

#endif
