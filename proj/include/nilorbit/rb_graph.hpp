#ifndef NILORBIT_RB_GRAPH_HPP
#define NILORBIT_RB_GRAPH_HPP

#include <set>
#include <string>
#include <vector>

#include "nilorbit/centralizer.hpp"
#include "nilorbit/oblak.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

/// The relation R_B on Delta_B: an edge (source, target) marks a
/// generically nonzero entry of the nilpotent subalgebra, i.e. X(source)
/// has nonzero coefficient on target. Acyclic by construction.
struct RbGraph {
    Partition b;
    std::vector<BasisVector> vertices;          // Delta_B order
    std::vector<std::vector<int>> out_edges;    // source index -> target indices
    std::vector<std::vector<int>> in_edges;     // target index -> source indices
    int edge_count = 0;

    int index_of(const BasisVector& v) const;
    bool has_edge(const BasisVector& source, const BasisVector& target) const;
};

RbGraph build_graph(const Partition& b);

/// row[v] = length of the longest directed path ending at v; max_row + 1
/// recovers the maximum nilpotency index.
struct RowTable {
    std::vector<int> row;  // indexed like RbGraph::vertices
    int max_row = 0;
};

RowTable assign_rows(const RbGraph& g);

/// The distinguished omega_1-element subset tracing the longest generic
/// Jordan string, for the chosen step (i_tilde, eps_tilde).
std::set<BasisVector> delta_circle(const Partition& b, const OblakStep& step);

/// Monospace grid: one column per distinct part value (ascending), one
/// line per row index, circle markers in front of delta_circle members.
std::string render_table(const Partition& b, const RowTable& table,
                         const std::set<BasisVector>& circle);

std::string to_dot(const RbGraph& g);

}  // namespace nilorbit

#endif
