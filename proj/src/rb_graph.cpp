#include "nilorbit/rb_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nilorbit {

int RbGraph::index_of(const BasisVector& v) const {
    for (size_t k = 0; k < vertices.size(); ++k)
        if (vertices[k] == v) return static_cast<int>(k);
    throw std::invalid_argument("vertex not in graph");
}

bool RbGraph::has_edge(const BasisVector& source, const BasisVector& target) const {
    const int s = index_of(source), t = index_of(target);
    const auto& outs = out_edges[static_cast<size_t>(s)];
    return std::find(outs.begin(), outs.end(), t) != outs.end();
}

RbGraph build_graph(const Partition& b) {
    RbGraph g;
    g.b = b;
    g.vertices = delta_basis(b);
    const RunEncoding enc = runs(b);
    const size_t n = g.vertices.size();
    g.out_edges.assign(n, {});
    g.in_edges.assign(n, {});
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t) {
            if (s == t) continue;
            // edge source -> target iff the matrix entry (target, source)
            // is generically nonzero
            if (sn_nonzero(enc, g.vertices[t], g.vertices[s])) {
                g.out_edges[s].push_back(static_cast<int>(t));
                g.in_edges[t].push_back(static_cast<int>(s));
                ++g.edge_count;
            }
        }
    return g;
}

RowTable assign_rows(const RbGraph& g) {
    // Longest path over a topological order. The prec order reversed is
    // topological: every edge goes from a prec-later to a prec-earlier
    // vertex (strict upper triangularity of the pattern).
    const BasisOrdering prec = prec_ordering(g.b);
    const size_t n = g.vertices.size();
    std::vector<int> by_prec(n);
    for (size_t k = 0; k < n; ++k)
        by_prec[static_cast<size_t>(prec.position(g.vertices[k]))] = static_cast<int>(k);

    RowTable table;
    table.row.assign(n, 0);
    for (size_t pos = n; pos-- > 0;) {
        const int v = by_prec[pos];
        int best = 0;
        for (int u : g.in_edges[static_cast<size_t>(v)]) {
            if (table.row[static_cast<size_t>(u)] + 1 > best)
                best = table.row[static_cast<size_t>(u)] + 1;
        }
        table.row[static_cast<size_t>(v)] = best;
    }
    table.max_row = n ? *std::max_element(table.row.begin(), table.row.end()) : 0;

    // Prop 4.1 guarantees acyclicity; a violated DP order would surface as
    // an inconsistent edge here.
    for (size_t s = 0; s < n; ++s)
        for (int t : g.out_edges[s])
            if (table.row[s] >= table.row[static_cast<size_t>(t)])
                throw std::logic_error("R_B relation is not acyclic");
    return table;
}

std::set<BasisVector> delta_circle(const Partition& b, const OblakStep& step) {
    const RunEncoding enc = runs(b);
    const int top = step.i_tilde + step.eps_tilde;
    std::set<BasisVector> circle;
    for (int i = 1; i <= top; ++i)
        for (int j = enc.multiplicity(i); j >= 1; --j) {
            circle.insert({i, j, 1});                // Delta^{o,1}
            circle.insert({i, j, enc.value(i)});     // Delta^{o,3}
        }
    for (int i : {step.i_tilde, top})                // Delta^{o,2}
        for (int j = enc.multiplicity(i); j >= 1; --j)
            for (int l = 1; l <= enc.value(i); ++l) circle.insert({i, j, l});
    return circle;
}

std::string render_table(const Partition& b, const RowTable& table,
                         const std::set<BasisVector>& circle) {
    const RbGraph g = build_graph(b);
    const RunEncoding enc = runs(b);
    std::vector<int> columns = enc.values;  // ascending display order
    std::sort(columns.begin(), columns.end());

    // cell text per (row, column value)
    std::map<std::pair<int, int>, std::string> cells;
    size_t width = 1;
    for (size_t k = 0; k < g.vertices.size(); ++k) {
        const BasisVector& v = g.vertices[k];
        std::string text = (circle.count(v) ? "o " : "  ") + to_string(v, enc);
        width = std::max(width, text.size());
        cells[{table.row[k], enc.value(v.run)}] = std::move(text);
    }

    std::string out = "    ";
    for (int value : columns) {
        std::string head = std::to_string(value);
        head.insert(0, width > head.size() ? width - head.size() : 0, ' ');
        out += " " + head;
    }
    out += '\n';
    for (int r = 0; r <= table.max_row; ++r) {
        std::string line = std::to_string(r);
        line.insert(0, line.size() < 4 ? 4 - line.size() : 0, ' ');
        for (int value : columns) {
            auto it = cells.find({r, value});
            std::string text = it == cells.end() ? "" : it->second;
            text.insert(0, width > text.size() ? width - text.size() : 0, ' ');
            line += " " + text;
        }
        out += line + '\n';
    }
    return out;
}

std::string to_dot(const RbGraph& g) {
    const RunEncoding enc = runs(g.b);
    std::string out = "digraph rb {\n  rankdir=BT;\n";
    for (size_t k = 0; k < g.vertices.size(); ++k)
        out += "  n" + std::to_string(k) + " [label=\"" + to_string(g.vertices[k], enc) +
               "\"];\n";
    for (size_t s = 0; s < g.vertices.size(); ++s)
        for (int t : g.out_edges[s])
            out += "  n" + std::to_string(s) + " -> n" + std::to_string(t) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace nilorbit
