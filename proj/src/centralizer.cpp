#include "nilorbit/centralizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilorbit {

std::string to_string(const BasisVector& v, const RunEncoding& enc) {
    return "v_{" + std::to_string(enc.value(v.run)) + "," + std::to_string(v.j) + "}^" +
           std::to_string(v.l);
}

int BasisOrdering::position(const BasisVector& v) const {
    for (size_t k = 0; k < order.size(); ++k)
        if (order[k] == v) return static_cast<int>(k);
    throw std::invalid_argument("basis vector not present in ordering");
}

std::vector<BasisVector> delta_basis(const Partition& b) {
    if (b.empty())
        throw std::invalid_argument("delta_basis: empty partition");
    const RunEncoding enc = runs(b);
    std::vector<BasisVector> out;
    out.reserve(static_cast<size_t>(b.n()));
    for (int i = 1; i <= enc.u; ++i)
        for (int j = enc.multiplicity(i); j >= 1; --j)
            for (int l = enc.value(i); l >= 1; --l) out.push_back({i, j, l});
    return out;
}

BasisOrdering delta_ordering(const Partition& b) {
    return {OrderKind::DeltaB, delta_basis(b)};
}

BasisOrdering prec_ordering(const Partition& b) {
    const RunEncoding enc = runs(b);
    std::vector<BasisVector> order = delta_basis(b);
    std::stable_sort(order.begin(), order.end(),
                     [&enc](const BasisVector& a, const BasisVector& c) {
                         const int ha = enc.value(a.run) - a.l;
                         const int hc = enc.value(c.run) - c.l;
                         if (ha != hc) return ha < hc;
                         if (a.run != c.run) return a.run < c.run;
                         return a.j < c.j;
                     });
    return {OrderKind::DeltaBPrec, std::move(order)};
}

std::vector<int> group_sizes(const Partition& b) {
    std::vector<int> t;
    const int mu1 = b.empty() ? 0 : b[0];
    for (int h = 0; h < mu1; ++h) {
        int count = 0;
        for (int part : b)
            if (part >= h + 1) ++count;
        t.push_back(count);
    }
    return t;
}

namespace {

/// Shift range of the commuting maps from a source string of length mu_src
/// onto a target of length mu_tgt: v^{l'} -> v^{l'+d} truncated above.
bool centralizer_nonzero(const RunEncoding& enc, const BasisVector& row, const BasisVector& col) {
    const int mu_tgt = enc.value(row.run);
    const int mu_src = enc.value(col.run);
    const int d = row.l - col.l;
    return d >= std::max(0, mu_tgt - mu_src) && d <= mu_tgt - 1;
}

struct CoordKey {
    int run_row, j_row, run_col, j_col, d;
    friend auto operator<=>(const CoordKey&, const CoordKey&) = default;
};

PatternMatrix build_pattern(const Partition& b, const BasisOrdering& ordering,
                            bool (*nonzero)(const RunEncoding&, const BasisVector&,
                                            const BasisVector&),
                            bool tie) {
    const RunEncoding enc = runs(b);
    PatternMatrix p;
    p.b = b;
    p.ordering = ordering;
    p.n = b.n();
    p.cells.assign(static_cast<size_t>(p.n) * static_cast<size_t>(p.n), -1);
    std::map<CoordKey, int32_t> ids;
    int32_t next_id = 0;
    for (int r = 0; r < p.n; ++r) {
        const BasisVector& row = p.ordering.order[static_cast<size_t>(r)];
        for (int c = 0; c < p.n; ++c) {
            const BasisVector& col = p.ordering.order[static_cast<size_t>(c)];
            if (!nonzero(enc, row, col)) continue;
            int32_t id;
            if (tie) {
                const CoordKey key{row.run, row.j, col.run, col.j, row.l - col.l};
                auto [it, inserted] = ids.emplace(key, next_id);
                if (inserted) ++next_id;
                id = it->second;
            } else {
                id = next_id++;
            }
            p.cells[static_cast<size_t>(r) * static_cast<size_t>(p.n) + static_cast<size_t>(c)] = id;
        }
    }
    p.coordinate_count = next_id;
    return p;
}

}  // namespace

bool sn_nonzero(const RunEncoding& enc, const BasisVector& row, const BasisVector& col) {
    const int i = row.run, ip = col.run;
    const int mu_row = enc.value(i), mu_col = enc.value(ip);
    if (i < ip)  // iota_1
        return mu_row - row.l <= mu_col - col.l;
    if (i > ip)  // iota_4
        return row.l >= col.l;
    if (row.j >= col.j)  // iota_2
        return row.l > col.l;
    return row.l >= col.l;  // iota_3
}

bool PatternMatrix::is_strictly_upper_triangular() const {
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= r; ++c)
            if (!is_zero(r, c)) return false;
    return true;
}

PatternMatrix centralizer_pattern(const Partition& b) {
    return build_pattern(b, delta_ordering(b), centralizer_nonzero, true);
}

PatternMatrix sn_pattern(const Partition& b) {
    return build_pattern(b, prec_ordering(b), sn_nonzero, true);
}

PatternMatrix se_pattern(const Partition& b) {
    return build_pattern(b, prec_ordering(b), sn_nonzero, false);
}

FieldMatrix jordan_operator(const Partition& b, const BasisOrdering& ordering, PrimeModulus mod) {
    const RunEncoding enc = runs(b);
    FieldMatrix j(b.n(), b.n(), mod);
    for (int c = 0; c < b.n(); ++c) {
        const BasisVector v = ordering.order[static_cast<size_t>(c)];
        if (v.l == enc.value(v.run)) continue;
        j.set(ordering.position({v.run, v.j, v.l + 1}), c, 1);
    }
    return j;
}

FieldMatrix pattern_instantiate(const PatternMatrix& p, PrimeModulus mod, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<uint32_t> values(static_cast<size_t>(p.coordinate_count));
    for (auto& v : values) v = rng.below(mod.p);
    FieldMatrix x(p.n, p.n, mod);
    for (int r = 0; r < p.n; ++r)
        for (int c = 0; c < p.n; ++c) {
            const int32_t id = p.coord(r, c);
            if (id >= 0) x.set(r, c, values[static_cast<size_t>(id)]);
        }
    return x;
}

std::vector<std::vector<std::pair<int, int>>> tie_classes(const PatternMatrix& p) {
    std::vector<std::vector<std::pair<int, int>>> classes(
        static_cast<size_t>(p.coordinate_count));
    for (int r = 0; r < p.n; ++r)
        for (int c = 0; c < p.n; ++c) {
            const int32_t id = p.coord(r, c);
            if (id >= 0) classes[static_cast<size_t>(id)].emplace_back(r, c);
        }
    return classes;
}

}  // namespace nilorbit
