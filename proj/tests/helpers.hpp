#ifndef NILORBIT_TEST_HELPERS_HPP
#define NILORBIT_TEST_HELPERS_HPP

#include <vector>

#include "nilorbit/centralizer.hpp"
#include "nilorbit/gf.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit::testing {

inline Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

/// Random matrix with the star property: zero below the diagonal, nonzero
/// interior diagonal, zero corners (as the coordinate matrix has them).
inline FieldMatrix random_star(int p, PrimeModulus m, uint64_t seed) {
    SplitMix64 rng(seed);
    FieldMatrix u(p, p, m);
    for (int r = 0; r < p; ++r)
        for (int c = r; c < p; ++c) u.set(r, c, rng.below(m.p));
    for (int i = 1; i < p - 1; ++i) u.set(i, i, 1 + rng.below(m.p - 1));
    u.set(0, 0, 0);
    u.set(p - 1, p - 1, 0);
    return u;
}

/// Column-recursion form of F; independent route for the symmetry check.
inline uint32_t f_u_column_recursive(const FieldMatrix& u) {
    const PrimeModulus m = u.modulus();
    const int p = u.rows();
    std::vector<uint32_t> f(static_cast<size_t>(p) + 1, 0);
    f[2] = u(0, 1);
    for (int h = 3; h <= p; ++h) {
        uint32_t acc = u(0, h - 1);
        for (int k = 2; k <= h - 1; ++k)
            acc = gf_sub(acc,
                         gf_mul(gf_mul(u(k - 1, h - 1), gf_inv(u(k - 1, k - 1), m), m),
                                f[static_cast<size_t>(k)], m),
                         m);
        f[static_cast<size_t>(h)] = acc;
    }
    return f[static_cast<size_t>(p)];
}

/// F extended to upper triangular matrices whose interior diagonal may
/// vanish: (-1)^p det(hat U) over the product of the nonzero interior
/// diagonal entries. Evaluates the multilinearity cases that leave the
/// star class.
inline uint32_t f_extended(const FieldMatrix& u) {
    const PrimeModulus m = u.modulus();
    const int p = u.rows();
    FieldMatrix hat(p - 1, p - 1, m);
    for (int r = 1; r <= p - 1; ++r)
        for (int c = 2; c <= p; ++c) hat.set(r - 1, c - 2, u(r - 1, c - 1));
    uint32_t value = det(hat);
    if (p % 2 == 1) value = gf_neg(value, m);
    for (int i = 2; i <= p - 1; ++i)
        if (u(i - 1, i - 1) != 0) value = gf_mul(value, gf_inv(u(i - 1, i - 1), m), m);
    return value;
}

/// A 13 x 13 strictly upper triangular regression pattern for the
/// elimination reduction (it is the generic untied element of type
/// (4,3,3,2,1)): a fresh coordinate at each listed column per row.
inline PatternMatrix example_13_pattern() {
    const std::vector<std::vector<int>> cols{
        {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13},
        {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13},
        {4, 5, 6, 7, 8, 9, 10, 11, 12, 13},
        {5, 7, 8, 9, 10, 11, 12, 13},
        {9, 11, 12, 13},
        {7, 8, 9, 10, 11, 12, 13},
        {8, 9, 10, 11, 12, 13},
        {9, 10, 11, 12, 13},
        {11, 12, 13},
        {11, 12, 13},
        {12, 13},
        {13},
        {},
    };
    PatternMatrix p;
    p.n = 13;
    p.ordering.kind = OrderKind::DeltaBPrec;
    p.cells.assign(13 * 13, -1);
    int32_t id = 0;
    for (int r = 0; r < 13; ++r)
        for (int c : cols[static_cast<size_t>(r)])
            p.cells[static_cast<size_t>(r) * 13 + static_cast<size_t>(c - 1)] = id++;
    p.coordinate_count = id;
    return p;
}

}  // namespace nilorbit::testing

#endif
