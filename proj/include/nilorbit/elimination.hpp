#ifndef NILORBIT_ELIMINATION_HPP
#define NILORBIT_ELIMINATION_HPP

#include <optional>
#include <vector>

#include "nilorbit/gf.hpp"
#include "nilorbit/partition.hpp"

namespace nilorbit {

/// Leading-entry profile of a strictly upper triangular matrix: phi(i) is
/// the first nonzero column of row i, n+1 for a zero row. Always phi(i) > i.
struct PhiMap {
    int n = 0;
    std::vector<int> values;  // 1-based rows; entries in 2..n+1

    int operator()(int i) const { return values[static_cast<size_t>(i - 1)]; }
    friend bool operator==(const PhiMap&, const PhiMap&) = default;
};

PhiMap phi_of(const FieldMatrix& y);

/// Nondecreasing and strictly increasing where the value is at most n.
/// Matrices with such a profile all lie in one nilpotent orbit.
bool is_monotone_regular(const PhiMap& phi);

/// Iterated map with n+1 absorbing.
PhiMap phi_power(const PhiMap& phi, int k);

/// Jordan type read off a monotone regular profile: rank X^k equals the
/// number of rows i with phi^k(i) <= n. Throws if the hypothesis fails.
Partition monotone_generic_type(const PhiMap& phi);

/// F(U) for a matrix with the star property (first column zero below the
/// corner, interior diagonal nonzero): the Schur-complement-style value
/// created at the top-right position during one elimination step.
uint32_t f_u_recursive(const FieldMatrix& u);

/// Same value as (-1)^p det(U minus first column minus last row) divided by
/// the interior diagonal product.
uint32_t f_u_determinant(const FieldMatrix& u);

/// Coefficient of u_{r,s} in F(U) (1-based, r < s), via the closed forms in
/// terms of F on leading and trailing corners.
uint32_t f_u_coefficient(const FieldMatrix& u, int r, int s);

/// The selected submatrix driving one reduction step. Rows are i(1) (the
/// first non-regular row), the consecutive interior rows whose leading
/// entries occupy consecutive columns, and a terminal row; cols are the
/// matching column window. cols.back() == n+1 denotes the appended zero
/// column (the eliminated row dies).
struct StarSubmatrix {
    std::vector<int> rows;  // 1-based
    std::vector<int> cols;  // 1-based; last may be n+1

    int order() const { return static_cast<int>(rows.size()); }
    int i1() const { return rows.front(); }
    int terminal_col() const { return cols.back(); }
};

/// std::nullopt iff the profile is already monotone regular.
std::optional<StarSubmatrix> find_star_submatrix(const FieldMatrix& y);

struct SigmaStepRecord {
    StarSubmatrix star;
    uint32_t eliminated_value = 0;  // F(U) as landed at (i(1), terminal col)
};

/// One conjugation S^{-1} G^{-1} Y G S: G clears row i(1) across the
/// interior columns, S cyclically shifts the block of rows/columns
/// i(1)..i(1)+p-2 so the cleared row drops below its eliminators.
FieldMatrix sigma_step(const FieldMatrix& y);
std::pair<FieldMatrix, SigmaStepRecord> sigma_step_traced(const FieldMatrix& y);

struct ReductionTrace {
    std::vector<SigmaStepRecord> steps;
    int m = 0;
    PhiMap final_phi;
    FieldMatrix final_matrix;
};

/// Iterate sigma_step until the profile is monotone regular. Terminates for
/// every input; the n^2 iteration cap only guards against implementation
/// bugs.
ReductionTrace sigma_reduce(const FieldMatrix& y);

}  // namespace nilorbit

#endif
