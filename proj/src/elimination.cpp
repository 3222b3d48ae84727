#include "nilorbit/elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilorbit {

PhiMap phi_of(const FieldMatrix& y) {
    if (!y.is_strictly_upper_triangular())
        throw std::invalid_argument("phi_of: matrix is not strictly upper triangular");
    const int n = y.rows();
    PhiMap phi{n, std::vector<int>(static_cast<size_t>(n), n + 1)};
    for (int i = 1; i <= n; ++i)
        for (int c = i + 1; c <= n; ++c)
            if (y(i - 1, c - 1) != 0) {
                phi.values[static_cast<size_t>(i - 1)] = c;
                break;
            }
    return phi;
}

bool is_monotone_regular(const PhiMap& phi) {
    for (int i = 1; i < phi.n; ++i)
        if (phi(i) >= phi(i + 1) && phi(i + 1) <= phi.n) return false;
    return true;
}

PhiMap phi_power(const PhiMap& phi, int k) {
    if (k < 1) throw std::invalid_argument("phi_power: k must be >= 1");
    PhiMap out = phi;
    for (int step = 1; step < k; ++step)
        for (int i = 1; i <= phi.n; ++i) {
            const int v = out(i);
            out.values[static_cast<size_t>(i - 1)] = v == phi.n + 1 ? phi.n + 1 : phi(v);
        }
    return out;
}

Partition monotone_generic_type(const PhiMap& phi) {
    if (!is_monotone_regular(phi))
        throw std::invalid_argument("monotone_generic_type: profile is not monotone regular");
    std::vector<int> ranks{phi.n};
    PhiMap power = phi;
    while (true) {
        int r = 0;
        for (int v : power.values)
            if (v <= phi.n) ++r;
        ranks.push_back(r);
        if (r == 0) break;
        for (int i = 1; i <= phi.n; ++i) {
            const int v = power(i);
            power.values[static_cast<size_t>(i - 1)] = v == phi.n + 1 ? phi.n + 1 : phi(v);
        }
    }
    return type_from_rank_profile(ranks);
}

namespace {
void require_star(const FieldMatrix& u) {
    const int p = u.rows();
    if (p != u.cols() || p < 2)
        throw std::invalid_argument("F(U) needs a square matrix of order >= 2");
    for (int i = 2; i <= p; ++i)
        for (int k = 1; k < i; ++k)
            if (u(i - 1, k - 1) != 0)
                throw std::invalid_argument("F(U): below-diagonal entry is nonzero");
    for (int i = 2; i <= p - 1; ++i)
        if (u(i - 1, i - 1) == 0)
            throw std::invalid_argument("F(U): zero interior diagonal entry");
}
}  // namespace

uint32_t f_u_recursive(const FieldMatrix& u) {
    require_star(u);
    const PrimeModulus m = u.modulus();
    const int p = u.rows();
    // f[h] = F(U_(h)) for h = p-1 .. 1
    std::vector<uint32_t> f(static_cast<size_t>(p), 0);
    f[static_cast<size_t>(p - 1)] = u(p - 2, p - 1);
    for (int h = p - 2; h >= 1; --h) {
        uint32_t acc = u(h - 1, p - 1);
        for (int k = h + 1; k <= p - 1; ++k) {
            const uint32_t term = gf_mul(gf_mul(u(h - 1, k - 1), gf_inv(u(k - 1, k - 1), m), m),
                                         f[static_cast<size_t>(k)], m);
            acc = gf_sub(acc, term, m);
        }
        f[static_cast<size_t>(h)] = acc;
    }
    return f[1];
}

uint32_t f_u_determinant(const FieldMatrix& u) {
    require_star(u);
    const PrimeModulus m = u.modulus();
    const int p = u.rows();
    FieldMatrix hat(p - 1, p - 1, m);
    for (int r = 1; r <= p - 1; ++r)
        for (int c = 2; c <= p; ++c) hat.set(r - 1, c - 2, u(r - 1, c - 1));
    uint32_t value = det(hat);
    if (p % 2 == 1) value = gf_neg(value, m);
    for (int i = 2; i <= p - 1; ++i) value = gf_mul(value, gf_inv(u(i - 1, i - 1), m), m);
    return value;
}

uint32_t f_u_coefficient(const FieldMatrix& u, int r, int s) {
    require_star(u);
    const PrimeModulus m = u.modulus();
    const int p = u.rows();
    if (r < 1 || s <= r || s > p)
        throw std::invalid_argument("f_u_coefficient: need 1 <= r < s <= p");
    auto corner = [&](int from, int to) {  // rows/cols from..to of u
        std::vector<int> idx;
        for (int k = from; k <= to; ++k) idx.push_back(k - 1);
        return u.submatrix(idx, idx);
    };
    if (r == 1 && s == p) return 1 % m.p;
    if (s == p)
        return gf_neg(gf_mul(gf_inv(u(r - 1, r - 1), m), f_u_recursive(corner(1, r)), m), m);
    if (r == 1)
        return gf_neg(gf_mul(gf_inv(u(s - 1, s - 1), m), f_u_recursive(corner(s, p)), m), m);
    const uint32_t lead = f_u_recursive(corner(1, r));
    const uint32_t tail = f_u_recursive(corner(s, p));
    uint32_t value = gf_mul(lead, tail, m);
    value = gf_mul(value, gf_inv(u(r - 1, r - 1), m), m);
    return gf_mul(value, gf_inv(u(s - 1, s - 1), m), m);
}

std::optional<StarSubmatrix> find_star_submatrix(const FieldMatrix& y) {
    const PhiMap phi = phi_of(y);
    const int n = phi.n;
    int i1 = 0;
    for (int i = 1; i < n; ++i)
        if (phi(i) >= phi(i + 1) && phi(i + 1) <= n) { i1 = i; break; }
    if (i1 == 0) return std::nullopt;

    const int j2 = phi(i1 + 1);
    int k = 1;
    while (true) {
        const int jp = j2 + k;
        const int next_row = i1 + k + 1;
        // interior rows never include a zero row, so next_row <= n here
        const int phi_next = phi(next_row);
        if (phi_next > jp || (jp == n + 1 && phi_next == n + 1)) break;
        if (phi_next == jp && jp <= n) { ++k; continue; }
        // Chain broken with no admissible stop at next_row: any lower row
        // with a later leading entry closes the selection; the terminal row
        // never enters the arithmetic, so fall back to next_row if none does.
        break;
    }
    StarSubmatrix star;
    for (int h = 0; h <= k; ++h) star.rows.push_back(i1 + h);
    const int jp = j2 + k;
    int terminal_row = i1 + k + 1;
    for (int r = i1 + k + 1; r <= n; ++r)
        if (phi(r) > jp || (jp == n + 1 && phi(r) == n + 1)) { terminal_row = r; break; }
    star.rows.push_back(terminal_row);
    for (int h = 0; h <= k; ++h) star.cols.push_back(j2 - 1 + h);
    star.cols.push_back(jp);
    return star;
}

std::pair<FieldMatrix, SigmaStepRecord> sigma_step_traced(const FieldMatrix& y) {
    const auto star = find_star_submatrix(y);
    if (!star)
        throw std::invalid_argument("sigma_step: profile is already monotone regular");
    const PrimeModulus m = y.modulus();
    const int n = y.rows();
    const int p = star->order();
    const int i1 = star->i1();

    // g_h per eq. (2); interior h = 2..p-1 pairs row i(h) with column j(h).
    std::vector<uint32_t> g(static_cast<size_t>(p), 0);
    for (int h = 2; h <= p - 1; ++h) {
        const int ih = star->rows[static_cast<size_t>(h - 1)];
        const int jh = star->cols[static_cast<size_t>(h - 1)];
        uint32_t acc = y(i1 - 1, jh - 1);
        for (int kk = 2; kk < h; ++kk)
            acc = gf_sub(acc,
                         gf_mul(y(star->rows[static_cast<size_t>(kk - 1)] - 1, jh - 1),
                                g[static_cast<size_t>(kk)], m),
                         m);
        const uint32_t pivot = y(ih - 1, jh - 1);
        if (pivot == 0)
            throw std::logic_error("sigma_step: interior leading entry is zero");
        g[static_cast<size_t>(h)] = gf_mul(acc, gf_inv(pivot, m), m);
    }

    // G^{-1} Y G: row i(1) loses g_h * row i(h); column i(h) gains
    // g_h * column i(1).
    FieldMatrix z = y;
    for (int h = 2; h <= p - 1; ++h) {
        const int ih = star->rows[static_cast<size_t>(h - 1)];
        const uint32_t gh = g[static_cast<size_t>(h)];
        if (gh == 0) continue;
        for (int c = 0; c < n; ++c)
            z.set(i1 - 1, c, gf_sub(z(i1 - 1, c), gf_mul(gh, y(ih - 1, c), m), m));
        for (int r = 0; r < n; ++r)
            z.set(r, ih - 1, gf_add(z(r, ih - 1), gf_mul(gh, y(r, i1 - 1), m), m));
    }

    SigmaStepRecord record{*star, 0};
    if (star->terminal_col() <= n)
        record.eliminated_value = z(i1 - 1, star->terminal_col() - 1);

    // Cyclic shift of rows/columns i(1)..i(1)+p-2: the cleared row drops to
    // the bottom of the block, its eliminators move up one slot.
    const int lo = i1, hi = i1 + p - 2;
    auto rho = [lo, hi](int idx) {
        if (idx < lo || idx > hi) return idx;
        return idx == hi ? lo : idx + 1;
    };
    FieldMatrix out(n, n, m);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) out.set(r - 1, c - 1, z(rho(r) - 1, rho(c) - 1));
    return {out, record};
}

FieldMatrix sigma_step(const FieldMatrix& y) { return sigma_step_traced(y).first; }

ReductionTrace sigma_reduce(const FieldMatrix& y) {
    const int n = y.rows();
    ReductionTrace trace{{}, 0, {}, y};
    while (find_star_submatrix(trace.final_matrix)) {
        if (trace.m > n * n)
            throw std::logic_error("sigma_reduce: iteration cap exceeded");
        auto [next, record] = sigma_step_traced(trace.final_matrix);
        trace.final_matrix = std::move(next);
        trace.steps.push_back(std::move(record));
        ++trace.m;
    }
    trace.final_phi = phi_of(trace.final_matrix);
    return trace;
}

}  // namespace nilorbit
