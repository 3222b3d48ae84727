#include "nilorbit/gf.hpp"

#include <stdexcept>

namespace nilorbit {

namespace {
bool is_prime_u32(uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}
}  // namespace

PrimeModulus::PrimeModulus(uint32_t p_) : p(p_) {
    if (p >= (1u << 31) || !is_prime_u32(p))
        throw std::invalid_argument("modulus must be a prime below 2^31");
}

uint32_t gf_pow(uint32_t a, uint64_t e, PrimeModulus m) {
    uint32_t r = 1 % m.p;
    uint32_t base = a % m.p;
    while (e) {
        if (e & 1) r = gf_mul(r, base, m);
        base = gf_mul(base, base, m);
        e >>= 1;
    }
    return r;
}

uint32_t gf_inv(uint32_t a, PrimeModulus m) {
    a %= m.p;
    if (a == 0) throw std::domain_error("gf_inv: zero is not invertible");
    // Extended Euclid on (a, p).
    int64_t t = 0, new_t = 1;
    int64_t r = m.p, new_r = a;
    while (new_r != 0) {
        const int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += m.p;
    return static_cast<uint32_t>(t);
}

FieldMatrix::FieldMatrix(int rows, int cols, PrimeModulus mod)
    : rows_(rows), cols_(cols), mod_(mod) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dimensions must be nonnegative");
    a_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
}

FieldMatrix FieldMatrix::identity(int n, PrimeModulus mod) {
    FieldMatrix m(n, n, mod);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

bool FieldMatrix::is_zero() const {
    for (uint32_t v : a_)
        if (v != 0) return false;
    return true;
}

bool FieldMatrix::is_strictly_upper_triangular() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c <= r; ++c)
            if ((*this)(r, c) != 0) return false;
    return true;
}

FieldMatrix FieldMatrix::submatrix(const std::vector<int>& row_idx,
                                   const std::vector<int>& col_idx) const {
    FieldMatrix s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()), mod_);
    for (size_t r = 0; r < row_idx.size(); ++r)
        for (size_t c = 0; c < col_idx.size(); ++c)
            s.set(static_cast<int>(r), static_cast<int>(c), (*this)(row_idx[r], col_idx[c]));
    return s;
}

FieldMatrix mat_mul(const FieldMatrix& x, const FieldMatrix& y) {
    if (x.modulus() != y.modulus())
        throw std::invalid_argument("mat_mul: modulus mismatch");
    if (x.cols() != y.rows())
        throw std::invalid_argument("mat_mul: inner dimensions disagree");
    const PrimeModulus m = x.modulus();
    FieldMatrix z(x.rows(), y.cols(), m);
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k) {
            const uint32_t xik = x(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols(); ++j)
                if (y(k, j) != 0) z.set(i, j, gf_add(z(i, j), gf_mul(xik, y(k, j), m), m));
        }
    return z;
}

FieldMatrix mat_pow(const FieldMatrix& x, int e) {
    if (x.rows() != x.cols()) throw std::invalid_argument("mat_pow: matrix must be square");
    FieldMatrix r = FieldMatrix::identity(x.rows(), x.modulus());
    for (int i = 0; i < e; ++i) r = mat_mul(r, x);
    return r;
}

int rank(const FieldMatrix& x) {
    FieldMatrix w = x;
    const PrimeModulus m = w.modulus();
    int rk = 0;
    for (int c = 0; c < w.cols() && rk < w.rows(); ++c) {
        int pivot = -1;
        for (int r = rk; r < w.rows(); ++r)
            if (w(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rk)
            for (int j = c; j < w.cols(); ++j) {
                const uint32_t tmp = w(rk, j);
                w.set(rk, j, w(pivot, j));
                w.set(pivot, j, tmp);
            }
        const uint32_t inv = gf_inv(w(rk, c), m);
        for (int r = rk + 1; r < w.rows(); ++r) {
            const uint32_t f = w(r, c);
            if (f == 0) continue;
            const uint32_t scale = gf_mul(f, inv, m);
            for (int j = c; j < w.cols(); ++j)
                w.set(r, j, gf_sub(w(r, j), gf_mul(scale, w(rk, j), m), m));
        }
        ++rk;
    }
    return rk;
}

uint32_t det(const FieldMatrix& x) {
    if (x.rows() != x.cols()) throw std::invalid_argument("det: matrix must be square");
    FieldMatrix w = x;
    const PrimeModulus m = w.modulus();
    const int n = w.rows();
    uint32_t d = 1 % m.p;
    bool negate = false;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (w(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != c) {
            negate = !negate;
            for (int j = c; j < n; ++j) {
                const uint32_t tmp = w(c, j);
                w.set(c, j, w(pivot, j));
                w.set(pivot, j, tmp);
            }
        }
        d = gf_mul(d, w(c, c), m);
        const uint32_t inv = gf_inv(w(c, c), m);
        for (int r = c + 1; r < n; ++r) {
            const uint32_t f = w(r, c);
            if (f == 0) continue;
            const uint32_t scale = gf_mul(f, inv, m);
            for (int j = c; j < n; ++j)
                w.set(r, j, gf_sub(w(r, j), gf_mul(scale, w(c, j), m), m));
        }
    }
    return negate ? gf_neg(d, m) : d;
}

std::vector<int> rank_sequence(const FieldMatrix& x) {
    if (x.rows() != x.cols())
        throw std::invalid_argument("rank_sequence: matrix must be square");
    std::vector<int> seq{x.rows()};
    FieldMatrix power = x;
    while (true) {
        const int r = rank(power);
        seq.push_back(r);
        if (r == 0 || r == seq[seq.size() - 2]) break;
        power = mat_mul(power, x);
    }
    return seq;
}

Partition jordan_type(const FieldMatrix& x) {
    const std::vector<int> seq = rank_sequence(x);
    if (seq.back() != 0)
        throw std::domain_error("jordan_type: matrix is not nilpotent");
    return type_from_rank_profile(seq);
}

int nilpotency_index(const FieldMatrix& x) {
    const std::vector<int> seq = rank_sequence(x);
    if (seq.back() != 0)
        throw std::domain_error("nilpotency_index: matrix is not nilpotent");
    return static_cast<int>(seq.size()) - 1;
}

FieldMatrix jordan_matrix(const Partition& b, PrimeModulus mod) {
    FieldMatrix j(b.n(), b.n(), mod);
    int offset = 0;
    for (int part : b) {
        // column l (height) maps to row l+1 within the block
        for (int l = 0; l + 1 < part; ++l) j.set(offset + l + 1, offset + l, 1);
        offset += part;
    }
    return j;
}

}  // namespace nilorbit
