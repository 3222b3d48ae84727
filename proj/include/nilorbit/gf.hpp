#ifndef NILORBIT_GF_HPP
#define NILORBIT_GF_HPP

#include <cstdint>
#include <vector>

#include "nilorbit/partition.hpp"

namespace nilorbit {

/// A prime p with 2 <= p < 2^31, checked at construction.
struct PrimeModulus {
    uint32_t p;
    explicit PrimeModulus(uint32_t p);
    friend bool operator==(PrimeModulus, PrimeModulus) = default;
};

inline uint32_t gf_add(uint32_t a, uint32_t b, PrimeModulus m) {
    const uint32_t s = a + b;
    return s >= m.p ? s - m.p : s;
}
inline uint32_t gf_sub(uint32_t a, uint32_t b, PrimeModulus m) {
    return a >= b ? a - b : a + m.p - b;
}
inline uint32_t gf_neg(uint32_t a, PrimeModulus m) { return a == 0 ? 0 : m.p - a; }
inline uint32_t gf_mul(uint32_t a, uint32_t b, PrimeModulus m) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % m.p);
}
/// Multiplicative inverse; throws std::domain_error on 0.
uint32_t gf_inv(uint32_t a, PrimeModulus m);
uint32_t gf_pow(uint32_t a, uint64_t e, PrimeModulus m);

/// Dense row-major matrix over GF(p). Immutable in spirit: operations
/// return fresh values.
class FieldMatrix {
public:
    FieldMatrix(int rows, int cols, PrimeModulus mod);

    static FieldMatrix identity(int n, PrimeModulus mod);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    PrimeModulus modulus() const { return mod_; }

    uint32_t operator()(int r, int c) const {
        return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
    }
    void set(int r, int c, uint32_t v) {
        a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)] = v % mod_.p;
    }

    bool is_zero() const;
    bool is_strictly_upper_triangular() const;
    FieldMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    int rows_, cols_;
    PrimeModulus mod_;
    std::vector<uint32_t> a_;
};

/// Exact product; throws on dimension or modulus mismatch.
FieldMatrix mat_mul(const FieldMatrix& x, const FieldMatrix& y);
FieldMatrix mat_pow(const FieldMatrix& x, int e);

/// Row-echelon rank by Gaussian elimination with first-nonzero pivoting.
int rank(const FieldMatrix& x);

/// Determinant of a square matrix (elimination with pivot tracking).
uint32_t det(const FieldMatrix& x);

/// (rank X^0, rank X^1, ...) until the value reaches 0 or repeats.
std::vector<int> rank_sequence(const FieldMatrix& x);

/// Jordan type of a nilpotent matrix; throws std::domain_error otherwise.
Partition jordan_type(const FieldMatrix& x);

/// Least m with X^m = 0; throws on non-nilpotent input.
int nilpotency_index(const FieldMatrix& x);

/// The Jordan matrix of type b in the plain block basis, with the
/// convention J v^l = v^{l+1} inside each block (ones on the subdiagonal of
/// each block when columns are indexed by height l).
FieldMatrix jordan_matrix(const Partition& b, PrimeModulus mod);

/// SplitMix64 stream; used as the counted splittable generator so every
/// sample is reproducible from (seed, counter) alone.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint32_t below(uint32_t bound) { return static_cast<uint32_t>(next() % bound); }
};

/// Independent stream for the index-th job under a master seed.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    SplitMix64 g(master ^ (0x2545f4914f6cdd1dULL * (index + 1)));
    return g.next();
}

}  // namespace nilorbit

#endif
