#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace avc {

using felem = uint32_t;

// GF(p^k) with element codes 0..q-1. A code is the base-p digit expansion of
// the polynomial representation: code = c_0 + c_1*p + ... + c_{k-1}*p^{k-1}
// where the element is c_0 + c_1*x + ... modulo the defining polynomial.
// Multiplication and inversion go through log/antilog tables, which caps q at
// 2^16; that covers every field this project touches (the large-alphabet
// decoding steps live in GF(64) and GF(256)).
struct FieldCtx {
    int p = 0;
    int k = 0;
    uint32_t q = 0;
    std::vector<int> modulus;   // length k+1, coefficients mod p, low to high, monic
    felem generator = 0;        // fixed primitive element (0 in GF(2), where the unit group is trivial)

    std::vector<felem> exp_tab; // exp_tab[i] = generator^i, i in 0..q-2
    std::vector<int> log_tab;   // log_tab[exp_tab[i]] = i, log_tab[0] = -1

    felem add(felem a, felem b) const;
    felem neg(felem a) const;
    felem sub(felem a, felem b) const { return add(a, neg(b)); }
    felem mul(felem a, felem b) const {
        if (a == 0 || b == 0) return 0;
        int e = log_tab[a] + log_tab[b];
        int m = (int)q - 1;
        if (e >= m) e -= m;
        return exp_tab[e];
    }
    felem inv(felem a) const;
    felem div(felem a, felem b) const { return mul(a, inv(b)); }
    felem pow(felem a, long long e) const;
    felem from_int(long long v) const; // reduce into the prime subfield
};

// Build GF(p^k). With no modulus given, the defining polynomial is chosen
// deterministically: the monic degree-k polynomial with the smallest
// coefficient code (c_0 + c_1*p + ...) that is irreducible and has x as a
// primitive root; the generator is then x itself. With an explicit modulus
// (length k+1, monic, irreducible) the generator is the least element code
// that is primitive.
FieldCtx field_create(int p, int k, const std::vector<int>* modulus = nullptr);

// Field embedding GF(p^a) -> GF(p^b) for a | b. x_sub is sent to the root of
// the subfield's defining polynomial with the least element code in the big
// field, which fixes the map completely. img is indexed by subfield code;
// back[c] is the subfield code of c, or -1 when c is outside the image.
struct EmbedMap {
    std::vector<felem> img;
    std::vector<int32_t> back;
};
EmbedMap make_embedding(const FieldCtx& sub, const FieldCtx& ext);

// phi(a_1..a_m) = sum a_j * beta^(j-1) in the extension, beta its generator.
// Injective on GF(q)^m when [ext:sub] = m because (1, beta, ..., beta^(m-1))
// is a basis.
felem phi(const std::vector<felem>& point, const EmbedMap& emb, const FieldCtx& ext);

// Coefficients of the m linearized polynomials F_j(T) = sum_v C[j][v] T^(q^v)
// that recover the coordinates: a_j = F_j(phi(a)). Computed by inverting the
// Moore matrix of the basis.
std::vector<std::vector<felem>> coordinate_polynomials(const FieldCtx& sub, const FieldCtx& ext);

// Evaluate one recovered coordinate from y = phi(a).
felem apply_linearized(const std::vector<felem>& coeffs, felem y,
                       const FieldCtx& ext, uint32_t subfield_q);

// Dense row-major matrix over one field.
struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<felem> a;

    Matrix() = default;
    Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    felem& at(size_t r, size_t c) { return a[r * cols + c]; }
    felem at(size_t r, size_t c) const { return a[r * cols + c]; }
};

enum class SolveMode { rank, kernel_vector, kernel_basis };

struct SolveResult {
    size_t rank = 0;
    std::vector<std::vector<felem>> kernel; // one vector for kernel_vector, basis for kernel_basis
};

// Gaussian elimination with deterministic pivoting (first nonzero entry when
// scanning rows top down).
SolveResult solve(const FieldCtx& F, Matrix A, SolveMode mode);

// Row-space membership tester with the elimination done once up front.
struct RowSpace {
    const FieldCtx* F = nullptr;
    size_t cols = 0;
    std::vector<std::vector<felem>> rows; // reduced echelon rows
    std::vector<size_t> pivots;

    bool contains(const std::vector<felem>& w) const;
};
RowSpace make_row_space(const FieldCtx& F, const Matrix& G);

Matrix mat_mul(const FieldCtx& F, const Matrix& A, const Matrix& B);
Matrix mat_inverse(const FieldCtx& F, const Matrix& A); // throws if singular

}  // namespace avc
