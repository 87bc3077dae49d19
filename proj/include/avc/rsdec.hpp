#pragma once

#include "avc/codes.hpp"
#include "avc/ff.hpp"
#include "avc/poly.hpp"

#include <string>
#include <vector>

namespace avc {

// Reed-Solomon code: evaluations of the polynomials of degree < k at n
// distinct points of one field. The points need not exhaust the field.
struct RSCode {
    const FieldCtx* F = nullptr;
    std::vector<felem> points;
    int k = 0;

    long long n() const { return (long long)points.size(); }
};

RSCode make_rs_code(const FieldCtx& F, std::vector<felem> points, int k);

// message = exactly k coefficients, constant term first
std::vector<felem> rs_encode(const RSCode& code, const std::vector<felem>& message);

// Interpolation parameters for list decoding at multiplicity r. L is the
// least (1,k-1)-weighted degree cap whose monomial count exceeds the
// n*r*(r+1)/2 vanishing constraints; the agreement A_min = floor(L/r)+1 then
// satisfies r*A_min > L, and E_max = n - A_min (floored at 0) is the certified
// list radius.
struct GSParams {
    int r = 1;
    long long L = 0;
    long long A_min = 0;
    long long E_max = 0;
    long long t_Z = 0;         // Z-degree reach of the chosen support
    long long constraints = 0; // n*r*(r+1)/2
};

GSParams gs_parameters(long long n, int k, int r);

// Limit of E_max as r grows: n - 1 - floor(sqrt(n*(k-1))). Returns 0 when
// k-1 >= n, where no agreement bound clears the weighted degree.
long long gs_capability_ultimate(long long n, int k);

// The ceil(n - sqrt(n*k)) flavor of the same radius. At the rates the tables
// use it sits within 1 of the agreement-based value (e.g. n=512, k=257: 150
// here against 149 exact) and it never exceeds it by more than 1; it can be
// zero or negative, which is what the subfield decoder checks before doing
// any work.
long long gs_capability_ceiling(long long n, int k);

// Decoder output shared across this project: candidate codewords, their
// Hamming distances to the received word, and a text echo of the parameters
// the run used.
struct DecodeReport {
    std::vector<std::vector<felem>> words;
    std::vector<long long> distances;
    std::string plan;
};

long long hamming_distance(const std::vector<felem>& a, const std::vector<felem>& b);

// Interpolation step alone, exposed so tests can certify the result: nonzero
// Q(X,Z), weighted degree <= L, multiplicity >= r at every (x_i, y_i). The
// support is the first constraints+1 monomials ordered by weighted degree,
// ties by lower Z-degree.
MultiPoly gs_interpolate(const RSCode& code, const std::vector<felem>& received,
                         const GSParams& gp);

// Guruswami-Sudan list decoder. Every codeword within E_max of the received
// word appears in the output, and every output word is re-verified to lie
// within E_max before being returned.
DecodeReport gs_decode_rs(const std::vector<felem>& received, const RSCode& code, int r);

// Degree bound of the ambient univariate code the coordinate-collapsing map
// phi lands in: k = t*q^(m-1) + 1 with t the maximal total degree in the set.
long long ambient_rs_k(const MonomialSet& mset, const PointEnsemble& S);

// Decode a word of E(M,S) over GF(q) by embedding the grid into GF(q^m) via
// phi, list decoding the ambient Reed-Solomon code there, and keeping the
// candidates whose symbols all project back to GF(q) and which pass a
// membership check against the code's generator. Refuses up front when the
// ambient rate makes the radius nonpositive.
DecodeReport subfield_subcode_decode(const std::vector<felem>& received,
                                     const CodeSpec& code, int r);

// Decoder for the [49,11] code on the 7x7 unit grid over GF(8): guess the
// constant term, strip it, divide entry-wise by x_i*y_i, decode the residue in
// the total-degree-3 code through the subfield pipeline, and undo the
// transformation. Candidates are kept when they are codewords within distance
// E of the received word; the union over all 8 guesses is deduplicated.
DecodeReport joyner_decode(const FieldCtx& F, const std::vector<felem>& received,
                           int r, long long E);

}  // namespace avc
