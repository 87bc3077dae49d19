#pragma once

#include "avc/codes.hpp"
#include "avc/poly.hpp"
#include "avc/rational.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace avc {

// floor(i_1/s_1) + ... + floor(i_m/s_m) < r
bool delta_contains(const std::vector<int>& i, int r, const std::vector<int>& sizes);

// Divisibility-maximal elements, ascending lex.
std::vector<std::vector<int>> border(const MonomialSet& mset);

// (i_1*s_2...s_m + ... + s_1...s_{m-1}*i_m) / r. Not capped at the grid size;
// callers clamp when they need an actual point count.
Rat sz_mult_bound(const std::vector<int>& i, int r, const std::vector<int>& sizes);
// total-degree form on the full q^m grid: u*q^(m-1)/r
Rat sz_mult_bound(long long u, int r, long long q, int m);

// Degree-u multiplicity-r bound on the full q^m grid with w = floor(u/q).
// Defined for 0 <= u <= r*q; at both endpoints it coincides with the
// total-degree sz_mult_bound value.
Rat pw_bound(long long u, int r, long long q, int m);

// The recursive bound comes in two variants. literal uses the inner value at
// multiplicity r-d for a point absorbing d of the budget; flat uses r-1 for
// every d < r. They agree for r <= 2. Only literal is a sound zero bound;
// flat is kept because it is cheaper, never larger, and still monotone, which
// is all the capability search needs from a comparison grid.
enum class DFlavor { literal, flat };

// memo for d_function, keyed by (exponent prefix, multiplicity)
struct DCache {
    std::map<std::pair<std::vector<int>, int>, long long> memo;
};

long long d_function(const std::vector<int>& i, int r, const std::vector<int>& sizes,
                     DCache* cache = nullptr, DFlavor flavor = DFlavor::literal);

// Full table of d_function over the exponent box prod [0, r*s_j), last axis
// fastest, built layer by layer so no entry is recomputed.
struct DGrid {
    std::vector<int> sizes;
    int r = 1;
    DFlavor flavor = DFlavor::literal;
    std::vector<int> dims;
    std::vector<long long> vals;

    long long at(const std::vector<int>& i) const;
};
DGrid d_grid(const std::vector<int>& sizes, int r, DFlavor flavor = DFlavor::literal);

// Two-variable closed forms, exact rational. Only defined inside Delta.
Rat d_closed_two_var(long long i1, long long i2, int r, long long s1, long long s2);

enum class BoundKind { sz, closed_form, d_recursive };

// A zero bound packaged for the decoding search: evaluate on a leading
// exponent, get a bound on the weighted zero count (capped at n), with the
// convention that anything outside Delta counts as the whole grid. axis_order
// permutes variables before evaluation; the sz kind is symmetric but the
// other two are not, and some published tables were generated in the swapped
// orientation, so the orientation is explicit and reported.
struct ZeroBound {
    BoundKind kind = BoundKind::sz;
    DFlavor flavor = DFlavor::literal;
    std::vector<int> axis_order;
    std::vector<int> sizes;
    int r = 1;
    long long n = 0;
    std::shared_ptr<const DGrid> grid;

    Rat value(const std::vector<int>& i) const;
};
ZeroBound make_zero_bound(BoundKind kind, const std::vector<int>& sizes, int r,
                          DFlavor flavor = DFlavor::literal,
                          std::vector<int> axis_order = {});

// For an exponent outside Delta: a polynomial with leading monomial X^i under
// every order that has multiplicity >= r at every grid point.
MultiPoly vanishing_witness(const std::vector<int>& i, int r, const PointEnsemble& S);

// Mean over the nonzero monomials of Delta(r, q,...,q) of
// (floor(SZ) - D) / floor(SZ) with SZ = min(sum(i)*q^(m-1), r*q^m)/r, skipping
// monomials whose floored SZ term is 0. truncated is the exact 3-decimal
// truncation; raw is the full-precision mean.
struct MeanImprovement {
    Rat truncated;
    double raw = 0;
    long long cells = 0;
};
MeanImprovement mean_improvement(int m, int r, long long q);

// Ground truth: number of grid points where F has multiplicity >= r.
// Guarded to grids of at most 2^12 points.
long long zero_count_oracle(const MultiPoly& F, int r, const PointEnsemble& S);

}  // namespace avc
