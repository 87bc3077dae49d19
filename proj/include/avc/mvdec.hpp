#pragma once

#include "avc/codes.hpp"
#include "avc/rsdec.hpp"
#include "avc/zeros.hpp"

#include <vector>

namespace avc {

// Interpolation constraints per point when asking for multiplicity r in m+1
// variables: the number of Hasse multi-indices k in N0^(m+1) with |k| <= r-1,
// which is binom(m+r, m+1).
long long n_hasse(int m, int r);

// Support plan for Q = sum_i Q_i Z^i: full monomial sets for i = 0..t-1 and a
// truncated set for i = t, sized so the homogeneous system has exactly one
// more unknown than it has constraints.
struct BSetPlan {
    int r = 0;
    long long E = 0;
    int t = 0;
    BoundKind kind = BoundKind::sz;
    DFlavor flavor = DFlavor::literal;
    std::vector<int> axis_order;
    // sets[i] = allowed exponents of Q_i, each in ascending lex; sets[t] is
    // the truncation (graded-lex smallest members of the full set)
    std::vector<std::vector<std::vector<int>>> sets;
    long long unknowns = 0;

    std::string describe() const;
};

// {K in Delta(r, s) : bound(K + i*M) < n - E for every M in frontier}, strict
// comparison in exact rationals. Exponents K + i*M outside Delta evaluate to
// n and fail on their own. Ascending lex.
std::vector<std::vector<int>> b_set(int i, long long E,
                                    const std::vector<std::vector<int>>& frontier,
                                    const ZeroBound& bound);

struct CapabilityResult {
    long long E_max = -1;
    BSetPlan plan;
};

// Largest E for which the B sets carry more than n*N(m,r) unknowns at some
// finite Z-degree t, plus the plan built at that E. The count includes the
// i = 0 layer. Throws invalid_argument when even E = 0 is out of reach.
CapabilityResult capability(const MonomialSet& mset, const PointEnsemble& S,
                            int r, const ZeroBound& bound);

// the plan for one specific admissible E (capability rebuilt internally when
// callers want a smaller radius than E_max)
BSetPlan make_plan(const MonomialSet& mset, const PointEnsemble& S, int r,
                   const ZeroBound& bound, long long E);

// Nonzero Q in m+1 variables (Z last) with Supp(Q_i) inside plan.sets[i] and
// multiplicity >= plan.r at every (P_j, received_j).
MultiPoly interpolate_mv(const PointEnsemble& S, const std::vector<felem>& received,
                         const BSetPlan& plan);

// All F with Supp(F) in mset and (Z - F) | Q, found by specializing X2 at
// enough points of S_2, pulling Z-roots of each specialization, and gluing
// the choices back together by interpolation in X2. Two-variable grids only.
// Candidates are kept when Q(X, F) = 0 by substitution, or failing that when
// ev(F) lands within E of received (they are list members either way); pass
// E < 0 to insist on the divisibility route alone. budget caps the number of
// root combinations tried; overruns throw.
std::vector<MultiPoly> factor_step(const MultiPoly& Q, const MonomialSet& mset,
                                   const PointEnsemble& S, long long E,
                                   const std::vector<felem>& received,
                                   long long budget = 10000);

// Full pipeline: capability search, interpolation, factor step, distance
// filter. E = -1 decodes at the computed E_max; a caller value above E_max
// throws. Every codeword within distance E of received appears in the output.
DecodeReport decode_mv(const std::vector<felem>& received, const CodeSpec& code,
                       int r, const ZeroBound& bound, long long E = -1);

// s1*s2*(1 - cbrt(u/s1)): the large-r decoding radius heuristic for the
// optimal-weight two-variable codes with s2 | s1. Accepts 0 <= u <= s1.
double radius_estimate(long long s1, long long s2, long long u);

}  // namespace avc
