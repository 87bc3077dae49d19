#pragma once

#include "avc/ff.hpp"
#include "avc/poly.hpp"
#include "avc/rational.hpp"

#include <optional>
#include <set>
#include <vector>

namespace avc {

// Product point set S_1 x ... x S_m with all coordinates from one field.
struct PointEnsemble {
    const FieldCtx* F = nullptr;
    std::vector<std::vector<felem>> sets;
    std::vector<int> sizes;
    long long n = 0;

    int m() const { return (int)sets.size(); }
    // all points, row-major with the last coordinate moving fastest (the same
    // order evaluate_grid uses)
    std::vector<std::vector<felem>> points() const;
};

PointEnsemble make_ensemble(const FieldCtx& F, const std::vector<std::vector<felem>>& sets);
// S_j = first sizes[j] entries of the fixed sequence (0, 1, g, g^2, ...)
PointEnsemble default_ensemble(const FieldCtx& F, const std::vector<int>& sizes);
// every axis = all units (1, g, ..., g^(q-2))
PointEnsemble units_ensemble(const FieldCtx& F, int m);

enum class SetKind { wrm, qary_rm, mcj, hyperbolic, joyner, custom };

struct MonomialSet {
    SetKind kind = SetKind::custom;
    std::set<std::vector<int>> mons;
    // construction parameters, kept for report provenance
    Rat u;
    std::vector<Rat> w;
    long long delta = 0;

    long long size() const { return (long long)mons.size(); }
    bool divisor_closed() const;
};

// weighted set {e : e_j < s_j, sum w_j e_j <= u}; membership decided in exact
// rational arithmetic
MonomialSet wrm_set(const std::vector<int>& sizes, const Rat& u, const std::vector<Rat>& w);
MonomialSet qary_rm_set(const std::vector<int>& sizes, long long u);
// {e : prod (s_j - e_j) >= delta}
MonomialSet mcj_set(const std::vector<int>& sizes, long long delta);
// {e : prod (e_j + 1) < delta}
MonomialSet hyperbolic_set(const std::vector<int>& sizes, long long delta);
// {1} u {x^i y^j : i,j >= 1, i+j <= 5}, meant for the 7x7 unit grid over GF(8)
MonomialSet joyner_set();
MonomialSet custom_set(const std::set<std::vector<int>>& mons, const std::vector<int>& sizes);

enum class Sense { primal, dual };

struct CodeSpec {
    MonomialSet mset;
    PointEnsemble S;
    Sense sense = Sense::primal;
    mutable std::optional<Matrix> gen_cache;

    // monomials in the canonical order (ascending lex, the set's own order)
    std::vector<std::vector<int>> monomials() const;
    // primal: rows are ev_S(M); dual: rows span the null space of the primal
    // generator
    const Matrix& generator() const;
};

CodeSpec make_code(MonomialSet mset, PointEnsemble S, Sense sense = Sense::primal);

long long dimension(const CodeSpec& code);

struct DistanceBound {
    long long value = 0;
    bool exact = false;
};
// min over the set of prod (s_j - e_j); exact when the set is divisor-closed
DistanceBound footprint_distance(const MonomialSet& mset, const std::vector<int>& sizes);
DistanceBound footprint_distance(const CodeSpec& code);

// Product of the first i_v linear factors per axis: leading monomial X^i,
// vanishing on exactly n - prod (s_v - i_v) grid points.
MultiPoly distance_witness(const std::vector<int>& i, const PointEnsemble& S);

// Weight w2 making RM(S1,S2,u,w1,w2) optimal: w1*s1/s2, then w1*s1-u, then w1
// as u crosses the two breakpoints.
Rat optimal_w2(long long s1, long long s2, const Rat& u, const Rat& w1);

struct WrmBound {
    Rat value;
    bool exact = false;
    int eq_case = 0; // which of the eight two-variable distance cases applied
};
WrmBound wrm_distance_formula(long long s1, long long s2, const Rat& u,
                              const Rat& w1, const Rat& w2);

struct MvBound {
    Rat value;
    bool exact = false;
    int hypothesis = 0; // 1: ratio chain w_j/prod_{i!=j} s_i nondecreasing, 2: w nonincreasing
};
// Needs sizes nonincreasing and one of the two weight hypotheses; callers fall
// back to the footprint over the full set otherwise.
MvBound wrm_distance_multivar(const std::vector<int>& s, const Rat& u, const std::vector<Rat>& w);

struct RegionReport {
    int region = 0;          // 1, 2, 3
    bool approximate = false; // set when a divisibility assumption of the formula fails
    Rat wrm_dim;
    double rm_cap = 0;       // dimension cap for an equal-sized square-grid code of the same distance
    std::optional<Rat> rm_cap_exact;
};
// Dimension comparison formulas for the three u-regions of the optimal-weight
// two-variable codes (w1 = 1 normalization).
RegionReport region_dimensions(long long s1, long long s2, long long u);

struct DominanceVerdict {
    long long dim_first = 0;
    long long dim_second = 0;
    int verdict = 0; // sign(dim_second - dim_first)
    long long u_first = -1, u_second = -1; // maximizing parameters
};
// Best dimension achievable at minimum distance >= d by optimal-weight codes
// on (s1,s2) vs (s1p,s2p), integer u search.
DominanceVerdict dominance_check(long long s1, long long s2, long long s1p, long long s2p,
                                 long long d);

// min{(i_1+1)...(i_m+1) : X^i outside the set, i_j < s_j}
long long dual_designed_distance(const MonomialSet& mset, const std::vector<int>& sizes);

// Order-domain machinery on the full grid basis, small n only: basis vectors
// are ev of all box monomials in total-degree-lex order.
struct FengRaoContext {
    const FieldCtx* F = nullptr;
    PointEnsemble S;
    long long n = 0;
    std::vector<std::vector<int>> basis_mons;
    std::vector<std::vector<int>> rho_product; // rho of b_i * b_j (pointwise product), 1-based values
};
FengRaoContext make_fengrao_context(const PointEnsemble& S); // guarded to n <= 81
// number of well-behaving pairs (i,j) with rho(b_i*b_j) = l; l is 1-based
long long fengrao_mu(const FengRaoContext& ctx, long long l);
// min mu(l) over basis monomials outside the set: designed distance of the
// dual code
long long fengrao_designed_distance(const FengRaoContext& ctx, const MonomialSet& mset);

Matrix generator_matrix(const CodeSpec& code);
std::vector<felem> encode(const CodeSpec& code, const std::vector<felem>& message);
// exhaustive minimum distance, guarded to q^dim <= 2^20
long long min_distance_bruteforce(const CodeSpec& code);

}  // namespace avc
