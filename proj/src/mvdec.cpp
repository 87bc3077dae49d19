#include "avc/mvdec.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace avc {

namespace {

long long binom_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long j = 1; j <= k; ++j)
        r = r * (n - k + j) / j;
    return r;
}

// Bound values over the whole Delta box, flattened to numerator/denominator
// arrays so the strict comparison against n - E is a single multiply. Cells
// outside Delta hold the grid size n, which no threshold n - E admits.
struct BoundTable {
    std::vector<int> dims;
    std::vector<long long> num, den;
    long long n = 0;

    bool passes(const std::vector<long long>& e, long long E) const {
        long long idx = 0;
        for (size_t j = 0; j < dims.size(); ++j) {
            if (e[j] >= dims[j]) return false;
            idx = idx * dims[j] + e[j];
        }
        return num[idx] < den[idx] * (n - E);
    }
};

BoundTable build_table(const ZeroBound& bound) {
    BoundTable tb;
    tb.n = bound.n;
    int m = (int)bound.sizes.size();
    tb.dims.resize(m);
    long long cells = 1;
    for (int j = 0; j < m; ++j) {
        tb.dims[j] = bound.r * bound.sizes[j];
        cells *= tb.dims[j];
    }
    tb.num.resize(cells);
    tb.den.resize(cells);
    std::vector<int> e(m, 0);
    for (long long idx = 0; idx < cells; ++idx) {
        Rat v = bound.value(e);
        tb.num[idx] = v.num;
        tb.den[idx] = v.den;
        for (int j = m - 1; j >= 0; --j) {
            if (++e[j] < tb.dims[j]) break;
            e[j] = 0;
        }
    }
    return tb;
}

std::vector<std::vector<int>> delta_members(int r, const std::vector<int>& sizes) {
    int m = (int)sizes.size();
    std::vector<int> dims(m);
    for (int j = 0; j < m; ++j) dims[j] = r * sizes[j];
    std::vector<std::vector<int>> out;
    std::vector<int> e(m, 0);
    while (true) {
        if (delta_contains(e, r, sizes)) out.push_back(e);
        int j = m - 1;
        for (; j >= 0; --j) {
            if (++e[j] < dims[j]) break;
            e[j] = 0;
        }
        if (j < 0) break;
    }
    return out;
}

// Beyond this i every K + i*M leaves the box for at least one frontier
// monomial, so the layer is empty; 0 marks "no such cap" (all-zero frontier).
long long layer_cutoff(const std::vector<std::vector<int>>& frontier,
                       const std::vector<int>& dims) {
    long long best = -1;
    for (const auto& M : frontier) {
        long long kill = -1;
        for (size_t j = 0; j < M.size(); ++j) {
            if (M[j] <= 0) continue;
            long long v = (dims[j] + M[j] - 1) / M[j];
            if (kill < 0 || v < kill) kill = v;
        }
        if (kill < 0) return 0;
        if (best < 0 || kill < best) best = kill;
    }
    return best;
}

long long count_layer(const BoundTable& tb, const std::vector<std::vector<int>>& deltaK,
                      const std::vector<std::vector<int>>& frontier, long long i,
                      long long E, std::vector<std::vector<int>>* members) {
    int m = (int)tb.dims.size();
    std::vector<long long> e(m);
    long long c = 0;
    for (const auto& K : deltaK) {
        bool ok = true;
        for (const auto& M : frontier) {
            for (int j = 0; j < m; ++j) e[j] = K[j] + i * (long long)M[j];
            if (!tb.passes(e, E)) { ok = false; break; }
        }
        if (!ok) continue;
        ++c;
        if (members) members->push_back(K);
    }
    return c;
}

// Z-degree t at which the cumulative layer sizes first exceed target, or -1
// when the layers die out (or stall) before that. Layers shrink as i grows,
// so an empty layer ends the sum for good.
long long reach_target(const BoundTable& tb, const std::vector<std::vector<int>>& deltaK,
                       const std::vector<std::vector<int>>& frontier, long long E,
                       long long target) {
    long long cutoff = layer_cutoff(frontier, tb.dims);
    long long cum = 0;
    for (long long i = 0;; ++i) {
        if (cutoff > 0 && i >= cutoff) return -1;
        long long c = count_layer(tb, deltaK, frontier, i, E, nullptr);
        if (c == 0) return -1;
        cum += c;
        if (cum > target) return i;
    }
}

void check_inputs(const MonomialSet& mset, const PointEnsemble& S, int r,
                  const ZeroBound& bound) {
    if (r < 1) throw std::invalid_argument("multiplicity must be at least 1");
    if (mset.mons.empty()) throw std::invalid_argument("empty monomial set");
    if (bound.r != r) throw std::invalid_argument("bound was built for a different multiplicity");
    if (bound.sizes != S.sizes)
        throw std::invalid_argument("bound was built for a different grid");
    for (const auto& e : mset.mons) {
        if (e.size() != S.sizes.size())
            throw std::invalid_argument("monomial arity disagrees with the grid");
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j] < 0 || e[j] >= S.sizes[j])
                throw std::invalid_argument("monomial set leaves the grid box");
    }
}

const char* kind_name(BoundKind kind, DFlavor flavor) {
    switch (kind) {
        case BoundKind::sz: return "sz";
        case BoundKind::closed_form: return "closed";
        case BoundKind::d_recursive: return flavor == DFlavor::literal ? "d" : "d_flat";
    }
    return "?";
}

BSetPlan plan_at(const BoundTable& tb, const std::vector<std::vector<int>>& deltaK,
                 const std::vector<std::vector<int>>& frontier, const ZeroBound& bound,
                 long long E, long long target) {
    long long t = reach_target(tb, deltaK, frontier, E, target);
    if (t < 0) throw std::invalid_argument("radius " + std::to_string(E) +
                                           " fails the unknown-count condition");
    BSetPlan plan;
    plan.r = bound.r;
    plan.E = E;
    plan.t = (int)t;
    plan.kind = bound.kind;
    plan.flavor = bound.flavor;
    plan.axis_order = bound.axis_order;
    plan.sets.resize(t + 1);
    long long cum = 0;
    for (long long i = 0; i < t; ++i) {
        count_layer(tb, deltaK, frontier, i, E, &plan.sets[i]);
        cum += (long long)plan.sets[i].size();
    }
    std::vector<std::vector<int>> last;
    count_layer(tb, deltaK, frontier, t, E, &last);
    long long need = target + 1 - cum;
    MonomialOrder grlex{OrderKind::grlex, {}};
    std::sort(last.begin(), last.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) {
                  return mono_less(a, b, grlex);
              });
    last.resize(need);
    std::sort(last.begin(), last.end());
    plan.sets[t] = std::move(last);
    plan.unknowns = target + 1;
    return plan;
}

}  // namespace

long long n_hasse(int m, int r) {
    if (m < 1 || r < 1) throw std::invalid_argument("need m >= 1 and r >= 1");
    return binom_ll(m + r, m + 1);
}

std::string BSetPlan::describe() const {
    std::ostringstream os;
    os << "mv r=" << r << " E=" << E << " t=" << t
       << " bound=" << kind_name(kind, flavor) << " order=";
    for (size_t j = 0; j < axis_order.size(); ++j)
        os << (j ? "," : "") << axis_order[j];
    os << " unknowns=" << unknowns << " layers=";
    for (size_t i = 0; i < sets.size(); ++i)
        os << (i ? "," : "") << sets[i].size();
    return os.str();
}

std::vector<std::vector<int>> b_set(int i, long long E,
                                    const std::vector<std::vector<int>>& frontier,
                                    const ZeroBound& bound) {
    if (i < 0) throw std::invalid_argument("negative Z-degree");
    if (E < 0 || E >= bound.n) throw std::invalid_argument("need 0 <= E < n");
    if (frontier.empty()) throw std::invalid_argument("empty frontier");
    int m = (int)bound.sizes.size();
    for (const auto& M : frontier)
        if ((int)M.size() != m) throw std::invalid_argument("frontier arity mismatch");
    Rat threshold(bound.n - E);
    std::vector<std::vector<int>> out;
    std::vector<int> shifted(m);
    for (auto& K : delta_members(bound.r, bound.sizes)) {
        bool ok = true;
        for (const auto& M : frontier) {
            bool boxed = true;
            for (int j = 0; j < m; ++j) {
                long long v = K[j] + (long long)i * M[j];
                if (v >= (long long)bound.r * bound.sizes[j]) { boxed = false; break; }
                shifted[j] = (int)v;
            }
            if (!boxed || !(bound.value(shifted) < threshold)) { ok = false; break; }
        }
        if (ok) out.push_back(K);
    }
    return out;
}

CapabilityResult capability(const MonomialSet& mset, const PointEnsemble& S,
                            int r, const ZeroBound& bound) {
    check_inputs(mset, S, r, bound);
    auto frontier = border(mset);
    long long target = S.n * n_hasse(S.m(), r);
    BoundTable tb = build_table(bound);
    auto deltaK = delta_members(r, S.sizes);
    if (reach_target(tb, deltaK, frontier, 0, target) < 0)
        throw std::invalid_argument(
            "the unknown-count condition fails even at zero errors; the set is "
            "too large for multiplicity r=" + std::to_string(r));
    long long lo = 0, hi = S.n - 1;
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        if (reach_target(tb, deltaK, frontier, mid, target) >= 0)
            lo = mid;
        else
            hi = mid - 1;
    }
    CapabilityResult res;
    res.E_max = lo;
    res.plan = plan_at(tb, deltaK, frontier, bound, lo, target);
    return res;
}

BSetPlan make_plan(const MonomialSet& mset, const PointEnsemble& S, int r,
                   const ZeroBound& bound, long long E) {
    check_inputs(mset, S, r, bound);
    if (E < 0 || E >= S.n) throw std::invalid_argument("need 0 <= E < n");
    auto frontier = border(mset);
    long long target = S.n * n_hasse(S.m(), r);
    BoundTable tb = build_table(bound);
    auto deltaK = delta_members(r, S.sizes);
    return plan_at(tb, deltaK, frontier, bound, E, target);
}

MultiPoly interpolate_mv(const PointEnsemble& S, const std::vector<felem>& received,
                         const BSetPlan& plan) {
    const FieldCtx& F = *S.F;
    int m = S.m();
    int r = plan.r;
    if ((long long)received.size() != S.n)
        throw std::invalid_argument("received word length mismatch");
    long long rows = S.n * n_hasse(m, r);
    if (plan.unknowns != rows + 1)
        throw std::invalid_argument("plan does not fit this point count");

    // unknown order: layer by layer, each layer in its stored order
    std::vector<std::pair<std::vector<int>, int>> unknowns;
    unknowns.reserve(plan.unknowns);
    for (int i = 0; i < (int)plan.sets.size(); ++i)
        for (const auto& K : plan.sets[i])
            unknowns.push_back({K, i});
    if ((long long)unknowns.size() != plan.unknowns)
        throw std::invalid_argument("plan layer sizes disagree with its unknown count");

    // Hasse multi-indices over the m grid variables plus Z
    std::vector<std::vector<int>> orders;
    std::vector<int> kv(m + 1, 0);
    while (true) {
        long long tot = 0;
        for (int v : kv) tot += v;
        if (tot <= r - 1) orders.push_back(kv);
        int j = m;
        for (; j >= 0; --j) {
            if (++kv[j] <= r - 1) break;
            kv[j] = 0;
        }
        if (j < 0) break;
    }

    auto pts = S.points();
    Matrix A(rows, unknowns.size());
    size_t row = 0;
    for (long long pidx = 0; pidx < S.n; ++pidx) {
        const auto& P = pts[pidx];
        felem y = received[pidx];
        for (const auto& ord : orders) {
            for (size_t col = 0; col < unknowns.size(); ++col) {
                const auto& K = unknowns[col].first;
                int zdeg = unknowns[col].second;
                if (zdeg < ord[m]) continue;
                felem c = F.from_int(binom_mod_p(zdeg, ord[m], F.p));
                if (c == 0) continue;
                c = F.mul(c, F.pow(y, zdeg - ord[m]));
                bool dead = false;
                for (int j = 0; j < m && !dead; ++j) {
                    if (K[j] < ord[j]) { dead = true; break; }
                    felem b = F.from_int(binom_mod_p(K[j], ord[j], F.p));
                    if (b == 0) { dead = true; break; }
                    c = F.mul(c, F.mul(b, F.pow(P[j], K[j] - ord[j])));
                }
                if (!dead) A.at(row, col) = c;
            }
            ++row;
        }
    }

    auto sol = solve(F, std::move(A), SolveMode::kernel_vector);
    if (sol.kernel.empty())
        throw std::runtime_error("interpolation system has full rank; plan invariant broken");
    const auto& coeffs = sol.kernel[0];
    MultiPoly Q(F, m + 1);
    for (size_t col = 0; col < unknowns.size(); ++col) {
        if (coeffs[col] == 0) continue;
        std::vector<int> e = unknowns[col].first;
        e.push_back(unknowns[col].second);
        Q.set(e, coeffs[col]);
    }
    if (Q.is_zero())
        throw std::runtime_error("interpolation solver returned the zero vector");
    return Q;
}

namespace {

// Q(x1, a, z) with the middle variable collapsed
MultiPoly specialize_x2(const MultiPoly& Q, felem a) {
    const FieldCtx& F = *Q.F;
    MultiPoly out(F, 2);
    for (const auto& [e, c] : Q.t) {
        felem v = F.mul(c, F.pow(a, e[1]));
        if (v == 0) continue;
        std::vector<int> e2{e[0], e[2]};
        out.set(e2, F.add(out.coeff(e2), v));
    }
    return out;
}

// exact division of Q by (x2 - a); only called when Q(x1, a, z) is zero
MultiPoly divide_x2_linear(const MultiPoly& Q, felem a) {
    const FieldCtx& F = *Q.F;
    int d = Q.degree_in(1);
    // coefficient layers in x2, keyed by (x1 exponent, z exponent)
    std::vector<std::map<std::pair<int, int>, felem>> C(d + 1);
    for (const auto& [e, c] : Q.t) C[e[1]][{e[0], e[2]}] = c;
    std::vector<std::map<std::pair<int, int>, felem>> R(d);
    R[d - 1] = C[d];
    for (int j = d - 1; j >= 1; --j) {
        R[j - 1] = C[j];
        for (const auto& [key, c] : R[j]) {
            felem add = F.mul(a, c);
            auto it = R[j - 1].find(key);
            felem v = F.add(it == R[j - 1].end() ? 0 : it->second, add);
            if (v == 0) { if (it != R[j - 1].end()) R[j - 1].erase(it); }
            else R[j - 1][key] = v;
        }
    }
    MultiPoly out(F, 3);
    for (int j = 0; j < d; ++j)
        for (const auto& [key, c] : R[j])
            out.set({key.first, j, key.second}, c);
    return out;
}

// does Z = Fp kill Q? substitute and see
bool z_substitution_vanishes(const MultiPoly& Q, const MultiPoly& Fp) {
    const FieldCtx& F = *Q.F;
    int tmax = Q.degree_in(2);
    std::vector<MultiPoly> layers((size_t)tmax + 1, MultiPoly(F, 2));
    for (const auto& [e, c] : Q.t) layers[e[2]].set({e[0], e[1]}, c);
    MultiPoly acc(F, 2), pw(F, 2);
    pw.set({0, 0}, 1);
    for (int i = 0; i <= tmax; ++i) {
        acc = poly_add(acc, poly_mul(layers[i], pw));
        if (i < tmax) pw = poly_mul(pw, Fp);
    }
    return acc.is_zero();
}

}  // namespace

std::vector<MultiPoly> factor_step(const MultiPoly& Q, const MonomialSet& mset,
                                   const PointEnsemble& S, long long E,
                                   const std::vector<felem>& received,
                                   long long budget) {
    const FieldCtx& F = *S.F;
    if (S.m() != 2)
        throw std::invalid_argument("the specialization strategy handles two-variable grids");
    if (Q.is_zero() || Q.nvars != 3)
        throw std::invalid_argument("need a nonzero polynomial in x1, x2, z");
    if (E >= 0 && (long long)received.size() != S.n)
        throw std::invalid_argument("received word length mismatch");
    if (budget < 1) throw std::invalid_argument("budget must be positive");

    int d1max = 0, d2max = 0;
    for (const auto& e : mset.mons) {
        if (e.size() != 2) throw std::invalid_argument("monomial arity disagrees with the grid");
        d1max = std::max(d1max, e[0]);
        d2max = std::max(d2max, e[1]);
    }
    if (d1max >= S.sizes[0] || d2max >= S.sizes[1])
        throw std::invalid_argument("monomial set leaves the grid box");
    int kbound = d1max + 1;
    int nspec = d2max + 1;

    // Z-roots of each specialization; a true divisor Z - F stays a root after
    // the (x2 - a) powers are divided out, so an empty root list anywhere
    // means no divisor exists
    std::vector<felem> anchors(S.sets[1].begin(), S.sets[1].begin() + nspec);
    std::vector<std::vector<std::vector<felem>>> roots(nspec);
    long long combos = 1;
    for (int l = 0; l < nspec; ++l) {
        MultiPoly work = Q;
        MultiPoly spec = specialize_x2(work, anchors[l]);
        while (spec.is_zero()) {
            work = divide_x2_linear(work, anchors[l]);
            spec = specialize_x2(work, anchors[l]);
        }
        roots[l] = z_roots_univariate(spec, kbound);
        if (roots[l].empty()) return {};
        combos *= (long long)roots[l].size();
        if (combos > budget)
            throw std::runtime_error("factor step needs " + std::to_string(combos) +
                                     "+ root combinations, over the budget of " +
                                     std::to_string(budget));
    }

    // Lagrange basis over the anchor values, dense coefficient vectors in x2
    std::vector<std::vector<felem>> lag(nspec, std::vector<felem>(nspec, 0));
    for (int l = 0; l < nspec; ++l) {
        std::vector<felem> poly{1};
        felem denom = 1;
        for (int j = 0; j < nspec; ++j) {
            if (j == l) continue;
            std::vector<felem> next(poly.size() + 1, 0);
            for (size_t d = 0; d < poly.size(); ++d) {
                next[d + 1] = F.add(next[d + 1], poly[d]);
                next[d] = F.add(next[d], F.mul(poly[d], F.neg(anchors[j])));
            }
            poly = std::move(next);
            denom = F.mul(denom, F.sub(anchors[l], anchors[j]));
        }
        felem scale = F.inv(denom);
        for (size_t d = 0; d < poly.size(); ++d) lag[l][d] = F.mul(poly[d], scale);
    }

    std::vector<MultiPoly> found;
    std::vector<size_t> pick(nspec, 0);
    std::vector<std::vector<felem>> grid(kbound, std::vector<felem>(nspec));
    while (true) {
        for (auto& row : grid) std::fill(row.begin(), row.end(), 0);
        for (int l = 0; l < nspec; ++l) {
            const auto& fl = roots[l][pick[l]];
            for (int d1 = 0; d1 < kbound; ++d1) {
                if (fl[d1] == 0) continue;
                for (int d2 = 0; d2 < nspec; ++d2)
                    grid[d1][d2] = F.add(grid[d1][d2], F.mul(fl[d1], lag[l][d2]));
            }
        }
        bool supported = true;
        MultiPoly cand(F, 2);
        for (int d1 = 0; d1 < kbound && supported; ++d1)
            for (int d2 = 0; d2 < nspec; ++d2) {
                if (grid[d1][d2] == 0) continue;
                if (!mset.mons.count({d1, d2})) { supported = false; break; }
                cand.set({d1, d2}, grid[d1][d2]);
            }
        if (supported) {
            bool keep = z_substitution_vanishes(Q, cand);
            if (!keep && E >= 0)
                keep = hamming_distance(evaluate_grid(cand, S.sets), received) <= E;
            if (keep) found.push_back(std::move(cand));
        }
        int l = nspec - 1;
        for (; l >= 0; --l) {
            if (++pick[l] < roots[l].size()) break;
            pick[l] = 0;
        }
        if (l < 0) break;
    }
    std::sort(found.begin(), found.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return a.t < b.t; });
    return found;
}

DecodeReport decode_mv(const std::vector<felem>& received, const CodeSpec& code,
                       int r, const ZeroBound& bound, long long E) {
    const PointEnsemble& S = code.S;
    if (S.m() != 2)
        throw std::invalid_argument("the pipeline decodes two-variable grids");
    if ((long long)received.size() != S.n)
        throw std::invalid_argument("received word length mismatch");
    CapabilityResult cap = capability(code.mset, S, r, bound);
    if (E < 0) E = cap.E_max;
    if (E > cap.E_max)
        throw std::invalid_argument("requested radius " + std::to_string(E) +
                                    " exceeds the capability " + std::to_string(cap.E_max));
    BSetPlan plan = E == cap.E_max ? std::move(cap.plan)
                                   : make_plan(code.mset, S, r, bound, E);
    MultiPoly Q = interpolate_mv(S, received, plan);
    auto cands = factor_step(Q, code.mset, S, E, received);

    std::vector<std::pair<std::vector<felem>, long long>> keep;
    for (const auto& Fp : cands) {
        std::vector<felem> w = evaluate_grid(Fp, S.sets);
        long long d = hamming_distance(w, received);
        if (d <= E) keep.push_back({std::move(w), d});
    }
    std::sort(keep.begin(), keep.end());
    DecodeReport rep;
    rep.plan = plan.describe();
    for (auto& [w, d] : keep) {
        rep.words.push_back(std::move(w));
        rep.distances.push_back(d);
    }
    return rep;
}

double radius_estimate(long long s1, long long s2, long long u) {
    if (s1 < 1 || s2 < 1 || s1 % s2 != 0)
        throw std::invalid_argument("need s2 dividing s1");
    if (u < 0 || u > s1)
        throw std::invalid_argument("need 0 <= u <= s1");
    return (double)(s1 * s2) * (1.0 - std::cbrt((double)u / (double)s1));
}

}  // namespace avc
