#include "avc/codes.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

namespace avc {

namespace {

long long isqrt_ll(long long v) {
    long long r = (long long)std::sqrt((double)v);
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// iterate all exponent vectors in the box [0,sizes) and call fn
template <class Fn>
void for_box(const std::vector<int>& sizes, Fn&& fn) {
    std::vector<int> e(sizes.size(), 0);
    for (;;) {
        fn(e);
        int j = (int)sizes.size() - 1;
        while (j >= 0) {
            if (++e[j] < sizes[j]) break;
            e[j] = 0;
            --j;
        }
        if (j < 0) return;
    }
}

void check_sizes(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("empty size list");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("axis size must be positive");
}

}  // namespace

std::vector<std::vector<felem>> PointEnsemble::points() const {
    std::vector<std::vector<felem>> pts;
    pts.reserve((size_t)n);
    std::vector<size_t> idx(sets.size(), 0);
    std::vector<felem> pt(sets.size());
    for (long long i = 0; i < n; ++i) {
        for (size_t j = 0; j < sets.size(); ++j) pt[j] = sets[j][idx[j]];
        pts.push_back(pt);
        for (int j = (int)sets.size() - 1; j >= 0; --j) {
            if (++idx[j] < sets[j].size()) break;
            idx[j] = 0;
        }
    }
    return pts;
}

PointEnsemble make_ensemble(const FieldCtx& F, const std::vector<std::vector<felem>>& sets) {
    if (sets.empty()) throw std::invalid_argument("ensemble needs at least one axis");
    PointEnsemble E;
    E.F = &F;
    E.sets = sets;
    E.n = 1;
    for (const auto& s : sets) {
        if (s.empty()) throw std::invalid_argument("empty coordinate set");
        std::set<felem> dist(s.begin(), s.end());
        if (dist.size() != s.size()) throw std::invalid_argument("coordinate set has repeats");
        for (felem x : s)
            if (x >= F.q) throw std::invalid_argument("element code out of range");
        E.sizes.push_back((int)s.size());
        E.n *= (long long)s.size();
    }
    return E;
}

PointEnsemble default_ensemble(const FieldCtx& F, const std::vector<int>& sizes) {
    check_sizes(sizes);
    std::vector<felem> seq;
    seq.push_back(0);
    felem x = 1;
    for (uint32_t i = 0; i + 1 < F.q; ++i) {
        seq.push_back(x);
        x = F.mul(x, F.generator);
    }
    std::vector<std::vector<felem>> sets;
    for (int s : sizes) {
        if ((uint32_t)s > F.q) throw std::invalid_argument("axis larger than the field");
        sets.emplace_back(seq.begin(), seq.begin() + s);
    }
    return make_ensemble(F, sets);
}

PointEnsemble units_ensemble(const FieldCtx& F, int m) {
    if (m < 1) throw std::invalid_argument("need at least one axis");
    std::vector<felem> units;
    felem x = 1;
    for (uint32_t i = 0; i + 1 < F.q; ++i) {
        units.push_back(x);
        x = F.mul(x, F.generator);
    }
    return make_ensemble(F, std::vector<std::vector<felem>>(m, units));
}

bool MonomialSet::divisor_closed() const {
    for (const auto& e : mons) {
        std::vector<int> d = e;
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            --d[j];
            if (!mons.count(d)) return false;
            ++d[j];
        }
    }
    return true;
}

MonomialSet wrm_set(const std::vector<int>& sizes, const Rat& u, const std::vector<Rat>& w) {
    check_sizes(sizes);
    if (w.size() != sizes.size()) throw std::invalid_argument("one weight per axis required");
    for (const Rat& x : w)
        if (!(x > Rat(0))) throw std::invalid_argument("weights must be positive");
    MonomialSet M;
    M.kind = SetKind::wrm;
    M.u = u;
    M.w = w;
    for_box(sizes, [&](const std::vector<int>& e) {
        Rat deg(0);
        for (size_t j = 0; j < e.size(); ++j) deg = deg + w[j] * Rat(e[j]);
        if (deg <= u) M.mons.insert(e);
    });
    return M;
}

MonomialSet qary_rm_set(const std::vector<int>& sizes, long long u) {
    MonomialSet M = wrm_set(sizes, Rat(u), std::vector<Rat>(sizes.size(), Rat(1)));
    M.kind = SetKind::qary_rm;
    return M;
}

MonomialSet mcj_set(const std::vector<int>& sizes, long long delta) {
    check_sizes(sizes);
    if (delta < 1) throw std::invalid_argument("delta must be positive");
    MonomialSet M;
    M.kind = SetKind::mcj;
    M.delta = delta;
    for_box(sizes, [&](const std::vector<int>& e) {
        long long prod = 1;
        for (size_t j = 0; j < e.size(); ++j) prod *= (sizes[j] - e[j]);
        if (prod >= delta) M.mons.insert(e);
    });
    return M;
}

MonomialSet hyperbolic_set(const std::vector<int>& sizes, long long delta) {
    check_sizes(sizes);
    if (delta < 1) throw std::invalid_argument("delta must be positive");
    MonomialSet M;
    M.kind = SetKind::hyperbolic;
    M.delta = delta;
    for_box(sizes, [&](const std::vector<int>& e) {
        long long prod = 1;
        for (size_t j = 0; j < e.size(); ++j) prod *= (e[j] + 1);
        if (prod < delta) M.mons.insert(e);
    });
    return M;
}

MonomialSet joyner_set() {
    MonomialSet M;
    M.kind = SetKind::joyner;
    M.mons.insert({0, 0});
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; i + j <= 5; ++j) M.mons.insert({i, j});
    return M;
}

MonomialSet custom_set(const std::set<std::vector<int>>& mons, const std::vector<int>& sizes) {
    check_sizes(sizes);
    for (const auto& e : mons) {
        if (e.size() != sizes.size()) throw std::invalid_argument("exponent arity mismatch");
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j] < 0 || e[j] >= sizes[j]) throw std::invalid_argument("exponent outside the box");
    }
    MonomialSet M;
    M.kind = SetKind::custom;
    M.mons = mons;
    return M;
}

std::vector<std::vector<int>> CodeSpec::monomials() const {
    return std::vector<std::vector<int>>(mset.mons.begin(), mset.mons.end());
}

const Matrix& CodeSpec::generator() const {
    if (gen_cache) return *gen_cache;
    Matrix G((size_t)mset.mons.size(), (size_t)S.n);
    size_t r = 0;
    for (const auto& e : mset.mons) {
        MultiPoly mono(*S.F, S.m());
        mono.set(e, 1);
        std::vector<felem> row = evaluate_grid(mono, S.sets);
        for (size_t j = 0; j < row.size(); ++j) G.at(r, j) = row[j];
        ++r;
    }
    if (sense == Sense::primal) {
        gen_cache = std::move(G);
    } else {
        SolveResult ker = solve(*S.F, G, SolveMode::kernel_basis);
        Matrix D(ker.kernel.size(), (size_t)S.n);
        for (size_t i = 0; i < ker.kernel.size(); ++i)
            for (size_t j = 0; j < (size_t)S.n; ++j) D.at(i, j) = ker.kernel[i][j];
        gen_cache = std::move(D);
    }
    return *gen_cache;
}

CodeSpec make_code(MonomialSet mset, PointEnsemble S, Sense sense) {
    for (const auto& e : mset.mons) {
        if ((int)e.size() != S.m()) throw std::invalid_argument("exponent arity mismatch");
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j] >= S.sizes[j]) throw std::invalid_argument("exponent outside the box");
    }
    CodeSpec c;
    c.mset = std::move(mset);
    c.S = std::move(S);
    c.sense = sense;
    return c;
}

long long dimension(const CodeSpec& code) {
    if (code.sense == Sense::primal) return code.mset.size();
    return code.S.n - code.mset.size();
}

DistanceBound footprint_distance(const MonomialSet& mset, const std::vector<int>& sizes) {
    if (mset.mons.empty()) throw std::invalid_argument("empty monomial set");
    long long best = LLONG_MAX;
    for (const auto& e : mset.mons) {
        long long prod = 1;
        for (size_t j = 0; j < e.size(); ++j) prod *= (sizes[j] - e[j]);
        best = std::min(best, prod);
    }
    return {best, mset.divisor_closed()};
}

DistanceBound footprint_distance(const CodeSpec& code) {
    if (code.sense != Sense::primal) throw std::invalid_argument("footprint bound applies to the primal code");
    return footprint_distance(code.mset, code.S.sizes);
}

MultiPoly distance_witness(const std::vector<int>& i, const PointEnsemble& S) {
    if ((int)i.size() != S.m()) throw std::invalid_argument("exponent arity mismatch");
    for (size_t v = 0; v < i.size(); ++v)
        if (i[v] < 0 || i[v] > S.sizes[v]) throw std::invalid_argument("exponent outside the box");
    MultiPoly f(*S.F, S.m());
    f.set(std::vector<int>(S.m(), 0), 1);
    for (size_t v = 0; v < i.size(); ++v)
        for (int t = 0; t < i[v]; ++t) {
            MultiPoly lin(*S.F, S.m());
            std::vector<int> e(S.m(), 0);
            e[v] = 1;
            lin.set(e, 1);
            lin.set(std::vector<int>(S.m(), 0), S.F->neg(S.sets[v][t]));
            f = poly_mul(f, lin);
        }
    return f;
}

Rat optimal_w2(long long s1, long long s2, const Rat& u, const Rat& w1) {
    if (s1 < s2 || s2 < 2) throw std::invalid_argument("need s1 >= s2 >= 2");
    if (!(w1 > Rat(0))) throw std::invalid_argument("w1 must be positive");
    if (!(u > Rat(0))) throw std::invalid_argument("u must be positive");
    Rat break1 = (Rat(s1) - Rat(s1, s2)) * w1;
    Rat break2 = Rat(s1 - 1) * w1;
    Rat upper = break2 + Rat(s2 - 1) * w1; // w2 = w1 in the last region
    if (u <= break1) return w1 * Rat(s1, s2);
    if (u <= break2) return w1 * Rat(s1) - u;
    if (u < upper) return w1;
    throw std::invalid_argument("u out of range");
}

WrmBound wrm_distance_formula(long long s1, long long s2, const Rat& u,
                              const Rat& w1, const Rat& w2) {
    if (s1 < s2 || s2 < 1) throw std::invalid_argument("need s1 >= s2 >= 1");
    if (!(w1 > Rat(0)) || !(w2 > Rat(0))) throw std::invalid_argument("weights must be positive");
    Rat top1 = Rat(s1 - 1) * w1;
    Rat top2 = Rat(s2 - 1) * w2;
    if (!(u > Rat(0)) || u > top1 + top2) throw std::invalid_argument("u out of range");

    Rat rho = w1 / w2;
    WrmBound b;
    if (rho <= Rat(s2, s1)) {
        if (u <= top1) {
            b.value = Rat(s2) * (Rat(s1) - u / w1);
            b.exact = (u / w1).is_integer();
            b.eq_case = 1;
        } else {
            b.value = Rat(s2) - (u - top1) / w2;
            b.exact = b.value.is_integer();
            b.eq_case = 2;
        }
    } else if (rho < Rat(1)) {
        if (u <= top2) {
            b.value = (Rat(s2) - u / w2) * Rat(s1);
            b.exact = (u / w2).is_integer();
            b.eq_case = 3;
        } else if (u <= Rat(s1) * w1 - w2) { // (s1 - 1/rho) w1
            b.value = Rat(s1) - (u - top2) / w1;
            b.exact = b.value.is_integer();
            b.eq_case = 4;
        } else if (u <= top1) {
            b.value = (Rat(s1) - u / w1) * Rat(s2);
            b.exact = (u / w1).is_integer();
            b.eq_case = 5;
        } else {
            b.value = Rat(s2) - (u - top1) / w2;
            b.exact = b.value.is_integer();
            b.eq_case = 6;
        }
    } else {
        if (u <= top2) {
            b.value = (Rat(s2) - u / w2) * Rat(s1);
            b.exact = (u / w2).is_integer();
            b.eq_case = 7;
        } else {
            b.value = Rat(s1) - (u - top2) / w1;
            b.exact = b.value.is_integer();
            b.eq_case = 8;
        }
    }
    return b;
}

MvBound wrm_distance_multivar(const std::vector<int>& s, const Rat& u, const std::vector<Rat>& w) {
    check_sizes(s);
    if (w.size() != s.size()) throw std::invalid_argument("one weight per axis required");
    int m = (int)s.size();
    for (int j = 0; j + 1 < m; ++j)
        if (s[j] < s[j + 1]) throw std::invalid_argument("sizes must be nonincreasing");
    for (const Rat& x : w)
        if (!(x > Rat(0))) throw std::invalid_argument("weights must be positive");
    Rat total(0);
    for (int j = 0; j < m; ++j) total = total + Rat(s[j] - 1) * w[j];
    if (u < Rat(0) || u > total) throw std::invalid_argument("u out of range");

    long long n = 1;
    for (int x : s) n *= x;

    // hypothesis 1: w_j / prod_{i != j} s_i nondecreasing, i.e. w_j s_j nondecreasing
    bool hyp1 = true;
    for (int j = 0; j + 1 < m; ++j)
        if (w[j] * Rat(s[j]) > w[j + 1] * Rat(s[j + 1])) hyp1 = false;
    // hypothesis 2: weights nonincreasing
    bool hyp2 = true;
    for (int j = 0; j + 1 < m; ++j)
        if (w[j] < w[j + 1]) hyp2 = false;
    if (!hyp1 && !hyp2) throw std::invalid_argument("no applicable weight hypothesis");

    MvBound b;
    b.hypothesis = hyp1 ? 1 : 2;
    if (u == Rat(0)) {
        b.value = Rat(n);
        b.exact = true;
        return b;
    }

    Rat rem = u;
    if (hyp1) {
        for (int t = 0; t < m; ++t) {
            Rat cap = Rat(s[t] - 1) * w[t];
            if (rem <= cap) {
                Rat at = rem / w[t];
                long long tail = 1;
                for (int i = t + 1; i < m; ++i) tail *= s[i];
                b.value = (Rat(s[t]) - at) * Rat(tail);
                b.exact = at.is_integer();
                return b;
            }
            rem = rem - cap;
        }
    } else {
        for (int t = m - 1; t >= 0; --t) {
            Rat cap = Rat(s[t] - 1) * w[t];
            if (rem <= cap) {
                Rat at = rem / w[t];
                long long head = 1;
                for (int i = 0; i < t; ++i) head *= s[i];
                b.value = (Rat(s[t]) - at) * Rat(head);
                b.exact = at.is_integer();
                return b;
            }
            rem = rem - cap;
        }
    }
    throw std::logic_error("unreachable"); // u <= total guarantees termination
}

RegionReport region_dimensions(long long s1, long long s2, long long u) {
    if (s2 < 2 || s1 <= s2) throw std::invalid_argument("need s1 > s2 >= 2");
    if (u < 1 || u > (s1 - 1) + (s2 - 1)) throw std::invalid_argument("u out of range");

    long long sq = isqrt_ll(s1 * s2);
    bool square = sq * sq == s1 * s2;
    RegionReport rep;

    if (u * s2 <= s1 * s2 - s1) {
        rep.region = 1;
        rep.approximate = !(s1 % s2 == 0 && (u * s2) % s1 == 0 && square);
        rep.wrm_dim = (Rat(u * u) * Rat(s2, s1) + Rat(u)) / Rat(2) + Rat(u) * Rat(s2, s1) + Rat(1);
        if (square) {
            Rat root(s2, sq); // sqrt(s2/s1)
            Rat cap = (Rat(s2, s1) * Rat(u * u) + Rat(3 * u) * root + Rat(2)) / Rat(2);
            rep.rm_cap_exact = cap;
            rep.rm_cap = cap.to_double();
        } else {
            rep.rm_cap = 0.5 * ((double)s2 / s1 * u * u + 3.0 * u * std::sqrt((double)s2 / s1) + 2.0);
        }
    } else if (u <= s1 - 1) {
        rep.region = 2;
        rep.approximate = !square;
        rep.wrm_dim = Rat(s1 * s2) - Rat(s2 * s2 * (s1 - u)) / Rat(2) + Rat(s2) -
                      Rat(s2 * (s1 - u)) / Rat(2);
        if (u * s2 >= s1 * s2 - sq) {
            long long ds = (s1 - u) * s2;
            Rat cap = Rat(s1 * s2) - Rat(ds * (ds - 1)) / Rat(2);
            rep.rm_cap_exact = cap;
            rep.rm_cap = cap.to_double();
        } else {
            if (square) {
                Rat q(s2 * u, sq);
                Rat cap = (q + Rat(2)) * (q + Rat(1)) / Rat(2);
                rep.rm_cap_exact = cap;
                rep.rm_cap = cap.to_double();
                if ((s2 * u) % sq != 0) rep.approximate = true;
            } else {
                double qd = (double)s2 * u / std::sqrt((double)s1 * s2);
                rep.rm_cap = 0.5 * (qd + 2.0) * (qd + 1.0);
            }
        }
    } else {
        rep.region = 3;
        rep.approximate = !square;
        long long dim = 0;
        for (long long i2 = 0; i2 < s2; ++i2)
            dim += std::min(s1 - 1, u - i2) + 1;
        rep.wrm_dim = Rat(dim);
        rep.rm_cap_exact = Rat(dim); // an equal-size square-grid code with the same parameters exists
        rep.rm_cap = (double)dim;
    }
    return rep;
}

namespace {

std::pair<long long, long long> best_dim_at_distance(long long s1, long long s2, long long d) {
    long long n = s1 * s2;
    long long best = n >= d ? 1 : 0; // u = 0: constants, distance n
    long long best_u = n >= d ? 0 : -1;
    std::vector<int> sizes{(int)s1, (int)s2};
    for (long long u = 1; u <= (s1 - 1) + (s2 - 1); ++u) {
        Rat w2;
        try {
            w2 = optimal_w2(s1, s2, Rat(u), Rat(1));
        } catch (const std::invalid_argument&) {
            continue;
        }
        MonomialSet M = wrm_set(sizes, Rat(u), {Rat(1), w2});
        if (M.mons.empty()) continue;
        DistanceBound fb = footprint_distance(M, sizes);
        if (fb.value >= d && M.size() > best) {
            best = M.size();
            best_u = u;
        }
    }
    return {best, best_u};
}

}  // namespace

DominanceVerdict dominance_check(long long s1, long long s2, long long s1p, long long s2p,
                                 long long d) {
    if (s1 * s2 != s1p * s2p) throw std::invalid_argument("ensembles must have equal length");
    if (s2 < 2 || s2p < 2 || s1 < s2 || s1p < s2p)
        throw std::invalid_argument("need s1 >= s2 >= 2 on both ensembles");
    if (d < 1 || d > s1 * s2) throw std::invalid_argument("distance target out of range");
    DominanceVerdict v;
    auto [b1, u1] = best_dim_at_distance(s1, s2, d);
    auto [b2, u2] = best_dim_at_distance(s1p, s2p, d);
    v.dim_first = b1;
    v.dim_second = b2;
    v.u_first = u1;
    v.u_second = u2;
    v.verdict = (b2 > b1) - (b2 < b1);
    return v;
}

long long dual_designed_distance(const MonomialSet& mset, const std::vector<int>& sizes) {
    check_sizes(sizes);
    long long best = LLONG_MAX;
    for_box(sizes, [&](const std::vector<int>& e) {
        if (mset.mons.count(e)) return;
        long long prod = 1;
        for (size_t j = 0; j < e.size(); ++j) prod *= (e[j] + 1);
        best = std::min(best, prod);
    });
    if (best == LLONG_MAX)
        throw std::invalid_argument("monomial set covers the full box; the dual is the zero code");
    return best;
}

FengRaoContext make_fengrao_context(const PointEnsemble& S) {
    if (S.n > 81) throw std::invalid_argument("order-domain oracle limited to n <= 81");
    FengRaoContext ctx;
    ctx.F = S.F;
    ctx.S = S;
    ctx.n = S.n;

    for_box(S.sizes, [&](const std::vector<int>& e) { ctx.basis_mons.push_back(e); });
    MonomialOrder ord{OrderKind::grlex, {}};
    std::sort(ctx.basis_mons.begin(), ctx.basis_mons.end(),
              [&](const std::vector<int>& a, const std::vector<int>& b) { return mono_less(a, b, ord); });

    size_t n = (size_t)ctx.n;
    Matrix B(n, n);
    for (size_t l = 0; l < n; ++l) {
        MultiPoly mono(*S.F, S.m());
        mono.set(ctx.basis_mons[l], 1);
        std::vector<felem> row = evaluate_grid(mono, S.sets);
        for (size_t j = 0; j < n; ++j) B.at(l, j) = row[j];
    }
    Matrix Binv = mat_inverse(*S.F, B);

    // rho of every pointwise product b_i * b_j: position of the last nonzero
    // coordinate in the basis expansion
    const FieldCtx& F = *S.F;
    ctx.rho_product.assign(n, std::vector<int>(n, 0));
    std::vector<felem> prod(n), coord(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            for (size_t t = 0; t < n; ++t) prod[t] = F.mul(B.at(i, t), B.at(j, t));
            int rho = 0;
            for (size_t l = 0; l < n; ++l) {
                felem acc = 0;
                for (size_t t = 0; t < n; ++t) acc = F.add(acc, F.mul(prod[t], Binv.at(t, l)));
                coord[l] = acc;
                if (acc != 0) rho = (int)l + 1;
            }
            ctx.rho_product[i][j] = rho;
            ctx.rho_product[j][i] = rho;
        }
    return ctx;
}

long long fengrao_mu(const FengRaoContext& ctx, long long l) {
    if (l < 1 || l > ctx.n) throw std::invalid_argument("index out of range");
    size_t n = (size_t)ctx.n;
    long long count = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (ctx.rho_product[i][j] != (int)l) continue;
            bool wb = true;
            for (size_t a = 0; a <= i && wb; ++a)
                for (size_t b = 0; b <= j; ++b) {
                    if (a == i && b == j) continue;
                    if (ctx.rho_product[a][b] >= (int)l) { wb = false; break; }
                }
            if (wb) ++count;
        }
    return count;
}

long long fengrao_designed_distance(const FengRaoContext& ctx, const MonomialSet& mset) {
    long long best = LLONG_MAX;
    for (size_t l = 0; l < (size_t)ctx.n; ++l) {
        if (mset.mons.count(ctx.basis_mons[l])) continue;
        best = std::min(best, fengrao_mu(ctx, (long long)l + 1));
    }
    if (best == LLONG_MAX)
        throw std::invalid_argument("monomial set covers the full box; the dual is the zero code");
    return best;
}

Matrix generator_matrix(const CodeSpec& code) { return code.generator(); }

std::vector<felem> encode(const CodeSpec& code, const std::vector<felem>& message) {
    const Matrix& G = code.generator();
    if (message.size() != G.rows) throw std::invalid_argument("message length mismatch");
    const FieldCtx& F = *code.S.F;
    std::vector<felem> word(G.cols, 0);
    for (size_t i = 0; i < G.rows; ++i) {
        if (message[i] == 0) continue;
        for (size_t j = 0; j < G.cols; ++j)
            word[j] = F.add(word[j], F.mul(message[i], G.at(i, j)));
    }
    return word;
}

long long min_distance_bruteforce(const CodeSpec& code) {
    const Matrix& G = code.generator();
    const FieldCtx& F = *code.S.F;
    size_t dim = G.rows, n = G.cols;
    if (dim == 0) throw std::invalid_argument("zero code");
    double words = std::pow((double)F.q, (double)dim);
    if (words > (double)(1 << 20)) throw std::invalid_argument("code too large for exhaustive search");

    long long best = LLONG_MAX;
    std::vector<std::vector<felem>> buf(dim + 1, std::vector<felem>(n, 0));
    auto rec = [&](auto&& self, size_t level, bool nonzero) -> void {
        if (level == dim) {
            if (!nonzero) return;
            long long wt = 0;
            for (felem x : buf[level]) wt += (x != 0);
            best = std::min(best, wt);
            return;
        }
        buf[level + 1] = buf[level];
        self(self, level + 1, nonzero);
        for (felem c = 1; c < F.q; ++c) {
            for (size_t j = 0; j < n; ++j)
                buf[level + 1][j] = F.add(buf[level][j], F.mul(c, G.at(level, j)));
            self(self, level + 1, true);
        }
    };
    rec(rec, 0, false);
    return best;
}

}  // namespace avc
