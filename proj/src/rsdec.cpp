#include "avc/rsdec.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace avc {

namespace {

long long isqrt_ll(long long v) {
    if (v < 0) throw std::invalid_argument("integer square root of a negative number");
    long long s = (long long)std::sqrt((double)v);
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

// monomials (a,b) with a + (k-1)b <= L, k >= 2
long long weighted_count(long long L, int k) {
    long long c = 0;
    for (long long b = 0; (long long)(k - 1) * b <= L; ++b) c += L - (long long)(k - 1) * b + 1;
    return c;
}

std::string join_params(std::initializer_list<std::pair<const char*, long long>> kv) {
    std::string s;
    for (auto& p : kv) {
        if (!s.empty()) s += " ";
        s += p.first;
        s += "=";
        s += std::to_string(p.second);
    }
    return s;
}

}  // namespace

RSCode make_rs_code(const FieldCtx& F, std::vector<felem> points, int k) {
    std::set<felem> uniq(points.begin(), points.end());
    if (uniq.size() != points.size()) throw std::invalid_argument("evaluation points must be distinct");
    if (points.empty()) throw std::invalid_argument("empty evaluation point list");
    if (k < 1 || (size_t)k > points.size()) throw std::invalid_argument("need 1 <= k <= n");
    for (felem x : points)
        if (x >= F.q) throw std::invalid_argument("evaluation point outside the field");
    RSCode code;
    code.F = &F;
    code.points = std::move(points);
    code.k = k;
    return code;
}

std::vector<felem> rs_encode(const RSCode& code, const std::vector<felem>& message) {
    if ((int)message.size() != code.k) throw std::invalid_argument("message must have exactly k coefficients");
    const FieldCtx& F = *code.F;
    std::vector<felem> out(code.points.size());
    for (size_t i = 0; i < code.points.size(); ++i) {
        felem x = code.points[i], acc = 0;
        for (int j = code.k - 1; j >= 0; --j) acc = F.add(F.mul(acc, x), message[j]);
        out[i] = acc;
    }
    return out;
}

GSParams gs_parameters(long long n, int k, int r) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (r < 1) throw std::invalid_argument("multiplicity must be at least 1");
    GSParams gp;
    gp.r = r;
    gp.constraints = n * (long long)r * (r + 1) / 2;
    if (k == 1) {
        // the weighted degree ignores Z, so the cheapest support is plain
        // powers of Z and any L works; everything collapses
        gp.L = 0;
        gp.A_min = 1;
        gp.E_max = n - 1;
        gp.t_Z = gp.constraints;
        return gp;
    }
    long long L = 0;
    while (weighted_count(L, k) <= gp.constraints) ++L;
    gp.L = L;
    gp.A_min = L / r + 1;
    gp.E_max = std::max(0LL, n - gp.A_min);
    gp.t_Z = L / (k - 1);
    return gp;
}

long long gs_capability_ultimate(long long n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1, k >= 1");
    if ((long long)k - 1 >= n) return 0;
    return n - 1 - isqrt_ll(n * (long long)(k - 1));
}

long long gs_capability_ceiling(long long n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1, k >= 1");
    // ceil(n - sqrt(n*k)) without touching floating point: the sqrt is
    // irrational unless n*k is a perfect square, and both cases land on
    // n - isqrt(n*k)
    return n - isqrt_ll(n * (long long)k);
}

long long hamming_distance(const std::vector<felem>& a, const std::vector<felem>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    long long d = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

MultiPoly gs_interpolate(const RSCode& code, const std::vector<felem>& received,
                         const GSParams& gp) {
    const FieldCtx& F = *code.F;
    long long n = code.n();
    if ((long long)received.size() != n) throw std::invalid_argument("received word length != n");
    int k = code.k;
    long long need = gp.constraints + 1;

    std::vector<std::pair<int, int>> support;
    support.reserve((size_t)need);
    if (k == 1) {
        for (long long b = 0; b < need; ++b) support.push_back({0, (int)b});
    } else {
        for (long long w = 0; (long long)support.size() < need; ++w)
            for (long long b = 0; b * (k - 1) <= w && (long long)support.size() < need; ++b)
                support.push_back({(int)(w - b * (k - 1)), (int)b});
    }

    Matrix A((size_t)gp.constraints, support.size());
    size_t row = 0;
    for (long long i = 0; i < n; ++i) {
        felem x = code.points[i], y = received[i];
        for (int h1 = 0; h1 < gp.r; ++h1)
            for (int h2 = 0; h1 + h2 < gp.r; ++h2) {
                for (size_t c = 0; c < support.size(); ++c) {
                    auto [a, b] = support[c];
                    if (a < h1 || b < h2) continue;
                    int ca = binom_mod_p(a, h1, F.p);
                    int cb = binom_mod_p(b, h2, F.p);
                    if (ca == 0 || cb == 0) continue;
                    felem v = F.mul(F.from_int(ca), F.from_int(cb));
                    v = F.mul(v, F.pow(x, a - h1));
                    v = F.mul(v, F.pow(y, b - h2));
                    A.at(row, c) = v;
                }
                ++row;
            }
    }

    auto res = solve(F, std::move(A), SolveMode::kernel_vector);
    if (res.kernel.empty())
        throw std::runtime_error("interpolation system came back full rank, which the counting argument rules out");
    const auto& v = res.kernel[0];
    MultiPoly Q(F, 2);
    for (size_t c = 0; c < support.size(); ++c)
        if (v[c]) Q.set({support[c].first, support[c].second}, v[c]);
    if (Q.is_zero())
        throw std::runtime_error("interpolation solver returned the zero vector");
    return Q;
}

DecodeReport gs_decode_rs(const std::vector<felem>& received, const RSCode& code, int r) {
    GSParams gp = gs_parameters(code.n(), code.k, r);
    MultiPoly Q = gs_interpolate(code, received, gp);
    auto roots = z_roots_univariate(Q, code.k);

    std::vector<std::pair<std::vector<felem>, long long>> keep;
    for (auto& f : roots) {
        auto word = rs_encode(code, f);
        long long d = hamming_distance(word, received);
        if (d <= gp.E_max) keep.push_back({std::move(word), d});
    }
    std::sort(keep.begin(), keep.end());

    DecodeReport rep;
    rep.plan = "rs " + join_params({{"n", code.n()}, {"k", code.k}, {"r", r}, {"L", gp.L},
                                    {"A_min", gp.A_min}, {"E_max", gp.E_max}, {"t_Z", gp.t_Z}});
    for (auto& p : keep) {
        rep.words.push_back(std::move(p.first));
        rep.distances.push_back(p.second);
    }
    return rep;
}

long long ambient_rs_k(const MonomialSet& mset, const PointEnsemble& S) {
    if (mset.mons.empty()) throw std::invalid_argument("empty monomial set");
    long long t = 0;
    for (const auto& e : mset.mons) {
        long long tot = 0;
        for (int v : e) tot += v;
        t = std::max(t, tot);
    }
    long long qpow = 1;
    for (int j = 0; j + 1 < S.m(); ++j) qpow *= S.F->q;
    return t * qpow + 1;
}

DecodeReport subfield_subcode_decode(const std::vector<felem>& received,
                                     const CodeSpec& code, int r) {
    const FieldCtx& F = *code.S.F;
    long long n = code.S.n;
    int m = code.S.m();
    if ((long long)received.size() != n) throw std::invalid_argument("received word length != n");
    long long k = ambient_rs_k(code.mset, code.S);
    long long radius = gs_capability_ceiling(n, (int)k);
    if (radius <= 0)
        throw std::invalid_argument(
            "subfield decoding refused: the ambient univariate code has k=" + std::to_string(k) +
            " at length " + std::to_string(n) + ", so the correction radius " +
            std::to_string(radius) + " may be close to zero or even negative");

    DecodeReport rep;
    DecodeReport inner;
    std::vector<std::vector<felem>> projected;

    if (m == 1) {
        RSCode rs = make_rs_code(F, code.S.sets[0], (int)k);
        inner = gs_decode_rs(received, rs, r);
        projected = inner.words;
    } else {
        FieldCtx ext = field_create(F.p, F.k * m);
        EmbedMap emb = make_embedding(F, ext);
        auto pts = code.S.points();
        std::vector<felem> rs_points(n), y(n);
        for (long long i = 0; i < n; ++i) {
            rs_points[i] = phi(pts[i], emb, ext);
            y[i] = emb.img[received[i]];
        }
        RSCode rs = make_rs_code(ext, rs_points, (int)k);
        inner = gs_decode_rs(y, rs, r);
        for (auto& w : inner.words) {
            std::vector<felem> proj(n);
            bool ok = true;
            for (long long i = 0; i < n && ok; ++i) {
                int32_t b = emb.back[w[i]];
                if (b < 0) ok = false;
                else proj[i] = (felem)b;
            }
            if (ok) projected.push_back(std::move(proj));
        }
    }

    RowSpace member = make_row_space(F, code.generator());
    std::vector<std::pair<std::vector<felem>, long long>> keep;
    for (auto& w : projected) {
        if (!member.contains(w)) continue;
        long long d = hamming_distance(w, received);
        keep.push_back({std::move(w), d});
    }
    std::sort(keep.begin(), keep.end());

    rep.plan = "subfield " + join_params({{"n", n}, {"k", k}, {"m", m}, {"q", F.q},
                                          {"radius", radius}}) + "; " + inner.plan;
    for (auto& p : keep) {
        rep.words.push_back(std::move(p.first));
        rep.distances.push_back(p.second);
    }
    return rep;
}

DecodeReport joyner_decode(const FieldCtx& F, const std::vector<felem>& received,
                           int r, long long E) {
    if (F.q != 8) throw std::invalid_argument("this construction lives over GF(8)");
    if (received.size() != 49) throw std::invalid_argument("received word must have 49 symbols");
    if (E < 0) throw std::invalid_argument("negative radius");

    PointEnsemble S = units_ensemble(F, 2);
    CodeSpec outer = make_code(joyner_set(), S);
    CodeSpec inner = make_code(qary_rm_set({7, 7}, 3), S);
    auto pts = S.points();
    RowSpace member = make_row_space(F, outer.generator());

    std::set<std::vector<felem>> seen;
    std::vector<std::pair<std::vector<felem>, long long>> keep;
    std::string inner_plan;
    for (felem f00 = 0; f00 < 8; ++f00) {
        std::vector<felem> shifted(49);
        for (size_t i = 0; i < 49; ++i)
            shifted[i] = F.div(F.sub(received[i], f00), F.mul(pts[i][0], pts[i][1]));
        DecodeReport sub = subfield_subcode_decode(shifted, inner, r);
        inner_plan = sub.plan;
        for (auto& w : sub.words) {
            std::vector<felem> cand(49);
            for (size_t i = 0; i < 49; ++i)
                cand[i] = F.add(F.mul(w[i], F.mul(pts[i][0], pts[i][1])), f00);
            if (!member.contains(cand)) continue;
            long long d = hamming_distance(cand, received);
            if (d > E) continue;
            if (seen.insert(cand).second) keep.push_back({std::move(cand), d});
        }
    }
    std::sort(keep.begin(), keep.end());

    DecodeReport rep;
    rep.plan = "joyner " + join_params({{"r", r}, {"E", E}}) + "; " + inner_plan;
    for (auto& p : keep) {
        rep.words.push_back(std::move(p.first));
        rep.distances.push_back(p.second);
    }
    return rep;
}

}  // namespace avc
