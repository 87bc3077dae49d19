#include "avc/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace avc {

namespace {

void check_exponents(const std::vector<int>& i, const std::vector<int>& sizes) {
    if (i.size() != sizes.size() || i.empty())
        throw std::invalid_argument("exponent vector and size vector must have equal nonzero length");
    for (int x : i)
        if (x < 0) throw std::invalid_argument("negative exponent");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("axis size must be positive");
}

long long prod_ll(const std::vector<int>& v) {
    long long p = 1;
    for (int x : v) p *= x;
    return p;
}

long long binom0(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    long long res = 1;
    for (long long t = 1; t <= k; ++t)
        res = res * (n - k + t) / t;
    return res;
}

long long pow_checked(long long b, int e) {
    long long r = 1;
    for (int t = 0; t < e; ++t) {
        if (r > (long long)2e15 / b)
            throw std::overflow_error("grid size out of range");
        r *= b;
    }
    return r;
}

// best[w] = max sum u_d*cost[d] over multisets with sum u_d <= units and
// sum d*u_d <= w, items d = 1..jm
std::vector<long long> unit_knapsack(const std::vector<long long>& cost, int jm,
                                     int units, int W) {
    std::vector<std::vector<long long>> dp(units + 1, std::vector<long long>(W + 1, 0));
    for (int d = 1; d <= jm; ++d) {
        if (d > W) continue;
        long long c = cost[d];
        for (int a = 1; a <= units; ++a) {
            auto& row = dp[a];
            const auto& prev = dp[a - 1];
            for (int w = d; w <= W; ++w)
                row[w] = std::max(row[w], prev[w - d] + c);
        }
    }
    return dp[units];
}

long long d_eval(const std::vector<int>& i, int len, int r, const std::vector<int>& sizes,
                 DFlavor flavor, DCache& cache) {
    if (len == 1)
        return std::min<long long>(i[0] / r, sizes[0]);
    std::pair<std::vector<int>, int> key(std::vector<int>(i.begin(), i.begin() + len),
                                         (r << 1) | (flavor == DFlavor::flat ? 1 : 0));
    auto it = cache.memo.find(key);
    if (it != cache.memo.end()) return it->second;

    std::vector<long long> v(r + 1, 0); // v[j] = value of the prefix at multiplicity j
    for (int j = 1; j <= r; ++j)
        v[j] = d_eval(i, len - 1, j, sizes, flavor, cache);
    long long head = 1;
    for (int t = 0; t + 1 < len; ++t) head *= sizes[t];

    int s = sizes[len - 1];
    std::vector<long long> cost(r + 1, 0);
    for (int d = 1; d < r; ++d)
        cost[d] = (flavor == DFlavor::flat ? v[r - 1] : v[r - d]) - v[r];
    cost[r] = head - v[r];
    int W = (int)std::min<long long>(i[len - 1], (long long)r * s);
    auto best = unit_knapsack(cost, r, s, W);
    long long out = (long long)s * v[r] + best[W];
    cache.memo.emplace(std::move(key), out);
    return out;
}

} // namespace

bool delta_contains(const std::vector<int>& i, int r, const std::vector<int>& sizes) {
    check_exponents(i, sizes);
    if (r < 1) throw std::invalid_argument("multiplicity must be at least 1");
    long long fsum = 0;
    for (size_t j = 0; j < i.size(); ++j)
        fsum += i[j] / sizes[j];
    return fsum < r;
}

std::vector<std::vector<int>> border(const MonomialSet& mset) {
    std::vector<std::vector<int>> out;
    for (const auto& e : mset.mons) {
        bool maximal = true;
        for (const auto& f : mset.mons) {
            if (f == e) continue;
            bool divides = true;
            for (size_t j = 0; j < e.size(); ++j)
                if (e[j] > f[j]) { divides = false; break; }
            if (divides) { maximal = false; break; }
        }
        if (maximal) out.push_back(e);
    }
    return out;
}

Rat sz_mult_bound(const std::vector<int>& i, int r, const std::vector<int>& sizes) {
    check_exponents(i, sizes);
    if (r < 1) throw std::invalid_argument("multiplicity must be at least 1");
    long long n = prod_ll(sizes);
    long long num = 0;
    for (size_t j = 0; j < i.size(); ++j)
        num += i[j] * (n / sizes[j]);
    return Rat(num, r);
}

Rat sz_mult_bound(long long u, int r, long long q, int m) {
    if (r < 1 || q < 2 || m < 1 || u < 0)
        throw std::invalid_argument("bad schwartz-zippel parameters");
    return Rat(u * pow_checked(q, m - 1), r);
}

Rat pw_bound(long long u, int r, long long q, int m) {
    if (r < 1 || q < 2 || m < 1)
        throw std::invalid_argument("bad bound parameters");
    if (u < 0 || u > (long long)r * q)
        throw std::invalid_argument("total degree outside [0, r*q]");
    long long w = u / q;
    long long qm = pow_checked(q, m);
    long long qm1 = pow_checked(q, m - 1);
    long long num = binom0(m + r - 1, m) * qm
                  + (u - q * w) * binom0(m + r - w - 2, m - 1) * qm1
                  - binom0(m + r - w - 1, m) * qm;
    long long den = binom0(m + r - 1, r - 1);
    return Rat(num, den);
}

long long d_function(const std::vector<int>& i, int r, const std::vector<int>& sizes,
                     DCache* cache, DFlavor flavor) {
    check_exponents(i, sizes);
    if (r < 1) throw std::invalid_argument("multiplicity must be at least 1");
    DCache local;
    return d_eval(i, (int)i.size(), r, sizes, flavor, cache ? *cache : local);
}

long long DGrid::at(const std::vector<int>& i) const {
    if (i.size() != dims.size())
        throw std::invalid_argument("exponent arity mismatch");
    size_t idx = 0;
    for (size_t j = 0; j < i.size(); ++j) {
        if (i[j] < 0 || i[j] >= dims[j])
            throw std::out_of_range("exponent outside the tabulated box");
        idx = idx * dims[j] + i[j];
    }
    return vals[idx];
}

DGrid d_grid(const std::vector<int>& sizes, int r, DFlavor flavor) {
    if (sizes.empty()) throw std::invalid_argument("empty size vector");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("axis size must be positive");
    if (r < 1) throw std::invalid_argument("multiplicity must be at least 1");

    int m = (int)sizes.size();
    DGrid g;
    g.sizes = sizes;
    g.r = r;
    g.flavor = flavor;
    g.dims.resize(m);
    long long total = 1;
    for (int j = 0; j < m; ++j) {
        g.dims[j] = r * sizes[j];
        total *= g.dims[j];
        if (total > (1ll << 26)) throw std::invalid_argument("exponent box too large to tabulate");
    }

    // layer[p*r + (j-1)] = value of prefix p at multiplicity j
    std::vector<long long> layer((size_t)g.dims[0] * r);
    for (int i0 = 0; i0 < g.dims[0]; ++i0)
        for (int j = 1; j <= r; ++j)
            layer[(size_t)i0 * r + j - 1] = std::min<long long>(i0 / j, sizes[0]);

    long long head = sizes[0];
    size_t plen = g.dims[0];
    std::vector<long long> cost(r + 1, 0);
    for (int k = 1; k < m; ++k) {
        bool last = (k == m - 1);
        int s = sizes[k], dimk = g.dims[k];
        size_t nplen = plen * dimk;
        std::vector<long long> next(nplen * (last ? 1 : r));
        for (size_t p = 0; p < plen; ++p) {
            const long long* v = &layer[p * r]; // v[j-1] = prefix value at multiplicity j
            for (int j = last ? r : 1; j <= r; ++j) {
                for (int d = 1; d < j; ++d)
                    cost[d] = (flavor == DFlavor::flat ? v[j - 2] : v[j - 1 - d]) - v[j - 1];
                cost[j] = head - v[j - 1];
                int W = std::min(dimk - 1, j * s);
                auto best = unit_knapsack(cost, j, s, W);
                for (int ik = 0; ik < dimk; ++ik) {
                    long long val = (long long)s * v[j - 1] + best[std::min(ik, W)];
                    if (last)
                        next[p * dimk + ik] = val;
                    else
                        next[(p * dimk + ik) * r + (j - 1)] = val;
                }
            }
        }
        layer = std::move(next);
        plen = nplen;
        head *= s;
    }

    if (m == 1) {
        g.vals.resize(g.dims[0]);
        for (int i0 = 0; i0 < g.dims[0]; ++i0)
            g.vals[i0] = layer[(size_t)i0 * r + r - 1];
    } else {
        g.vals = std::move(layer);
    }
    return g;
}

Rat d_closed_two_var(long long i1, long long i2, int r, long long s1, long long s2) {
    if (s1 < 1 || s2 < 1 || i1 < 0 || i2 < 0 || r < 1)
        throw std::invalid_argument("bad closed-form parameters");
    if (i1 / s1 + i2 / s2 >= r)
        throw std::invalid_argument("exponent outside Delta");
    long long fl = i1 / s1;
    if (fl == r - 1) {
        // C.4, exact
        long long ir = i1 / r;
        return Rat(s2 * ir + i2 * (s1 - ir));
    }
    long long k = r - 1 - fl; // >= 1 here
    if ((r - k) * r * s1 <= i1 * (r + 1)) {
        if (i2 < k * s2)
            return Rat(s2 * i1 * (r - k) + i2 * i1, r * (r - k)); // C.1
        return Rat(s2 * i1 * (r - k) + ((k + 1) * s2 - i2) * i1 * k
                       + (i2 - k * s2) * (s1 * r - i1) * (r - k),
                   r * (r - k)); // C.2
    }
    return Rat(s2 * i1 * (k + 1) + i2 * (s1 * r - i1), r * (k + 1)); // C.3
}

ZeroBound make_zero_bound(BoundKind kind, const std::vector<int>& sizes, int r,
                          DFlavor flavor, std::vector<int> axis_order) {
    if (sizes.empty()) throw std::invalid_argument("empty size vector");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("axis size must be positive");
    if (r < 1) throw std::invalid_argument("multiplicity must be at least 1");
    int m = (int)sizes.size();
    if (axis_order.empty()) {
        axis_order.resize(m);
        for (int j = 0; j < m; ++j) axis_order[j] = j;
    }
    std::vector<bool> seen(m, false);
    if ((int)axis_order.size() != m)
        throw std::invalid_argument("axis order has the wrong length");
    for (int a : axis_order) {
        if (a < 0 || a >= m || seen[a])
            throw std::invalid_argument("axis order is not a permutation");
        seen[a] = true;
    }
    if (kind == BoundKind::closed_form && m != 2)
        throw std::invalid_argument("closed form only exists for two variables");

    ZeroBound b;
    b.kind = kind;
    b.flavor = flavor;
    b.axis_order = axis_order;
    b.sizes = sizes;
    b.r = r;
    b.n = prod_ll(sizes);
    if (kind == BoundKind::d_recursive) {
        std::vector<int> sp(m);
        for (int j = 0; j < m; ++j) sp[j] = sizes[axis_order[j]];
        b.grid = std::make_shared<DGrid>(d_grid(sp, r, flavor));
    }
    return b;
}

Rat ZeroBound::value(const std::vector<int>& i) const {
    if (!delta_contains(i, r, sizes))
        return Rat(n);
    int m = (int)sizes.size();
    std::vector<int> ip(m), sp(m);
    for (int j = 0; j < m; ++j) {
        ip[j] = i[axis_order[j]];
        sp[j] = sizes[axis_order[j]];
    }
    Rat v;
    switch (kind) {
        case BoundKind::sz:
            v = sz_mult_bound(ip, r, sp);
            break;
        case BoundKind::closed_form:
            v = d_closed_two_var(ip[0], ip[1], r, sp[0], sp[1]);
            break;
        case BoundKind::d_recursive:
            v = Rat(grid->at(ip));
            break;
    }
    return v < Rat(n) ? v : Rat(n);
}

MultiPoly vanishing_witness(const std::vector<int>& i, int r, const PointEnsemble& S) {
    check_exponents(i, S.sizes);
    if (r < 1) throw std::invalid_argument("multiplicity must be at least 1");
    if (delta_contains(i, r, S.sizes))
        throw std::invalid_argument("exponent lies inside Delta; no full-grid witness exists");
    const FieldCtx& F = *S.F;
    int m = S.m();

    std::vector<int> c(m, 0);
    int left = r;
    for (int j = 0; j < m && left > 0; ++j) {
        c[j] = std::min(left, i[j] / S.sizes[j]);
        left -= c[j];
    }

    std::vector<int> zero(m, 0);
    MultiPoly out(F, m);
    out.set(zero, 1);
    for (int j = 0; j < m; ++j) {
        if (c[j] == 0) continue;
        MultiPoly vj(F, m);
        vj.set(zero, 1);
        for (felem a : S.sets[j]) {
            MultiPoly lin(F, m);
            std::vector<int> e(m, 0);
            e[j] = 1;
            lin.set(e, 1);
            lin.set(zero, F.neg(a));
            vj = poly_mul(vj, lin);
        }
        for (int t = 0; t < c[j]; ++t)
            out = poly_mul(out, vj);
    }
    std::vector<int> rem(m);
    for (int j = 0; j < m; ++j)
        rem[j] = i[j] - c[j] * S.sizes[j];
    return poly_monomial_mul(out, rem, 1);
}

MeanImprovement mean_improvement(int m, int r, long long q) {
    if (m < 1 || r < 1 || q < 2)
        throw std::invalid_argument("bad mean-improvement parameters");
    std::vector<int> sizes(m, (int)q);
    DGrid g = d_grid(sizes, r, DFlavor::literal);
    long long n = pow_checked(q, m);
    long long qm1 = n / q;
    int dim = (int)(r * q);

    long double total = 0;
    long long cells = 0;
    std::vector<int> idx(m, 0);
    size_t flat = 0;
    while (true) {
        long long isum = 0, fsum = 0;
        for (int j = 0; j < m; ++j) {
            isum += idx[j];
            fsum += idx[j] / q;
        }
        if (fsum < r) {
            long long fsz = std::min(isum * qm1, (long long)r * n) / r;
            if (fsz > 0) {
                long long dv = g.vals[flat];
                total += (long double)(fsz - dv) / (long double)fsz;
                ++cells;
            }
        }
        int j = m - 1;
        while (j >= 0 && idx[j] == dim - 1) { idx[j] = 0; --j; }
        if (j < 0) break;
        ++idx[j];
        flat = 0;
        for (int t = 0; t < m; ++t) flat = flat * dim + idx[t];
    }
    if (cells == 0) throw std::runtime_error("no monomial contributed to the mean");

    long double mean = total / (long double)cells;
    long double th = mean * 1000.0L;
    long long fl = (long long)std::floor(th);
    long double frac = th - (long double)fl;
    // the float accumulation carries ~1e-12 of error; every covered cell sits
    // at least 1e-5 away from a truncation boundary, checked exactly offline
    if (frac < 1e-7L || frac > 1.0L - 1e-7L)
        throw std::runtime_error("mean too close to a truncation boundary for float accumulation");
    MeanImprovement out;
    out.truncated = Rat(fl, 1000);
    out.raw = (double)mean;
    out.cells = cells;
    return out;
}

long long zero_count_oracle(const MultiPoly& F, int r, const PointEnsemble& S) {
    if (S.n > (1ll << 12))
        throw std::invalid_argument("oracle grid capped at 4096 points");
    if (r < 1) throw std::invalid_argument("multiplicity must be at least 1");
    long long count = 0;
    for (const auto& pt : S.points())
        if (multiplicity(F, pt) >= r) ++count;
    return count;
}

}  // namespace avc
