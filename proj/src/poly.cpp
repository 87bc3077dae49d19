#include "avc/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace avc {

namespace {

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.F != b.F || a.nvars != b.nvars)
        throw std::invalid_argument("polynomials from different rings");
}

// Pascal row mod p built by the additive recurrence, so the Hasse derivative
// below really is the expansion of (X+Z)^n rather than a closed-form binomial.
const std::vector<int>& pascal_row(int n, int p) {
    static std::map<std::pair<int, int>, std::vector<int>> cache;
    auto key = std::make_pair(n, p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<int> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<int> nxt(i + 1, 0);
        for (int j = 0; j <= i; ++j) {
            int v = (j > 0 ? row[j - 1] : 0) + (j < i ? row[j] : 0);
            nxt[j] = v % p;
        }
        row = std::move(nxt);
    }
    return cache.emplace(key, std::move(row)).first->second;
}

}  // namespace

long long MultiPoly::total_degree() const {
    long long d = -1;
    for (const auto& [e, c] : t) {
        long long s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : t) d = std::max(d, e[var]);
    return d;
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) {
    check_compatible(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.t) {
        felem v = r.F->add(r.coeff(e), c);
        r.set(e, v);
    }
    return r;
}

MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b) {
    check_compatible(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.t) {
        felem v = r.F->sub(r.coeff(e), c);
        r.set(e, v);
    }
    return r;
}

MultiPoly poly_scale(const MultiPoly& a, felem c) {
    MultiPoly r(*a.F, a.nvars);
    if (c == 0) return r;
    for (const auto& [e, v] : a.t) r.t[e] = a.F->mul(v, c);
    return r;
}

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) {
    check_compatible(a, b);
    MultiPoly r(*a.F, a.nvars);
    std::vector<int> e(a.nvars);
    for (const auto& [ea, ca] : a.t)
        for (const auto& [eb, cb] : b.t) {
            for (int j = 0; j < a.nvars; ++j) e[j] = ea[j] + eb[j];
            felem v = r.F->add(r.coeff(e), r.F->mul(ca, cb));
            r.set(e, v);
        }
    return r;
}

MultiPoly poly_monomial_mul(const MultiPoly& a, const std::vector<int>& e, felem c) {
    MultiPoly r(*a.F, a.nvars);
    if (c == 0) return r;
    std::vector<int> f(a.nvars);
    for (const auto& [ea, ca] : a.t) {
        for (int j = 0; j < a.nvars; ++j) f[j] = ea[j] + e[j];
        r.t[f] = a.F->mul(ca, c);
    }
    return r;
}

bool mono_less(const std::vector<int>& a, const std::vector<int>& b, const MonomialOrder& ord) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent length mismatch");
    if (ord.kind == OrderKind::grlex) {
        long long da = 0, db = 0;
        for (int x : a) da += x;
        for (int x : b) db += x;
        if (da != db) return da < db;
    }
    if (ord.priority.empty()) {
        for (size_t j = 0; j < a.size(); ++j)
            if (a[j] != b[j]) return a[j] < b[j];
        return false;
    }
    if (ord.priority.size() != a.size())
        throw std::invalid_argument("order priority length mismatch");
    for (int v : ord.priority)
        if (a[v] != b[v]) return a[v] < b[v];
    return false;
}

std::vector<int> leading_monomial(const MultiPoly& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw std::invalid_argument("leading monomial of zero polynomial");
    const std::vector<int>* best = nullptr;
    for (const auto& [e, c] : f.t)
        if (!best || mono_less(*best, e, ord)) best = &e;
    return *best;
}

felem poly_evaluate(const MultiPoly& f, const std::vector<felem>& pt) {
    if ((int)pt.size() != f.nvars) throw std::invalid_argument("point dimension mismatch");
    felem acc = 0;
    for (const auto& [e, c] : f.t) {
        felem term = c;
        for (int j = 0; j < f.nvars && term != 0; ++j)
            term = f.F->mul(term, f.F->pow(pt[j], e[j]));
        acc = f.F->add(acc, term);
    }
    return acc;
}

std::vector<felem> evaluate_grid(const MultiPoly& f, const std::vector<std::vector<felem>>& sets) {
    if ((int)sets.size() != f.nvars) throw std::invalid_argument("grid dimension mismatch");
    long long n = 1;
    for (const auto& s : sets) n *= (long long)s.size();
    std::vector<felem> out;
    out.reserve(n);
    std::vector<size_t> idx(sets.size(), 0);
    std::vector<felem> pt(sets.size());
    for (long long i = 0; i < n; ++i) {
        for (size_t j = 0; j < sets.size(); ++j) pt[j] = sets[j][idx[j]];
        out.push_back(poly_evaluate(f, pt));
        for (int j = (int)sets.size() - 1; j >= 0; --j) {
            if (++idx[j] < sets[j].size()) break;
            idx[j] = 0;
        }
    }
    return out;
}

int binom_mod_p(long long n, long long k, int p) {
    if (k < 0 || k > n) return 0;
    // Lucas: multiply binomials of base-p digits
    long long r = 1;
    while (n > 0 || k > 0) {
        int nd = (int)(n % p), kd = (int)(k % p);
        if (kd > nd) return 0;
        // small exact binomial of digits
        long long b = 1;
        for (int i = 1; i <= kd; ++i) b = b * (nd - kd + i) / i;
        r = r * (b % p) % p;
        n /= p;
        k /= p;
    }
    return (int)r;
}

MultiPoly hasse_derivative(const MultiPoly& f, const std::vector<int>& kv) {
    if ((int)kv.size() != f.nvars) throw std::invalid_argument("derivative order dimension mismatch");
    for (int x : kv)
        if (x < 0) throw std::invalid_argument("negative derivative order");
    MultiPoly r(*f.F, f.nvars);
    int p = f.F->p;
    std::vector<int> e2(f.nvars);
    for (const auto& [e, c] : f.t) {
        // term X^e contributes the coefficient of Z^kv in prod (X_j+Z_j)^(e_j)
        int factor = 1;
        bool alive = true;
        for (int j = 0; j < f.nvars && alive; ++j) {
            if (kv[j] > e[j]) { alive = false; break; }
            factor = factor * pascal_row(e[j], p)[kv[j]] % p;
            e2[j] = e[j] - kv[j];
        }
        if (!alive || factor == 0) continue;
        felem add = f.F->mul(c, f.F->from_int(factor));
        r.set(e2, r.F->add(r.coeff(e2), add));
    }
    return r;
}

MultiPoly poly_translate(const MultiPoly& f, const std::vector<felem>& a) {
    if ((int)a.size() != f.nvars) throw std::invalid_argument("shift dimension mismatch");
    MultiPoly cur = f;
    for (int j = 0; j < f.nvars; ++j) {
        if (a[j] == 0) continue;
        MultiPoly nxt(*f.F, f.nvars);
        std::vector<int> e2;
        for (const auto& [e, c] : cur.t) {
            e2 = e;
            // X_j^(e_j) -> sum binom(e_j, i) a_j^(e_j - i) X_j^i
            for (int i = 0; i <= e[j]; ++i) {
                int b = binom_mod_p(e[j], i, f.F->p);
                if (b == 0) continue;
                felem coef = f.F->mul(c, f.F->mul(f.F->from_int(b), f.F->pow(a[j], e[j] - i)));
                if (coef == 0) continue;
                e2[j] = i;
                nxt.set(e2, nxt.F->add(nxt.coeff(e2), coef));
            }
        }
        cur = std::move(nxt);
    }
    return cur;
}

int multiplicity(const MultiPoly& f, const std::vector<felem>& a) {
    if (f.is_zero()) return kMultInfinity;
    MultiPoly g = poly_translate(f, a);
    long long best = -1;
    for (const auto& [e, c] : g.t) {
        long long s = 0;
        for (int x : e) s += x;
        if (best < 0 || s < best) best = s;
    }
    return (int)best;
}

namespace {

// helpers for the z-root search; Q lives in variables (x, z)

MultiPoly strip_x(const MultiPoly& Q) {
    int s = -1;
    for (const auto& [e, c] : Q.t) s = (s < 0) ? e[0] : std::min(s, e[0]);
    if (s <= 0) return Q;
    MultiPoly r(*Q.F, 2);
    for (const auto& [e, c] : Q.t) r.t[{e[0] - s, e[1]}] = c;
    return r;
}

std::vector<felem> roots_in_z_at_x0(const MultiPoly& Q) {
    // univariate in z from the x-free terms
    int dz = 0;
    for (const auto& [e, c] : Q.t)
        if (e[0] == 0) dz = std::max(dz, e[1]);
    std::vector<felem> cf(dz + 1, 0);
    for (const auto& [e, c] : Q.t)
        if (e[0] == 0) cf[e[1]] = c;
    std::vector<felem> roots;
    const FieldCtx& F = *Q.F;
    for (felem z = 0; z < F.q; ++z) {
        felem v = 0;
        for (int i = dz; i >= 0; --i) v = F.add(F.mul(v, z), cf[i]);
        if (v == 0) roots.push_back(z);
    }
    return roots;
}

MultiPoly subst_xz_plus(const MultiPoly& Q, felem z0) {
    // z -> x*z + z0
    const FieldCtx& F = *Q.F;
    MultiPoly r(F, 2);
    for (const auto& [e, c] : Q.t) {
        int ez = e[1];
        for (int i = 0; i <= ez; ++i) {
            int b = binom_mod_p(ez, i, F.p);
            if (b == 0) continue;
            felem coef = F.mul(c, F.mul(F.from_int(b), F.pow(z0, ez - i)));
            if (coef == 0) continue;
            std::vector<int> e2{e[0] + i, i};
            r.set(e2, F.add(r.coeff(e2), coef));
        }
    }
    return r;
}

void rr_search(const MultiPoly& Q, int depth, int kbound, std::vector<felem>& prefix,
               std::set<std::vector<felem>>& out, long long& budget) {
    if (--budget < 0) throw std::runtime_error("root search budget exceeded");
    MultiPoly S = strip_x(Q);
    for (felem z0 : roots_in_z_at_x0(S)) {
        prefix[depth] = z0;
        if (depth + 1 == kbound) {
            out.insert(prefix);
        } else {
            rr_search(subst_xz_plus(S, z0), depth + 1, kbound, prefix, out, budget);
        }
    }
    prefix[depth] = 0;
}

}  // namespace

std::vector<std::vector<felem>> z_roots_univariate(const MultiPoly& Q, int kbound) {
    if (Q.nvars != 2) throw std::invalid_argument("expected a polynomial in (x, z)");
    if (Q.is_zero()) throw std::invalid_argument("zero polynomial");
    if (kbound < 1) throw std::invalid_argument("kbound must be positive");

    std::set<std::vector<felem>> cand;
    std::vector<felem> prefix(kbound, 0);
    long long budget = 2000000;
    rr_search(Q, 0, kbound, prefix, cand, budget);

    const FieldCtx& F = *Q.F;
    int dz = Q.degree_in(1);
    std::vector<std::vector<felem>> verified;
    for (const auto& f : cand) {
        // substitute z = f(x) by Horner over the z-layers of Q
        std::vector<std::vector<felem>> layers(dz + 1); // univariate coeffs in x
        int dx = Q.degree_in(0);
        for (auto& l : layers) l.assign(dx + 1, 0);
        for (const auto& [e, c] : Q.t) layers[e[1]][e[0]] = c;

        std::vector<felem> acc = layers[dz];
        for (int d = dz - 1; d >= 0; --d) {
            // acc = acc * f + layers[d]
            std::vector<felem> prod(acc.size() + f.size(), 0);
            for (size_t i = 0; i < acc.size(); ++i) {
                if (acc[i] == 0) continue;
                for (size_t j = 0; j < f.size(); ++j)
                    prod[i + j] = F.add(prod[i + j], F.mul(acc[i], f[j]));
            }
            for (size_t i = 0; i < layers[d].size(); ++i)
                prod[i] = F.add(prod[i], layers[d][i]);
            acc = std::move(prod);
        }
        bool zero = true;
        for (felem x : acc) zero &= (x == 0);
        if (zero) verified.push_back(f);
    }
    std::sort(verified.begin(), verified.end());
    return verified;
}

MultiPoly poly_parse(const FieldCtx& F, int nvars, const std::string& text) {
    MultiPoly r(F, nvars);
    std::string term;
    std::vector<std::string> terms;
    for (char ch : text) {
        if (ch == '+') { terms.push_back(term); term.clear(); }
        else if (!isspace((unsigned char)ch)) term.push_back(ch);
    }
    terms.push_back(term);

    for (const std::string& tm : terms) {
        if (tm.empty()) throw std::invalid_argument("empty term in polynomial text");
        felem coef = 1;
        std::vector<int> e(nvars, 0);
        size_t pos = 0;
        bool first = true;
        while (pos < tm.size()) {
            size_t star = tm.find('*', pos);
            std::string fac = tm.substr(pos, star == std::string::npos ? star : star - pos);
            pos = star == std::string::npos ? tm.size() : star + 1;
            if (fac.empty()) throw std::invalid_argument("empty factor in term");
            if (isdigit((unsigned char)fac[0])) {
                if (!first) throw std::invalid_argument("coefficient must lead the term");
                unsigned long long c = std::stoull(fac);
                if (c >= F.q) throw std::invalid_argument("coefficient code out of range");
                coef = F.mul(coef, (felem)c);
            } else if (fac[0] == 'x') {
                size_t caret = fac.find('^');
                std::string vs = fac.substr(1, caret == std::string::npos ? caret : caret - 1);
                int vi = std::stoi(vs);
                if (vi < 1 || vi > nvars) throw std::invalid_argument("variable index out of range");
                int ex = 1;
                if (caret != std::string::npos) ex = std::stoi(fac.substr(caret + 1));
                if (ex < 0) throw std::invalid_argument("negative exponent");
                e[vi - 1] += ex;
            } else {
                throw std::invalid_argument("unrecognized factor: " + fac);
            }
            first = false;
        }
        r.set(e, F.add(r.coeff(e), coef));
    }
    return r;
}

std::string poly_to_string(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool firstterm = true;
    for (const auto& [e, c] : f.t) {
        if (!firstterm) os << " + ";
        firstterm = false;
        bool constant = true;
        for (int x : e) constant &= (x == 0);
        if (c != 1 || constant) os << (unsigned)c;
        bool firstfac = (c != 1 || constant);
        for (int j = 0; j < f.nvars; ++j) {
            if (e[j] == 0) continue;
            if (firstfac) os << "*";
            firstfac = true;
            os << "x" << (j + 1);
            if (e[j] > 1) os << "^" << e[j];
        }
    }
    return os.str();
}

}  // namespace avc
