#include "avc/ff.hpp"

#include <algorithm>
#include <stdexcept>

namespace avc {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// raw polynomial helpers over GF(p), coefficient vectors low to high
int pdeg(const std::vector<int>& f) {
    for (int i = (int)f.size() - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

std::vector<int> code_to_poly(uint64_t code, int p) {
    std::vector<int> f;
    while (code) {
        f.push_back((int)(code % p));
        code /= p;
    }
    return f;
}

uint64_t poly_to_code(const std::vector<int>& f, int p) {
    uint64_t c = 0;
    for (int i = (int)f.size() - 1; i >= 0; --i) c = c * p + f[i];
    return c;
}

void preduce(std::vector<int>& f, const std::vector<int>& mod, int p) {
    int k = pdeg(mod);
    for (int d = pdeg(f); d >= k; d = pdeg(f)) {
        int c = f[d]; // mod is monic
        for (int i = 0; i <= k; ++i) {
            f[d - k + i] = (f[d - k + i] - c * mod[i]) % p;
            if (f[d - k + i] < 0) f[d - k + i] += p;
        }
    }
    f.resize(std::max(pdeg(f) + 1, 0));
}

std::vector<int> pmulmod(const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& mod, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    preduce(r, mod, p);
    return r;
}

std::vector<int> ppowmod(std::vector<int> base, long long e,
                         const std::vector<int>& mod, int p) {
    std::vector<int> r{1};
    while (e > 0) {
        if (e & 1) r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

// remainder of monic-capable division f by g (g need not be monic; over a
// field we can scale)
bool divides(const std::vector<int>& g, std::vector<int> f, int p) {
    int dg = pdeg(g);
    int lead = g[dg];
    // lead^-1 mod p
    int inv = 1;
    for (int t = 1; t < p; ++t)
        if (lead * t % p == 1) { inv = t; break; }
    for (int d = pdeg(f); d >= dg; d = pdeg(f)) {
        int c = f[d] * inv % p;
        for (int i = 0; i <= dg; ++i) {
            f[d - dg + i] = (f[d - dg + i] - c * g[i]) % p;
            if (f[d - dg + i] < 0) f[d - dg + i] += p;
        }
    }
    return pdeg(f) < 0;
}

bool irreducible(const std::vector<int>& f, int p) {
    int k = pdeg(f);
    if (k <= 0) return false;
    if (k == 1) return true;
    // trial division by every monic polynomial of degree 1..k/2
    for (int t = 1; 2 * t <= k; ++t) {
        uint64_t count = 1;
        for (int i = 0; i < t; ++i) count *= p;
        for (uint64_t c = 0; c < count; ++c) {
            std::vector<int> g = code_to_poly(c, p);
            g.resize(t + 1, 0);
            g[t] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

bool primitive_raw(const std::vector<int>& elem, const std::vector<int>& mod,
                   int p, long long group_order) {
    if (pdeg(elem) < 0) return false;
    if (group_order == 1) return true;
    for (long long f : prime_factors(group_order)) {
        std::vector<int> r = ppowmod(elem, group_order / f, mod, p);
        if (pdeg(r) == 0 && r[0] == 1) return false;
    }
    // order divides group_order automatically (Lagrange), so no full check needed
    return true;
}

}  // namespace

felem FieldCtx::add(felem a, felem b) const {
    if (p == 2) return a ^ b;
    felem r = 0, mult = 1;
    for (int i = 0; i < k; ++i) {
        int da = (a / mult) % p + (b / mult) % p;
        if (da >= p) da -= p;
        r += (felem)da * mult;
        mult *= p;
    }
    return r;
}

felem FieldCtx::neg(felem a) const {
    if (p == 2) return a;
    felem r = 0, mult = 1;
    for (int i = 0; i < k; ++i) {
        int d = (a / mult) % p;
        if (d) d = p - d;
        r += (felem)d * mult;
        mult *= p;
    }
    return r;
}

felem FieldCtx::inv(felem a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    int e = log_tab[a];
    if (e == 0) return a; // a == 1
    return exp_tab[q - 1 - e];
}

felem FieldCtx::pow(felem a, long long e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw std::invalid_argument("zero to a negative power");
    }
    long long m = (long long)q - 1;
    long long r = e % m;
    if (r < 0) r += m;
    return exp_tab[(size_t)((log_tab[a] * r) % m)];
}

felem FieldCtx::from_int(long long v) const {
    long long r = v % p;
    if (r < 0) r += p;
    return (felem)r;
}

FieldCtx field_create(int p, int k, const std::vector<int>* modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (k < 1) throw std::invalid_argument("extension degree must be positive");
    uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("field too large for table arithmetic (q > 2^16)");
    }

    FieldCtx F;
    F.p = p;
    F.k = k;
    F.q = (uint32_t)q;

    if (modulus) {
        if ((int)modulus->size() != k + 1 || (*modulus)[k] != 1)
            throw std::invalid_argument("modulus must be monic of degree k");
        for (int c : *modulus)
            if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
        if (!irreducible(*modulus, p))
            throw std::invalid_argument("modulus is reducible");
        F.modulus = *modulus;
        // least primitive element code
        bool found = false;
        for (uint64_t c = 1; c < q; ++c) {
            std::vector<int> e = code_to_poly(c, p);
            if (primitive_raw(e, F.modulus, p, (long long)q - 1)) {
                F.generator = (felem)c;
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("no primitive element found"); // cannot happen
    } else {
        // smallest coefficient code whose monic polynomial is irreducible with
        // x primitive
        bool found = false;
        for (uint64_t c = 0; c < q && !found; ++c) {
            std::vector<int> f = code_to_poly(c, p);
            f.resize(k + 1, 0);
            f[k] = 1;
            if (!irreducible(f, p)) continue;
            std::vector<int> x{0, 1};
            preduce(x, f, p); // k == 1 folds x down to a constant
            if (!primitive_raw(x, f, p, (long long)q - 1)) continue;
            F.modulus = f;
            F.generator = (felem)poly_to_code(x, p);
            found = true;
        }
        if (!found) throw std::runtime_error("no primitive polynomial found"); // cannot happen
    }

    F.exp_tab.resize(q - 1);
    F.log_tab.assign(q, -1);
    std::vector<int> acc{1};
    std::vector<int> g = code_to_poly(F.generator, p);
    for (uint64_t i = 0; i < q - 1; ++i) {
        felem code = (felem)poly_to_code(acc, p);
        F.exp_tab[i] = code;
        if (F.log_tab[code] != -1) throw std::runtime_error("generator is not primitive");
        F.log_tab[code] = (int)i;
        acc = pmulmod(acc, g, F.modulus, p);
    }
    return F;
}

EmbedMap make_embedding(const FieldCtx& sub, const FieldCtx& ext) {
    if (sub.p != ext.p || ext.k % sub.k != 0)
        throw std::invalid_argument("no embedding: degree of subfield must divide degree of extension");

    EmbedMap e;
    e.img.resize(sub.q);
    e.back.assign(ext.q, -1);

    if (sub.k == ext.k && sub.modulus == ext.modulus) {
        for (uint32_t a = 0; a < sub.q; ++a) {
            e.img[a] = a;
            e.back[a] = (int32_t)a;
        }
        return e;
    }

    // least root of the subfield's defining polynomial inside the extension
    felem root = 0;
    bool found = false;
    for (uint32_t c = 0; c < ext.q && !found; ++c) {
        felem v = 0, xp = 1;
        for (int i = 0; i <= sub.k; ++i) {
            v = ext.add(v, ext.mul(ext.from_int(sub.modulus[i]), xp));
            xp = ext.mul(xp, (felem)c);
        }
        if (v == 0) {
            root = (felem)c;
            found = true;
        }
    }
    if (!found) throw std::runtime_error("defining polynomial has no root in extension"); // cannot happen when degrees divide

    for (uint32_t a = 0; a < sub.q; ++a) {
        // Horner on the digit expansion of a at the chosen root
        std::vector<int> digs(sub.k);
        uint32_t rem = a;
        for (int i = 0; i < sub.k; ++i) {
            digs[i] = (int)(rem % (uint32_t)sub.p);
            rem /= (uint32_t)sub.p;
        }
        felem v = 0;
        for (int i = sub.k - 1; i >= 0; --i)
            v = ext.add(ext.mul(v, root), ext.from_int(digs[i]));
        e.img[a] = v;
        e.back[v] = (int32_t)a;
    }
    return e;
}

felem phi(const std::vector<felem>& point, const EmbedMap& emb, const FieldCtx& ext) {
    felem acc = 0, b = 1;
    for (felem a : point) {
        acc = ext.add(acc, ext.mul(emb.img[a], b));
        b = ext.mul(b, ext.generator);
    }
    return acc;
}

std::vector<std::vector<felem>> coordinate_polynomials(const FieldCtx& sub, const FieldCtx& ext) {
    if (sub.p != ext.p || ext.k % sub.k != 0)
        throw std::invalid_argument("no embedding: degree of subfield must divide degree of extension");
    int m = ext.k / sub.k;
    // Moore matrix B[v][j] = (beta^j)^(q^v); coordinates come from its inverse
    // because Frobenius fixes the subfield scalars.
    Matrix B((size_t)m, (size_t)m);
    for (int v = 0; v < m; ++v) {
        long long qe = 1;
        for (int i = 0; i < v * sub.k; ++i) qe *= sub.p;
        for (int j = 0; j < m; ++j) {
            felem bj = ext.pow(ext.generator, j);
            B.at(v, j) = ext.pow(bj, qe);
        }
    }
    Matrix Binv = mat_inverse(ext, B);
    std::vector<std::vector<felem>> C(m, std::vector<felem>(m));
    for (int j = 0; j < m; ++j)
        for (int v = 0; v < m; ++v) C[j][v] = Binv.at(j, v);
    return C;
}

felem apply_linearized(const std::vector<felem>& coeffs, felem y,
                       const FieldCtx& ext, uint32_t subfield_q) {
    felem acc = 0, yy = y;
    for (felem c : coeffs) {
        acc = ext.add(acc, ext.mul(c, yy));
        yy = ext.pow(yy, (long long)subfield_q);
    }
    return acc;
}

SolveResult solve(const FieldCtx& F, Matrix A, SolveMode mode) {
    SolveResult res;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < A.cols && r < A.rows; ++c) {
        size_t pr = r;
        while (pr < A.rows && A.at(pr, c) == 0) ++pr;
        if (pr == A.rows) continue;
        if (pr != r)
            for (size_t j = 0; j < A.cols; ++j) std::swap(A.at(pr, j), A.at(r, j));
        felem piv = F.inv(A.at(r, c));
        for (size_t j = c; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), piv);
        for (size_t i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            felem f = A.at(i, c);
            if (f == 0) continue;
            for (size_t j = c; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        pivot_col.push_back(c);
        ++r;
    }
    res.rank = r;
    if (mode == SolveMode::rank) return res;

    std::vector<int> pivot_row_of_col(A.cols, -1);
    for (size_t i = 0; i < pivot_col.size(); ++i) pivot_row_of_col[pivot_col[i]] = (int)i;

    for (size_t f = 0; f < A.cols; ++f) {
        if (pivot_row_of_col[f] != -1) continue;
        std::vector<felem> v(A.cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = F.neg(A.at(i, f));
        res.kernel.push_back(std::move(v));
        if (mode == SolveMode::kernel_vector) return res;
    }
    if (mode == SolveMode::kernel_vector)
        throw std::runtime_error("kernel is trivial");
    return res;
}

RowSpace make_row_space(const FieldCtx& F, const Matrix& G) {
    Matrix A = G;
    RowSpace rs;
    rs.F = &F;
    rs.cols = G.cols;
    size_t r = 0;
    for (size_t c = 0; c < A.cols && r < A.rows; ++c) {
        size_t pr = r;
        while (pr < A.rows && A.at(pr, c) == 0) ++pr;
        if (pr == A.rows) continue;
        if (pr != r)
            for (size_t j = 0; j < A.cols; ++j) std::swap(A.at(pr, j), A.at(r, j));
        felem piv = F.inv(A.at(r, c));
        for (size_t j = c; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), piv);
        for (size_t i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            felem f = A.at(i, c);
            if (f == 0) continue;
            for (size_t j = c; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        rs.pivots.push_back(c);
        std::vector<felem> row(A.cols);
        for (size_t j = 0; j < A.cols; ++j) row[j] = A.at(r, j);
        rs.rows.push_back(std::move(row));
        ++r;
    }
    return rs;
}

bool RowSpace::contains(const std::vector<felem>& w) const {
    if (w.size() != cols) throw std::invalid_argument("length mismatch");
    std::vector<felem> v = w;
    for (size_t i = 0; i < rows.size(); ++i) {
        felem f = v[pivots[i]];
        if (f == 0) continue;
        for (size_t j = 0; j < cols; ++j)
            v[j] = F->sub(v[j], F->mul(f, rows[i][j]));
    }
    for (felem x : v)
        if (x != 0) return false;
    return true;
}

Matrix mat_mul(const FieldCtx& F, const Matrix& A, const Matrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("dimension mismatch");
    Matrix C(A.rows, B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t t = 0; t < A.cols; ++t) {
            felem a = A.at(i, t);
            if (a == 0) continue;
            for (size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(a, B.at(t, j)));
        }
    return C;
}

Matrix mat_inverse(const FieldCtx& F, const Matrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("not square");
    size_t n = A.rows;
    Matrix W(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) W.at(i, j) = A.at(i, j);
        W.at(i, n + i) = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t pr = c;
        while (pr < n && W.at(pr, c) == 0) ++pr;
        if (pr == n) throw std::runtime_error("matrix is singular");
        if (pr != c)
            for (size_t j = 0; j < 2 * n; ++j) std::swap(W.at(pr, j), W.at(c, j));
        felem piv = F.inv(W.at(c, c));
        for (size_t j = 0; j < 2 * n; ++j) W.at(c, j) = F.mul(W.at(c, j), piv);
        for (size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            felem f = W.at(i, c);
            if (f == 0) continue;
            for (size_t j = 0; j < 2 * n; ++j)
                W.at(i, j) = F.sub(W.at(i, j), F.mul(f, W.at(c, j)));
        }
    }
    Matrix Inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) Inv.at(i, j) = W.at(i, n + j);
    return Inv;
}

}  // namespace avc
