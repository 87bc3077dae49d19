#pragma once

#include "avc/ff.hpp"

#include <climits>
#include <map>
#include <string>
#include <vector>

namespace avc {

// Sparse multivariate polynomial: exponent vector -> nonzero coefficient.
// Every exponent vector has length nvars. The zero polynomial has an empty
// term map.
struct MultiPoly {
    const FieldCtx* F = nullptr;
    int nvars = 0;
    std::map<std::vector<int>, felem> t;

    MultiPoly() = default;
    MultiPoly(const FieldCtx& field, int nv) : F(&field), nvars(nv) {}

    bool is_zero() const { return t.empty(); }
    void set(const std::vector<int>& e, felem c) {
        if (c == 0) t.erase(e); else t[e] = c;
    }
    felem coeff(const std::vector<int>& e) const {
        auto it = t.find(e);
        return it == t.end() ? 0 : it->second;
    }
    long long total_degree() const; // -1 for the zero polynomial
    int degree_in(int var) const;   // -1 for the zero polynomial
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_scale(const MultiPoly& a, felem c);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_monomial_mul(const MultiPoly& a, const std::vector<int>& e, felem c);

enum class OrderKind { lex, grlex };

// priority lists variables from most significant to least; an empty priority
// means the natural order 0,1,...,nvars-1.
struct MonomialOrder {
    OrderKind kind = OrderKind::grlex;
    std::vector<int> priority;
};

bool mono_less(const std::vector<int>& a, const std::vector<int>& b, const MonomialOrder& ord);
std::vector<int> leading_monomial(const MultiPoly& f, const MonomialOrder& ord);

felem poly_evaluate(const MultiPoly& f, const std::vector<felem>& pt);

// Values on the product set sets[0] x ... x sets[m-1] in row-major order with
// the last coordinate moving fastest.
std::vector<felem> evaluate_grid(const MultiPoly& f, const std::vector<std::vector<felem>>& sets);

// binomial coefficient mod p by Lucas' theorem; 0 when k < 0 or k > n
int binom_mod_p(long long n, long long k, int p);

// Hasse derivative of order kv: the coefficient of Z^kv in f(X+Z), obtained
// by actually expanding the shift.
MultiPoly hasse_derivative(const MultiPoly& f, const std::vector<int>& kv);

// f(X + a)
MultiPoly poly_translate(const MultiPoly& f, const std::vector<felem>& a);

constexpr int kMultInfinity = INT_MAX;

// Multiplicity of f at the point a: least total order of a nonvanishing Hasse
// derivative, equivalently the least total degree in f(X+a). kMultInfinity
// for the zero polynomial.
int multiplicity(const MultiPoly& f, const std::vector<felem>& a);

// All univariate f(x) of degree < kbound with Q(x, f(x)) = 0, for a
// two-variable Q (variable 0 is x, variable 1 is z). Returns coefficient
// vectors of length kbound (constant term first), sorted, each verified by
// substitution.
std::vector<std::vector<felem>> z_roots_univariate(const MultiPoly& Q, int kbound);

// Textual form "c*x1^2*x2 + 7*x3 + 1": '+'-separated terms, coefficients are
// element codes, variables are 1-based. Parsing accepts arbitrary whitespace
// and omitted exponents.
MultiPoly poly_parse(const FieldCtx& F, int nvars, const std::string& text);
std::string poly_to_string(const MultiPoly& f);

}  // namespace avc
