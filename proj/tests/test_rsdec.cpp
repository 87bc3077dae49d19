#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "avc/codes.hpp"
#include "avc/rng.hpp"
#include "avc/rsdec.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace avc;

namespace {

std::vector<felem> random_word(Rng& rng, const FieldCtx& F, size_t n) {
    std::vector<felem> w(n);
    for (auto& x : w) x = (felem)rng.below(F.q);
    return w;
}

// corrupt exactly `weight` positions, each by a nonzero offset
std::vector<felem> corrupt(Rng& rng, const FieldCtx& F, std::vector<felem> w, int weight) {
    std::set<size_t> pos;
    while ((int)pos.size() < weight) pos.insert((size_t)rng.below(w.size()));
    for (size_t i : pos) w[i] = F.add(w[i], (felem)(1 + rng.below(F.q - 1)));
    return w;
}

// all codewords within the radius, by running over every message
std::vector<std::vector<felem>> exhaustive_list(const RSCode& code,
                                                const std::vector<felem>& received,
                                                long long radius) {
    const FieldCtx& F = *code.F;
    long long total = 1;
    for (int i = 0; i < code.k; ++i) total *= F.q;
    std::vector<std::vector<felem>> out;
    std::vector<felem> msg(code.k, 0);
    for (long long c = 0; c < total; ++c) {
        long long v = c;
        for (int i = 0; i < code.k; ++i) { msg[i] = (felem)(v % F.q); v /= F.q; }
        auto word = rs_encode(code, msg);
        if (hamming_distance(word, received) <= radius) out.push_back(word);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("parameter selection on the benchmark codes") {
    GSParams gp = gs_parameters(49, 25, 1);
    CHECK(gp.L == 36);
    CHECK(gp.A_min == 37);
    CHECK(gp.E_max == 12);
    CHECK(gp.t_Z == 1);
    CHECK(gp.constraints == 49);

    gp = gs_parameters(7, 2, 1);
    CHECK(gp.L == 3);
    CHECK(gp.E_max == 3);
    gp = gs_parameters(7, 2, 2);
    CHECK(gp.L == 6);
    CHECK(gp.E_max == 3);
    gp = gs_parameters(7, 2, 3);
    CHECK(gp.L == 8);
    CHECK(gp.A_min == 3);
    CHECK(gp.E_max == 4);

    // n(k-1) a perfect square: L grows as 4r and the agreement stays put
    for (int r = 1; r <= 3; ++r) {
        gp = gs_parameters(8, 3, r);
        CHECK(gp.L == 4 * r);
        CHECK(gp.A_min == 5);
        CHECK(gp.E_max == 3);
    }

    CHECK_THROWS_AS(gs_parameters(5, 6, 1), std::invalid_argument);
    CHECK_THROWS_AS(gs_parameters(5, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gs_parameters(5, 2, 0), std::invalid_argument);
}

TEST_CASE("parameter invariants over a sweep") {
    for (long long n : {5LL, 8LL, 13LL, 49LL, 64LL}) {
        for (int k = 2; k <= n; k += 3) {
            long long prev = -1;
            for (int r = 1; r <= 6; ++r) {
                GSParams gp = gs_parameters(n, k, r);
                // L least with enough monomials
                long long cnt = 0;
                for (long long b = 0; (k - 1) * b <= gp.L; ++b) cnt += gp.L - (k - 1) * b + 1;
                CHECK(cnt > gp.constraints);
                if (gp.L > 0) {
                    long long cnt1 = 0;
                    for (long long b = 0; (k - 1) * b <= gp.L - 1; ++b) cnt1 += gp.L - 1 - (k - 1) * b + 1;
                    CHECK(cnt1 <= gp.constraints);
                }
                CHECK((long long)r * gp.A_min > gp.L);
                CHECK(gp.E_max == std::max(0LL, n - gp.A_min));
                // radius never shrinks as the multiplicity grows
                CHECK(gp.E_max >= prev);
                prev = gp.E_max;
            }
            CHECK(prev <= gs_capability_ultimate(n, k));
        }
    }
}

TEST_CASE("ultimate capability values") {
    CHECK(gs_capability_ultimate(512, 193) == 198);
    CHECK(gs_capability_ultimate(512, 257) == 149);
    CHECK(gs_capability_ultimate(512, 449) == 33);
    CHECK(gs_capability_ultimate(4096, 1281) == 1806);
    CHECK(gs_capability_ultimate(4096, 3841) == 130);
    CHECK(gs_capability_ultimate(7, 2) == 4);
    CHECK(gs_capability_ultimate(8, 3) == 3);
    // degree bound at or above the length leaves nothing
    CHECK(gs_capability_ultimate(16, 17) == 0);
    CHECK(gs_capability_ultimate(16, 40) == 0);

    // the multiplicity sweep actually reaches the limit on small codes
    CHECK(gs_parameters(7, 2, 3).E_max == gs_capability_ultimate(7, 2));
    CHECK(gs_parameters(8, 3, 1).E_max == gs_capability_ultimate(8, 3));
    for (int r = 3; r <= 8; ++r) CHECK(gs_parameters(7, 2, r).E_max == 4);
}

TEST_CASE("ceiling flavor of the radius") {
    CHECK(gs_capability_ceiling(512, 193) == 198);
    CHECK(gs_capability_ceiling(512, 257) == 150); // one above the agreement-based 149
    CHECK(gs_capability_ceiling(512, 449) == 33);
    CHECK(gs_capability_ceiling(49, 961) <= 0);
    for (long long n : {16LL, 49LL, 100LL})
        for (int k = 1; k <= n; ++k) {
            long long diff = gs_capability_ceiling(n, k) - gs_capability_ultimate(n, k);
            // never more than one above; can drop below at low rate, where
            // sqrt(n*k) and sqrt(n*(k-1)) are far apart
            CHECK(diff <= 1);
            if (2 * k > n) CHECK(diff >= 0);
        }
}

TEST_CASE("encoding and zero-error decoding") {
    FieldCtx F = field_create(2, 3);
    std::vector<felem> pts = {1, 2, 3, 4, 5, 6, 7};
    RSCode code = make_rs_code(F, pts, 2);

    // f(x) = 3 + x evaluated by hand in GF(8)
    auto word = rs_encode(code, {3, 1});
    for (size_t i = 0; i < pts.size(); ++i) CHECK(word[i] == F.add(3, pts[i]));

    for (int r = 1; r <= 3; ++r) {
        auto rep = gs_decode_rs(word, code, r);
        bool found = false;
        for (size_t i = 0; i < rep.words.size(); ++i) {
            CHECK(rep.distances[i] <= gs_parameters(7, 2, r).E_max);
            if (rep.words[i] == word) {
                found = true;
                CHECK(rep.distances[i] == 0);
            }
        }
        CHECK(found);
    }

    CHECK_THROWS_AS(make_rs_code(F, {1, 2, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_rs_code(F, {1, 2, 3}, 4), std::invalid_argument);
    CHECK_THROWS_AS(rs_encode(code, {1}), std::invalid_argument);
}

TEST_CASE("interpolation certificate on a small instance") {
    FieldCtx F = field_create(2, 3);
    std::vector<felem> pts = {1, 2, 3, 4, 5, 6, 7};
    RSCode code = make_rs_code(F, pts, 2);
    Rng rng(2024);
    auto received = random_word(rng, F, 7);

    for (int r = 1; r <= 3; ++r) {
        GSParams gp = gs_parameters(7, 2, r);
        MultiPoly Q = gs_interpolate(code, received, gp);
        CHECK(!Q.is_zero());
        CHECK((long long)Q.t.size() <= gp.constraints + 1);
        for (const auto& [e, c] : Q.t) CHECK(e[0] + (code.k - 1) * e[1] <= gp.L);
        for (size_t i = 0; i < 7; ++i)
            CHECK(multiplicity(Q, {pts[i], received[i]}) >= r);
    }
}

TEST_CASE("list matches exhaustive search on the [7,2] code") {
    FieldCtx F = field_create(2, 3);
    std::vector<felem> pts = {1, 2, 3, 4, 5, 6, 7};
    RSCode code = make_rs_code(F, pts, 2);
    Rng rng(77);

    for (int r = 1; r <= 3; ++r) {
        long long radius = gs_parameters(7, 2, r).E_max;
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<felem> received;
            if (trial % 2 == 0) {
                received = random_word(rng, F, 7);
            } else {
                std::vector<felem> msg = {(felem)rng.below(8), (felem)rng.below(8)};
                received = corrupt(rng, F, rs_encode(code, msg), (int)radius);
            }
            auto rep = gs_decode_rs(received, code, r);
            auto oracle = exhaustive_list(code, received, radius);
            REQUIRE(rep.words == oracle);
        }
    }
}

TEST_CASE("list matches exhaustive search on the [8,3] code") {
    FieldCtx F = field_create(2, 3);
    std::vector<felem> pts = {0, 1, 2, 3, 4, 5, 6, 7};
    RSCode code = make_rs_code(F, pts, 3);
    Rng rng(78);

    for (int r = 1; r <= 3; ++r) {
        long long radius = gs_parameters(8, 3, r).E_max;
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<felem> received;
            if (trial % 2 == 0) {
                received = random_word(rng, F, 8);
            } else {
                auto msg = random_word(rng, F, 3);
                received = corrupt(rng, F, rs_encode(code, msg), (int)radius);
            }
            auto rep = gs_decode_rs(received, code, r);
            auto oracle = exhaustive_list(code, received, radius);
            REQUIRE(rep.words == oracle);
        }
    }
}

TEST_CASE("[49,25] code corrects 12 errors at multiplicity 1") {
    FieldCtx F = field_create(2, 6);
    std::vector<felem> pts(49);
    for (int i = 0; i < 49; ++i) pts[i] = (felem)i;
    RSCode code = make_rs_code(F, pts, 25);
    Rng rng(4949);

    for (int trial = 0; trial < 12; ++trial) {
        auto msg = random_word(rng, F, 25);
        auto sent = rs_encode(code, msg);
        auto received = corrupt(rng, F, sent, 12);
        auto rep = gs_decode_rs(received, code, 1);
        bool found = false;
        for (auto& w : rep.words)
            if (w == sent) found = true;
        CHECK(found);
    }
}

TEST_CASE("subfield pipeline corrects the total-degree-1 code over GF(4)") {
    FieldCtx F = field_create(2, 2);
    PointEnsemble S = default_ensemble(F, {4, 4});
    CodeSpec code = make_code(qary_rm_set({4, 4}, 1), S);
    CHECK(ambient_rs_k(code.mset, S) == 5);

    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<felem> msg = random_word(rng, F, (size_t)dimension(code));
        auto sent = encode(code, msg);
        auto received = corrupt(rng, F, sent, 1);
        auto rep = subfield_subcode_decode(received, code, 1);
        bool found = false;
        for (size_t i = 0; i < rep.words.size(); ++i) {
            CHECK(hamming_distance(rep.words[i], received) == rep.distances[i]);
            if (rep.words[i] == sent) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("subfield pipeline on a 16x4 grid inside GF(16)^2") {
    FieldCtx F = field_create(2, 4);
    PointEnsemble S = default_ensemble(F, {16, 4});
    CodeSpec code = make_code(wrm_set({16, 4}, Rat(2), {Rat(1), Rat(1)}), S);
    CHECK(ambient_rs_k(code.mset, S) == 33);
    CHECK(gs_capability_ceiling(64, 33) == 19);

    Rng rng(12);
    GSParams gp = gs_parameters(64, 33, 1);
    CHECK(gp.E_max == 15);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<felem> msg = random_word(rng, F, (size_t)dimension(code));
        auto sent = encode(code, msg);
        auto received = corrupt(rng, F, sent, 10);
        auto rep = subfield_subcode_decode(received, code, 1);
        bool found = false;
        for (auto& w : rep.words)
            if (w == sent) found = true;
        CHECK(found);
    }

    // an untouched codeword always comes back
    std::vector<felem> msg = random_word(rng, F, (size_t)dimension(code));
    auto sent = encode(code, msg);
    auto rep = subfield_subcode_decode(sent, code, 1);
    REQUIRE(!rep.words.empty());
    bool found = false;
    for (size_t i = 0; i < rep.words.size(); ++i)
        if (rep.words[i] == sent) {
            found = true;
            CHECK(rep.distances[i] == 0);
        }
    CHECK(found);
}

TEST_CASE("subfield pipeline refuses when the ambient rate is hopeless") {
    FieldCtx F = field_create(2, 6);
    PointEnsemble S = default_ensemble(F, {64, 8});
    CodeSpec code = make_code(wrm_set({64, 8}, Rat(15), {Rat(1), Rat(8)}), S);
    CHECK(ambient_rs_k(code.mset, S) == 961);

    std::vector<felem> received(512, 0);
    CHECK_THROWS_WITH_AS(subfield_subcode_decode(received, code, 1),
                         doctest::Contains("may be close to zero or even negative"),
                         std::invalid_argument);
}

TEST_CASE("constant-guess decoder round trip over all eight constants") {
    FieldCtx F = field_create(2, 3);
    PointEnsemble S = units_ensemble(F, 2);
    CodeSpec joy = make_code(joyner_set(), S);
    REQUIRE(dimension(joy) == 11);
    REQUIRE(S.n == 49);

    Rng rng(333);
    auto mons = joy.monomials();
    // the constant monomial sits first in the canonical order
    REQUIRE(mons[0] == std::vector<int>({0, 0}));

    for (felem c = 0; c < 8; ++c) {
        std::vector<felem> msg = random_word(rng, F, 11);
        msg[0] = c;
        auto sent = encode(joy, msg);
        auto received = corrupt(rng, F, sent, 12);
        auto rep = joyner_decode(F, received, 1, 12);
        bool found = false;
        for (size_t i = 0; i < rep.words.size(); ++i) {
            CHECK(rep.distances[i] <= 12);
            if (rep.words[i] == sent) found = true;
        }
        CHECK(found);
    }

    // error-free round trip
    std::vector<felem> msg = random_word(rng, F, 11);
    auto sent = encode(joy, msg);
    auto rep = joyner_decode(F, sent, 1, 12);
    bool found = false;
    for (size_t i = 0; i < rep.words.size(); ++i)
        if (rep.words[i] == sent) {
            found = true;
            CHECK(rep.distances[i] == 0);
        }
    CHECK(found);

    CHECK_THROWS_AS(joyner_decode(F, std::vector<felem>(48, 0), 1, 12), std::invalid_argument);
}
