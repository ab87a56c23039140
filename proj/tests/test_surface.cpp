#include <doctest.h>

#include "test_util.hpp"

using namespace symexp;
using namespace symexp::testutil;

namespace {

// Independent oracle: the degree-2 part of log of the standard Magnus
// expansion theta(s_i) = 1 + S_i, extended multiplicatively over the word.
TensorSeries standard_magnus_log2(const SignedWord& w, const GeneratorSystem& sys) {
    const int trunc = 2;
    TensorSeries prod = TensorSeries::unit(sys.genus, trunc);
    for (const auto& l : w) {
        TensorSeries s = sys.generator_class(l.index, trunc);
        TensorSeries factor = ts_add(TensorSeries::unit(sys.genus, trunc),
                                     l.sign > 0 ? s : ts_neg(s));
        if (l.sign < 0) {
            // (1+S)^{-1} = 1 - S + S^2 - ...
            TensorSeries inv = TensorSeries::unit(sys.genus, trunc);
            TensorSeries pw = TensorSeries::unit(sys.genus, trunc);
            for (int k = 1; k <= trunc; ++k) {
                pw = ts_mul(pw, s);
                inv = (k % 2 == 1) ? ts_sub(inv, pw) : ts_add(inv, pw);
            }
            factor = inv;
        }
        prod = ts_mul(prod, factor);
    }
    return ts_log(prod).degree_part(2);
}

} // namespace

TEST_CASE("free reduction") {
    CHECK(reduce({{1, 1}, {1, -1}}).empty());
    CHECK(reduce({{1, 1}, {2, 1}, {2, -1}, {1, 1}}) ==
          SignedWord{{1, 1}, {1, 1}});
    SignedWord z = standard_zeta(1);
    CHECK(reduce(z) == z);
}

TEST_CASE("signed word text format") {
    CHECK(parse_signed_word("1,2,-1,-2") == standard_zeta(1));
    CHECK(format_signed_word(standard_zeta(2)) == "1,2,-1,-2,3,4,-3,-4");
    CHECK(parse_signed_word(format_signed_word(standard_zeta(3))) ==
          standard_zeta(3));
    CHECK_THROWS(parse_signed_word("1,0,2"));
}

TEST_CASE("abelianization") {
    GeneratorSystem sys = GeneratorSystem::standard(1);
    auto z = abelianize(sys.zeta, sys);
    CHECK(z == std::vector<Rational>{0, 0});
    CHECK(abelianize({{1, 1}}, sys) == std::vector<Rational>{1, 0});
    CHECK(abelianize({{1, 1}, {2, 1}, {1, 1}}, sys) == std::vector<Rational>{2, 1});
}

TEST_CASE("f_map") {
    GeneratorSystem sys = GeneratorSystem::standard(1);
    TensorSeries omega = br(letter(1, 2, 1), letter(1, 2, 2));
    CHECK(f_map(sys.zeta, sys) == omega);

    // [a, b^2] = a b b a^-1 b^-1 b^-1
    SignedWord w{{1, 1}, {2, 1}, {2, 1}, {1, -1}, {2, -1}, {2, -1}};
    CHECK(f_map(w, sys) == ts_scale(Rational(2), omega));

    CHECK(f_map({}, sys).is_zero());
    CHECK_THROWS(f_map({{1, 1}}, sys));
}

TEST_CASE("f is a homomorphism on commutator words") {
    std::mt19937 rng(2024);
    GeneratorSystem sys = GeneratorSystem::standard(2);
    for (int rep = 0; rep < 20; ++rep) {
        SignedWord u = random_commutator_word(rng, 2, 8);
        SignedWord v = random_commutator_word(rng, 2, 8);
        SignedWord uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(f_map(uv, sys) == ts_add(f_map(u, sys), f_map(v, sys)));
    }
}

TEST_CASE("f_map agrees with the standard Magnus expansion oracle") {
    std::mt19937 rng(90210);
    for (int g = 1; g <= 2; ++g) {
        GeneratorSystem sys = GeneratorSystem::standard(g);
        for (int rep = 0; rep < 60; ++rep) {
            SignedWord w = random_commutator_word(rng, g, 12);
            CHECK(f_map(w, sys) == standard_magnus_log2(w, sys));
        }
    }
}

TEST_CASE("f_map of zeta is integral and antisymmetric") {
    for (int g = 1; g <= 3; ++g) {
        GeneratorSystem sys = GeneratorSystem::standard(g);
        TensorSeries f = f_map(sys.zeta, sys);
        for (const auto& [w, c] : f.terms()) {
            CHECK(c.get_den() == 1);
            Word rev{w[1], w[0]};
            CHECK(f.coeff(rev) == -c);
        }
    }
}

TEST_CASE("surface matrices for standard systems") {
    GeneratorSystem sys = GeneratorSystem::standard(1);
    SurfaceMatrices sm = surface_matrices(sys);
    RatMatrix expect_c{{0, 1}, {-1, 0}};
    RatMatrix expect_d{{0, -1}, {1, 0}};
    CHECK(sm.c == expect_c);
    CHECK(sm.d == expect_d);
    CHECK(mat_mul(sm.c, sm.d) == identity_matrix(2));

    GeneratorSystem sys2 = GeneratorSystem::standard(2);
    SurfaceMatrices sm2 = surface_matrices(sys2);
    RatMatrix expect_c2{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    CHECK(sm2.c == expect_c2);
    CHECK(mat_mul(sm2.c, sm2.d) == identity_matrix(4));
}

TEST_CASE("degenerate boundary word is rejected") {
    // [a,b] times a conjugate of [b,a]: reduced, f = 0, c singular
    GeneratorSystem sys = GeneratorSystem::standard(1);
    sys.zeta = parse_signed_word("1,2,-1,-2,1,2,1,-2,-1,-1");
    CHECK(reduce(sys.zeta) == sys.zeta);
    CHECK(f_map(sys.zeta, sys).is_zero());
    CHECK_THROWS_AS(surface_matrices(sys), std::domain_error);
}
