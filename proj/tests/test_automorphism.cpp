#include <doctest.h>

#include <sstream>

#include "symexp/automorphism.hpp"
#include "test_util.hpp"

using namespace symexp;
using namespace symexp::testutil;

namespace {

// g=1 transvection alpha -> alpha beta, beta -> beta; fixes zeta.
FreeAutomorphism transvection_g1() {
    return FreeAutomorphism::from_images(1, {{{1, 1}, {2, 1}}, {{2, 1}}});
}

} // namespace

TEST_CASE("apply_word") {
    GeneratorSystem sys = GeneratorSystem::standard(1);
    FreeAutomorphism id = FreeAutomorphism::identity(1);
    CHECK(apply_word(id, sys.zeta) == sys.zeta);

    // (ab) b (ab)^-1 b^-1 reduces back to a b a^-1 b^-1
    FreeAutomorphism phi = transvection_g1();
    CHECK(apply_word(phi, sys.zeta) == sys.zeta);

    FreeAutomorphism t = FreeAutomorphism::flip(1);
    CHECK(apply_word(t, sys.zeta) == reduce(inverse_word(sys.zeta)));
}

TEST_CASE("extend_to_tensor") {
    GeneratorSystem sys = GeneratorSystem::standard(1);
    TensorSeries omega = f_map(sys.zeta, sys);

    FreeAutomorphism t = FreeAutomorphism::flip(1);
    CHECK(extend_to_tensor(t, omega) == ts_neg(omega));

    FreeAutomorphism phi = transvection_g1();
    CHECK(extend_to_tensor(phi, omega) == omega);

    FreeAutomorphism id = FreeAutomorphism::identity(1);
    std::mt19937 rng(5150);
    TensorSeries r = random_lie_series(rng, 1, 4);
    CHECK(extend_to_tensor(id, r) == r);
}

TEST_CASE("extend_to_tensor is an algebra map") {
    std::mt19937 rng(1984);
    FreeAutomorphism phi = transvection_g1();
    for (int rep = 0; rep < 8; ++rep) {
        TensorSeries a = random_lie_series(rng, 1, 4);
        TensorSeries b = random_lie_series(rng, 1, 4);
        CHECK(extend_to_tensor(phi, ts_mul(a, b)) ==
              ts_mul(extend_to_tensor(phi, a), extend_to_tensor(phi, b)));
        CHECK(extend_to_tensor(phi, ts_bracket(a, b)) ==
              ts_bracket(extend_to_tensor(phi, a), extend_to_tensor(phi, b)));
        CHECK(extend_to_tensor(phi, ts_exp(a)) == ts_exp(extend_to_tensor(phi, a)));
        CHECK(extend_to_tensor(phi, dynkin_phi(a)) ==
              dynkin_phi(extend_to_tensor(phi, a)));
    }
}

TEST_CASE("h_action of a composite is the matrix product") {
    FreeAutomorphism phi = transvection_g1();
    FreeAutomorphism t = FreeAutomorphism::flip(1);
    // composite t . phi: apply phi then t
    std::vector<SignedWord> images;
    for (const auto& img : phi.images) images.push_back(apply_word(t, img));
    FreeAutomorphism comp = FreeAutomorphism::from_images(1, images);
    CHECK(comp.h_action == mat_mul(phi.h_action, t.h_action));
}

TEST_CASE("boundary_behavior") {
    GeneratorSystem sys = GeneratorSystem::standard(1);
    CHECK(boundary_behavior(transvection_g1(), sys) == BoundaryBehavior::fixes);
    CHECK(boundary_behavior(FreeAutomorphism::flip(1), sys) ==
          BoundaryBehavior::inverts);

    // alpha -> beta, beta -> alpha maps zeta to its exact inverse word
    FreeAutomorphism swap =
        FreeAutomorphism::from_images(1, {{{2, 1}}, {{1, 1}}});
    CHECK(boundary_behavior(swap, sys) == BoundaryBehavior::inverts);

    // alpha -> alpha, beta -> alpha beta only conjugates zeta: neither
    FreeAutomorphism conj =
        FreeAutomorphism::from_images(1, {{{1, 1}}, {{1, 1}, {2, 1}}});
    CHECK(boundary_behavior(conj, sys) == BoundaryBehavior::neither);
}

TEST_CASE("image_system") {
    GeneratorSystem sys = GeneratorSystem::standard(1);
    FreeAutomorphism id = FreeAutomorphism::identity(1);
    GeneratorSystem same = image_system(id, sys);
    CHECK(same.class_matrix == sys.class_matrix);
    CHECK(same.zeta == sys.zeta);

    GeneratorSystem transl = image_system(transvection_g1(), sys);
    RatMatrix expect{{1, 1}, {0, 1}};
    CHECK(transl.class_matrix == expect);
    CHECK(transl.zeta == sys.zeta);

    GeneratorSystem flipped = image_system(FreeAutomorphism::flip(1), sys);
    RatMatrix expect_t{{0, 1}, {1, 0}};
    CHECK(flipped.class_matrix == expect_t);

    FreeAutomorphism conj =
        FreeAutomorphism::from_images(1, {{{1, 1}}, {{1, 1}, {2, 1}}});
    CHECK_THROWS(image_system(conj, sys));
}

TEST_CASE("naturality for a transvection") {
    NaturalityReport rep =
        naturality_check(transvection_g1(), GeneratorSystem::standard(1), 5);
    CHECK(rep.behavior == BoundaryBehavior::fixes);
    CHECK(rep.ok);
}

TEST_CASE("naturality for the flip") {
    NaturalityReport r1 =
        naturality_check(FreeAutomorphism::flip(1), GeneratorSystem::standard(1), 5);
    CHECK(r1.behavior == BoundaryBehavior::inverts);
    CHECK(r1.ok);

    NaturalityReport r2 =
        naturality_check(FreeAutomorphism::flip(2), GeneratorSystem::standard(2), 4);
    CHECK(r2.ok);
}

TEST_CASE("symmetry of the standard expansion") {
    CHECK(symmetry_check(1, 5).ok);
    CHECK(symmetry_check(2, 4).ok);

    // spot check: |T| of the 1/12 term of l(alpha) appears in l(beta)
    Expansion e = compute_expansion(GeneratorSystem::standard(1), 3);
    FreeAutomorphism t = FreeAutomorphism::flip(1);
    CHECK(extend_to_tensor(t, e.ell[0][2]) == e.ell[1][2]);
}

TEST_CASE("automorphism file parsing") {
    std::istringstream in("# transvection\n1: 1,2\n2: 2\n");
    FreeAutomorphism phi = parse_automorphism(1, in);
    CHECK(phi.images[0] == SignedWord{{1, 1}, {2, 1}});
    CHECK(phi.images[1] == SignedWord{{2, 1}});

    std::istringstream missing("1: 1,2\n");
    CHECK_THROWS(parse_automorphism(1, missing));
}

TEST_CASE("non-invertible h_action is rejected") {
    CHECK_THROWS(FreeAutomorphism::from_images(
        1, {{{1, 1}, {2, 1}, {1, 1}}, {{2, 1}}}));
}
