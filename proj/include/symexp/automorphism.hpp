#pragma once

#include <iosfwd>

#include "symexp/expansion.hpp"

namespace symexp {

// Free-group automorphism given extensionally by generator images, together
// with the induced degree-preserving action on H (abelianizations of the
// images, in the reference basis).
struct FreeAutomorphism {
    int genus;
    std::vector<SignedWord> images; // images[i-1] = phi(s_i), reduced
    RatMatrix h_action;             // 2g x 2g integer, det +-1

    // Builds from generator images; computes h_action and checks det = +-1.
    static FreeAutomorphism from_images(int genus, std::vector<SignedWord> images);

    // The hyperelliptic-style flip xi_i -> xi_{2g+1-i}.
    static FreeAutomorphism flip(int genus);

    static FreeAutomorphism identity(int genus);
};

// File format: one line per generator, "index: signed-word", e.g. "1: 1,2".
FreeAutomorphism parse_automorphism(int genus, std::istream& in);

// Letterwise substitution followed by free reduction.
SignedWord apply_word(const FreeAutomorphism& phi, const SignedWord& w);

// |phi|: the algebra automorphism of the tensor algebra induced by the
// action on H, applied letterwise and extended multiplicatively.
TensorSeries extend_to_tensor(const FreeAutomorphism& phi, const TensorSeries& t);

enum class BoundaryBehavior { fixes, inverts, neither };

BoundaryBehavior boundary_behavior(const FreeAutomorphism& phi,
                                   const GeneratorSystem& sys);

// The system with generators t_i = phi(s_i): class matrix h_action * M and
// the same abstract zeta letter sequence (which represents zeta or its
// inverse according to boundary_behavior).
GeneratorSystem image_system(const FreeAutomorphism& phi, const GeneratorSystem& sys);

struct NaturalityReport {
    BoundaryBehavior behavior;
    bool ok;
    int first_failing_degree;   // 0 when ok
    int first_failing_generator; // 0 when ok
};

// Checks ell_n^{phi(S)}(phi(s_i)) = |phi| ell_n^{S}(s_i) for all i, n <= N.
NaturalityReport naturality_check(const FreeAutomorphism& phi,
                                  const GeneratorSystem& sys, int N);

// Checks theta^0(xi_{2g+1-i}) = |T| theta^0(xi_i) for the standard system.
NaturalityReport symmetry_check(int g, int N);

} // namespace symexp
