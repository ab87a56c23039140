#pragma once

#include <vector>

#include "symexp/surface.hpp"

namespace symexp {

// Truncated logarithms ell_1(s_i)..ell_n(s_i), each homogeneous Lie of its
// degree, whose star product along zeta equals omega mod degree n+2.
struct PartialExpansion {
    GeneratorSystem system;
    SurfaceMatrices matrices; // omega, c, d for the system
    int max_degree;           // n
    // ell[i][j-1] = ell_{j}(s_{i+1}), homogeneous of degree j.
    std::vector<std::vector<TensorSeries>> ell;

    static PartialExpansion initial(const GeneratorSystem& sys);

    // sum_j ell_j(s_i) at the given truncation; sign -1 for s_i^{-1}.
    TensorSeries ell_bar(int i, int sign, int truncation) const;
};

// theta-bar of one signed letter: exp of the signed truncated logarithm.
TensorSeries theta_bar(const PartialExpansion& pe, SignedLetter letter, int truncation);

// Ordered product of theta_bar over the letters of zeta.
TensorSeries boundary_product(const PartialExpansion& pe, int truncation);

// Iterated BCH star product of the signed logarithms along zeta.
TensorSeries boundary_star(const PartialExpansion& pe, int truncation);

// The defect V_{n+1} of a partial expansion up to degree n-1: the degree
// (n+1)-part of boundary_product - exp(omega), computed at truncation
// max_degree+2.  Throws if the lower-degree congruence or the Lie membership
// of the defect fails.
TensorSeries defect(const PartialExpansion& pe);

// One refinement: extends pe (up to degree n-1) by the degree-n terms
// ell_n(s_i) = sum_k d_ik W_k with W_i = (-1/(n+1)) Phi(V_n^{S_i}).
PartialExpansion refine_step(const PartialExpansion& pe);

// Same output as refine_step, specialized to the standard symplectic system:
// V via the commutator product formula G(X,Y) = 1 + sum (-1)^{i+j}[X,Y]X^iY^j
// and ell_n(alpha_i) = (1/(n+1)) Phi(V_n^{B_i}),
// ell_n(beta_i) = (-1/(n+1)) Phi(V_n^{A_i}).
PartialExpansion symplectic_shortcut_step(const PartialExpansion& pe);

// (1+X)(1+Y)(1+X)^{-1}(1+Y)^{-1} expanded in closed form.
TensorSeries commutator_g_factor(const TensorSeries& x, const TensorSeries& y);

// A symplectic expansion truncated at degree N.
struct Expansion {
    GeneratorSystem system;
    int degree; // N
    std::vector<std::vector<TensorSeries>> ell; // ell[i][j-1] homogeneous of degree j

    TensorSeries ell_total(int i, int truncation) const;
    TensorSeries theta(int i, int truncation) const;
    // theta extended multiplicatively over a signed word.
    TensorSeries theta_word(const SignedWord& w, int truncation) const;

    Expansion truncated(int new_degree) const;
};

// Runs the refinement loop from ell_1(s_i) = S_i up to degree N, verifying
// congruence (3.1) at every step.
Expansion compute_expansion(const GeneratorSystem& sys, int N);

// Same driver through symplectic_shortcut_step; standard systems only.
Expansion compute_expansion_shortcut(const GeneratorSystem& sys, int N);

struct VerifyReport {
    bool magnus_ok = false;     // theta(s_i) = 1 + [s_i] mod degree 2
    bool group_like_ok = false; // every homogeneous ell_j(s_i) is Lie
    bool boundary_ok = false;   // theta(zeta) = exp(omega) mod degree N+1
    int first_failing_degree = 0; // 0 when everything passes

    bool all_ok() const { return magnus_ok && group_like_ok && boundary_ok; }
};

VerifyReport verify_symplectic(const Expansion& e);

} // namespace symexp
