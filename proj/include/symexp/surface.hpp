#pragma once

#include <string>
#include <vector>

#include "symexp/free_lie.hpp"
#include "symexp/tensor_series.hpp"

namespace symexp {

// One letter of a word in the free group: generator index with a sign.
struct SignedLetter {
    int index; // 1..2g
    int sign;  // +1 or -1

    bool operator==(const SignedLetter&) const = default;
};

using SignedWord = std::vector<SignedLetter>;

// Free reduction: cancels adjacent x x^{-1} pairs until none remain.
SignedWord reduce(const SignedWord& w);

SignedWord inverse_word(const SignedWord& w);

bool is_reduced(const SignedWord& w);

// Text format: comma-separated nonzero integers, negative = inverse letter.
// The standard boundary word for g=2 is "1,2,-1,-2,3,4,-3,-4".
SignedWord parse_signed_word(const std::string& text);
std::string format_signed_word(const SignedWord& w);

// Exact square-matrix helpers over the rationals.
using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix identity_matrix(int n);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
// Gaussian elimination; throws std::domain_error on a singular input.
RatMatrix mat_inverse(const RatMatrix& m);

// A free generating set for pi together with the boundary word zeta.
// Row i of class_matrix is the homology class of generator s_i in the fixed
// reference basis of H.
struct GeneratorSystem {
    int genus;
    std::vector<std::string> labels; // 2g display names
    RatMatrix class_matrix;          // 2g x 2g, integer entries, det +-1
    SignedWord zeta;                 // reduced, zero abelianization

    // Standard symplectic system: labels a1,b1,...,ag,bg, identity classes,
    // zeta = prod [alpha_i, beta_i].
    static GeneratorSystem standard(int g);

    bool is_standard() const;

    // Homology class of generator i as a degree-1 tensor.
    TensorSeries generator_class(int i, int truncation) const;
};

SignedWord standard_zeta(int g);

// Sum over letters of sign * class row.
std::vector<Rational> abelianize(const SignedWord& w, const GeneratorSystem& sys);

// For a word in the commutator subgroup, its class in Lambda^2 H embedded in
// H^{otimes 2}: (1/2) sum_{i<j} ([y_i](x)[y_j] - [y_j](x)[y_i]).
TensorSeries f_map(const SignedWord& w, const GeneratorSystem& sys);

// omega = f(zeta) decomposed as sum_i S_i (x) Z_i with Z_i = sum_k c_ik S_k,
// in generator-class coordinates; d = c^{-1}.
struct SurfaceMatrices {
    TensorSeries omega;
    RatMatrix c; // integer entries
    RatMatrix d;
};

// Throws std::domain_error("degenerate boundary word") when c is singular,
// and std::domain_error when c fails to be integral.
SurfaceMatrices surface_matrices(const GeneratorSystem& sys);

} // namespace symexp
