#pragma once

#include <map>
#include <utility>
#include <vector>

#include "symexp/tensor_series.hpp"

namespace symexp {

// A word strictly lexicographically smaller than all of its proper
// rotations.  Bracketed Lyndon words form a basis of the free Lie algebra.
using LyndonWord = Word;

// All Lyndon words of length m over the alphabet 1..2g, sorted
// lexicographically (Duval's algorithm).
std::vector<LyndonWord> lyndon_words(int g, int m);

bool is_lyndon(const Word& w);

// Standard factorization w = u.v where v is the longest proper suffix of w
// that is Lyndon.  Requires degree >= 2.
std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w);

// Tensor expansion of the standard bracketing of w: single letters map to
// themselves, longer words to [bracket(u), bracket(v)].
TensorSeries lyndon_bracket(int g, const LyndonWord& w, int truncation);

// Dynkin map: linear extension of Y1x...xYm -> [Y1,[...[Y_{m-1},Ym]...]].
// Satisfies Phi(u) = m u for u in L_m, which is also the membership test.
TensorSeries dynkin_phi(const TensorSeries& t);

// Dynkin-Specht-Wever criterion: t homogeneous of degree m lies in L_m iff
// Phi(t) = m t.
bool is_lie(const TensorSeries& t, int m);

// Coordinates of a homogeneous Lie element in the bracketed-Lyndon basis.
// The change of basis is unitriangular (each bracketed Lyndon word has
// coefficient 1 on its own word and support only on lexicographically larger
// words), so this is plain back-substitution from the smallest word.
std::map<LyndonWord, Rational> to_lyndon(const TensorSeries& t, int m);

// Expands a Lyndon coefficient map back to a tensor.
TensorSeries from_lyndon(int g, int truncation,
                         const std::map<LyndonWord, Rational>& coeffs);

// Writes a homogeneous Lie element u of degree m+1 as u = sum_i S_i (x) u_i
// by slicing off the leading letter.  Then (1/(m+1)) sum_i [S_i, Phi(u_i)]
// reconstructs u: the map (1/(m+1))(id (x) Phi) is a right inverse of the
// bracket H (x) L_m ->> L_{m+1}.
std::vector<std::pair<int, TensorSeries>>
lie_right_inverse_split(const TensorSeries& u, int m_plus_1);

// Homogeneous element of L_m carried both as a tensor and in Lyndon
// coordinates.
struct LieElement {
    int degree;
    TensorSeries tensor;
    std::map<LyndonWord, Rational> lyndon_coeffs;

    static LieElement from_tensor(const TensorSeries& t, int m);
};

} // namespace symexp
