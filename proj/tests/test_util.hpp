#pragma once

#include <random>
#include <vector>

#include "symexp/free_lie.hpp"
#include "symexp/surface.hpp"

namespace symexp::testutil {

inline TensorSeries letter(int g, int trunc, int i) {
    return TensorSeries::letter(g, trunc, i);
}

inline TensorSeries br(const TensorSeries& a, const TensorSeries& b) {
    return ts_bracket(a, b);
}

inline Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Random rational combination of bracketed Lyndon words of degree m: a
// uniformly sampled genuine Lie element.
inline TensorSeries random_lie(std::mt19937& rng, int g, int m, int trunc) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    TensorSeries t(g, trunc);
    for (const auto& w : lyndon_words(g, m))
        t = ts_add(t, ts_scale(q(num(rng), den(rng)), lyndon_bracket(g, w, trunc)));
    return t;
}

// Random Lie-valued series with zero constant term, degrees 1..trunc.
inline TensorSeries random_lie_series(std::mt19937& rng, int g, int trunc) {
    TensorSeries t(g, trunc);
    for (int m = 1; m <= trunc; ++m)
        t = ts_add(t, random_lie(rng, g, m, trunc));
    return t;
}

// Random reduced word of the form u [s_i, s_j] u^{-1} ... built as a product
// of conjugated commutators, so it has zero abelianization by construction.
inline SignedWord random_commutator_word(std::mt19937& rng, int g, int max_len) {
    std::uniform_int_distribution<int> idx(1, 2 * g);
    std::uniform_int_distribution<int> sgn(0, 1);
    SignedWord w;
    while (true) {
        SignedLetter x{idx(rng), sgn(rng) ? 1 : -1};
        SignedLetter y{idx(rng), sgn(rng) ? 1 : -1};
        SignedWord comm{x, y, {x.index, -x.sign}, {y.index, -y.sign}};
        SignedWord next = reduce([&] {
            SignedWord cat = w;
            cat.insert(cat.end(), comm.begin(), comm.end());
            return cat;
        }());
        if (static_cast<int>(next.size()) > max_len) break;
        w = next;
        if (!w.empty() && static_cast<int>(w.size()) + 4 > max_len) break;
    }
    return w;
}

// The genus-1 example table: ell[generator][degree-1], degrees 1..5.
inline std::vector<std::vector<TensorSeries>> genus1_paper_table() {
    const int g = 1;
    auto L = [&](int i) { return letter(g, 5, i); };
    TensorSeries A = L(1), B = L(2);
    std::vector<std::vector<TensorSeries>> t(2);
    // alpha
    t[0] = {
        A,
        q(1, 2) * br(A, B),
        q(1, 12) * br(B, br(B, A)) + q(-1, 8) * br(A, br(A, B)),
        q(1, 24) * br(A, br(A, br(A, B))),
        q(-1, 720) * br(B, br(B, br(B, br(B, A)))) +
            q(-1, 288) * br(A, br(A, br(A, br(A, B)))) +
            q(-1, 288) * br(A, br(B, br(B, br(B, A)))) +
            q(-1, 288) * br(B, br(A, br(A, br(A, B)))) +
            q(1, 144) * br(br(A, B), br(B, br(B, A))) +
            q(1, 128) * br(br(A, B), br(A, br(A, B))),
    };
    // beta
    t[1] = {
        B,
        q(-1, 2) * br(A, B),
        q(1, 12) * br(A, br(A, B)) + q(-1, 8) * br(B, br(B, A)),
        q(1, 24) * br(B, br(B, br(B, A))),
        q(-1, 720) * br(A, br(A, br(A, br(A, B)))) +
            q(-1, 288) * br(B, br(B, br(B, br(B, A)))) +
            q(-1, 288) * br(B, br(A, br(A, br(A, B)))) +
            q(-1, 288) * br(A, br(B, br(B, br(B, A)))) +
            q(-1, 144) * br(br(A, B), br(A, br(A, B))) +
            q(-1, 128) * br(br(A, B), br(B, br(B, A))),
    };
    return t;
}

// The genus-2 example table: ell[generator][degree-1], degrees 1..4.
inline std::vector<std::vector<TensorSeries>> genus2_paper_table() {
    const int g = 2;
    auto L = [&](int i) { return letter(g, 4, i); };
    TensorSeries A1 = L(1), B1 = L(2), A2 = L(3), B2 = L(4);
    std::vector<std::vector<TensorSeries>> t(4);
    t[0] = {
        A1,
        q(1, 2) * br(A1, B1),
        q(1, 12) * br(B1, br(B1, A1)) + q(-1, 8) * br(A1, br(A1, B1)) +
            q(-1, 4) * br(A1, br(A2, B2)),
        q(1, 24) * br(A1, br(A1, br(A1, B1))) +
            q(-1, 10) * br(br(A1, B1), br(A2, B2)) +
            q(1, 40) * br(A1, br(B1, br(A2, B2))) +
            q(1, 40) * br(A1, br(B2, br(A2, B2))) +
            q(1, 40) * br(A1, br(A1, br(A2, B2))) +
            q(1, 40) * br(A1, br(A2, br(A2, B2))),
    };
    t[1] = {
        B1,
        q(-1, 2) * br(A1, B1),
        q(1, 12) * br(A1, br(A1, B1)) + q(-1, 8) * br(B1, br(B1, A1)) +
            q(-1, 4) * br(B1, br(A2, B2)),
        q(1, 24) * br(B1, br(B1, br(B1, A1))) +
            q(1, 10) * br(br(A1, B1), br(A2, B2)) +
            q(1, 40) * br(B1, br(A1, br(A2, B2))) +
            q(1, 40) * br(B1, br(A2, br(A2, B2))) +
            q(1, 40) * br(B1, br(B1, br(A2, B2))) +
            q(1, 40) * br(B1, br(B2, br(A2, B2))),
    };
    t[2] = {
        A2,
        q(1, 2) * br(A2, B2),
        q(1, 12) * br(B2, br(B2, A2)) + q(-1, 8) * br(A2, br(A2, B2)) +
            q(1, 4) * br(A2, br(A1, B1)),
        q(1, 24) * br(A2, br(A2, br(A2, B2))) +
            q(-1, 10) * br(br(A1, B1), br(A2, B2)) +
            q(-1, 40) * br(A2, br(B2, br(A1, B1))) +
            q(-1, 40) * br(A2, br(B1, br(A1, B1))) +
            q(-1, 40) * br(A2, br(A2, br(A1, B1))) +
            q(-1, 40) * br(A2, br(A1, br(A1, B1))),
    };
    t[3] = {
        B2,
        q(-1, 2) * br(A2, B2),
        q(1, 12) * br(A2, br(A2, B2)) + q(-1, 8) * br(B2, br(B2, A2)) +
            q(1, 4) * br(B2, br(A1, B1)),
        q(1, 24) * br(B2, br(B2, br(B2, A2))) +
            q(1, 10) * br(br(A1, B1), br(A2, B2)) +
            q(-1, 40) * br(B2, br(A2, br(A1, B1))) +
            q(-1, 40) * br(B2, br(A1, br(A1, B1))) +
            q(-1, 40) * br(B2, br(B2, br(A1, B1))) +
            q(-1, 40) * br(B2, br(B1, br(A1, B1))),
    };
    return t;
}

} // namespace symexp::testutil
