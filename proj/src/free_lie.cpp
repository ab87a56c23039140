#include "symexp/free_lie.hpp"

#include <stdexcept>

namespace symexp {

std::vector<LyndonWord> lyndon_words(int g, int m) {
    if (g < 1 || m < 1) throw std::invalid_argument("lyndon_words: g, m must be >= 1");
    const int k = 2 * g;
    std::vector<LyndonWord> out;
    // Duval: iterate w over Lyndon words of length <= m in lex order.
    std::vector<int> w{1};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == m) {
            Word word(w.begin(), w.end());
            out.push_back(word);
        }
        // extend periodically to length m, then increment the last letter
        const int n = static_cast<int>(w.size());
        w.resize(m);
        for (int i = n; i < m; ++i) w[i] = w[i - n];
        while (!w.empty() && w.back() == k) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

bool is_lyndon(const Word& w) {
    const int n = word_degree(w);
    if (n == 0) return false;
    for (int i = 1; i < n; ++i) {
        Word rot = w.substr(i) + w.substr(0, i);
        if (!(w < rot)) return false;
    }
    return true;
}

std::pair<LyndonWord, LyndonWord> standard_factorization(const LyndonWord& w) {
    const int n = word_degree(w);
    if (n < 2) throw std::invalid_argument("standard_factorization: degree < 2");
    // v = the longest proper Lyndon suffix; equivalently the lexicographically
    // smallest proper suffix.
    int best = 1;
    for (int i = 2; i < n; ++i)
        if (w.compare(i, Word::npos, w, best, Word::npos) < 0) best = i;
    return {w.substr(0, best), w.substr(best)};
}

TensorSeries lyndon_bracket(int g, const LyndonWord& w, int truncation) {
    if (word_degree(w) == 0)
        throw std::invalid_argument("lyndon_bracket: empty word");
    if (word_degree(w) == 1)
        return TensorSeries::letter(g, truncation, static_cast<unsigned char>(w[0]));
    auto [u, v] = standard_factorization(w);
    return ts_bracket(lyndon_bracket(g, u, truncation), lyndon_bracket(g, v, truncation));
}

namespace {

// Right-nested bracketing of a single monomial, built from the right:
// [Y1,[...,[Y_{m-1},Ym]...]].
TensorSeries phi_word(int g, int truncation, const Word& w) {
    const int m = word_degree(w);
    TensorSeries acc = TensorSeries::letter(g, truncation, static_cast<unsigned char>(w[m - 1]));
    for (int i = m - 2; i >= 0; --i) {
        TensorSeries y = TensorSeries::letter(g, truncation, static_cast<unsigned char>(w[i]));
        acc = ts_bracket(y, acc);
    }
    return acc;
}

} // namespace

TensorSeries dynkin_phi(const TensorSeries& t) {
    if (t.constant_term() != 0)
        throw std::invalid_argument("dynkin_phi: nonzero constant term");
    TensorSeries r(t.genus(), t.truncation());
    for (const auto& [w, c] : t.terms())
        r = ts_add(r, ts_scale(c, phi_word(t.genus(), t.truncation(), w)));
    return r;
}

bool is_lie(const TensorSeries& t, int m) {
    if (m < 1) throw std::invalid_argument("is_lie: degree must be >= 1");
    for (const auto& [w, c] : t.terms())
        if (word_degree(w) != m)
            throw std::invalid_argument("is_lie: input not homogeneous of degree " +
                                        std::to_string(m));
    return dynkin_phi(t) == ts_scale(Rational(m), t);
}

std::map<LyndonWord, Rational> to_lyndon(const TensorSeries& t, int m) {
    if (!is_lie(t, m))
        throw std::invalid_argument("to_lyndon: input is not a Lie element");
    std::map<LyndonWord, Rational> coeffs;
    TensorSeries rest = t;
    while (!rest.is_zero()) {
        const auto& [w, c] = *rest.terms().begin();
        // The smallest word in the support of a Lie element is Lyndon, and its
        // bracketed Lyndon word hits it with coefficient 1.
        if (!is_lyndon(w))
            throw std::logic_error("to_lyndon: leading word is not Lyndon");
        coeffs[w] = c;
        rest = ts_sub(rest, ts_scale(c, lyndon_bracket(t.genus(), w, t.truncation())));
    }
    return coeffs;
}

TensorSeries from_lyndon(int g, int truncation,
                         const std::map<LyndonWord, Rational>& coeffs) {
    TensorSeries r(g, truncation);
    for (const auto& [w, c] : coeffs)
        r = ts_add(r, ts_scale(c, lyndon_bracket(g, w, truncation)));
    return r;
}

std::vector<std::pair<int, TensorSeries>>
lie_right_inverse_split(const TensorSeries& u, int m_plus_1) {
    if (!is_lie(u, m_plus_1))
        throw std::invalid_argument("lie_right_inverse_split: input is not a Lie element");
    std::vector<std::pair<int, TensorSeries>> out;
    for (int i = 1; i <= 2 * u.genus(); ++i) {
        TensorSeries slice(u.genus(), u.truncation());
        for (const auto& [w, c] : u.terms())
            if (static_cast<unsigned char>(w[0]) == i)
                slice.add_term(w.substr(1), c);
        out.emplace_back(i, std::move(slice));
    }
    return out;
}

LieElement LieElement::from_tensor(const TensorSeries& t, int m) {
    return LieElement{m, t, to_lyndon(t, m)};
}

} // namespace symexp
