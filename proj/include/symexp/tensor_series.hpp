#pragma once

#include <map>
#include <string>
#include <vector>

#include "symexp/rational.hpp"

namespace symexp {

// A basis monomial of H^{otimes m}: the sequence of letter indices, one byte
// per letter (1..2g).  The empty word is the unit.  Byte order is index
// order, so lexicographic comparison of keys is lexicographic comparison of
// letter sequences.
using Word = std::string;

inline Word word_of_letter(int index) { return Word(1, static_cast<char>(index)); }

inline int word_degree(const Word& w) { return static_cast<int>(w.size()); }

// Sparse, degree-truncated element of the completed tensor algebra over H.
// Invariants: no stored zero coefficients, no stored word of degree greater
// than `truncation`.  Equality of term maps is mathematical equality.
class TensorSeries {
public:
    TensorSeries(int genus, int truncation);

    int genus() const { return genus_; }
    int truncation() const { return truncation_; }
    const std::map<Word, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Word& w) const;
    Rational constant_term() const { return coeff(Word{}); }

    // Adds c to the coefficient of w; drops the term if it cancels, and
    // ignores words beyond the truncation.
    void add_term(const Word& w, const Rational& c);

    TensorSeries truncated(int new_truncation) const;
    TensorSeries degree_part(int m) const;
    // Smallest degree with a nonzero term, or truncation+1 if zero.
    int min_degree() const;

    bool operator==(const TensorSeries& o) const;
    bool operator!=(const TensorSeries& o) const { return !(*this == o); }

    static TensorSeries zero(int genus, int truncation) { return {genus, truncation}; }
    static TensorSeries unit(int genus, int truncation);
    static TensorSeries letter(int genus, int truncation, int index);

private:
    int genus_;
    int truncation_;
    std::map<Word, Rational> terms_;
};

TensorSeries ts_add(const TensorSeries& a, const TensorSeries& b);
TensorSeries ts_sub(const TensorSeries& a, const TensorSeries& b);
TensorSeries ts_neg(const TensorSeries& a);
TensorSeries ts_scale(const Rational& c, const TensorSeries& a);
TensorSeries ts_mul(const TensorSeries& a, const TensorSeries& b);
// [u,v] = uv - vu
TensorSeries ts_bracket(const TensorSeries& u, const TensorSeries& v);
// exp(u) = sum u^n/n!; requires zero constant term.
TensorSeries ts_exp(const TensorSeries& u);
// log(a) = sum ((-1)^{n-1}/n)(a-1)^n; requires constant term 1.
TensorSeries ts_log(const TensorSeries& a);
// Baker-Campbell-Hausdorff star product: log(exp(u) exp(v)).
TensorSeries bch(const TensorSeries& u, const TensorSeries& v);

inline TensorSeries operator+(const TensorSeries& a, const TensorSeries& b) { return ts_add(a, b); }
inline TensorSeries operator-(const TensorSeries& a, const TensorSeries& b) { return ts_sub(a, b); }
inline TensorSeries operator-(const TensorSeries& a) { return ts_neg(a); }
inline TensorSeries operator*(const TensorSeries& a, const TensorSeries& b) { return ts_mul(a, b); }
inline TensorSeries operator*(const Rational& c, const TensorSeries& a) { return ts_scale(c, a); }

} // namespace symexp
