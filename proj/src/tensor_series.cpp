#include "symexp/tensor_series.hpp"

#include <stdexcept>

namespace symexp {

namespace {

void require_same_genus(const TensorSeries& a, const TensorSeries& b) {
    if (a.genus() != b.genus())
        throw std::invalid_argument("genus mismatch: " + std::to_string(a.genus()) +
                                    " vs " + std::to_string(b.genus()));
}

} // namespace

TensorSeries::TensorSeries(int genus, int truncation)
    : genus_(genus), truncation_(truncation) {
    if (genus < 1) throw std::invalid_argument("genus must be >= 1");
    if (truncation < 0) throw std::invalid_argument("truncation must be >= 0");
}

Rational TensorSeries::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorSeries::add_term(const Word& w, const Rational& c) {
    if (word_degree(w) > truncation_) return;
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorSeries TensorSeries::truncated(int new_truncation) const {
    TensorSeries r(genus_, new_truncation);
    for (const auto& [w, c] : terms_)
        r.add_term(w, c);
    return r;
}

TensorSeries TensorSeries::degree_part(int m) const {
    if (m < 0 || m > truncation_)
        throw std::out_of_range("degree_part: degree " + std::to_string(m) +
                                " outside truncation " + std::to_string(truncation_));
    TensorSeries r(genus_, truncation_);
    for (const auto& [w, c] : terms_)
        if (word_degree(w) == m) r.add_term(w, c);
    return r;
}

int TensorSeries::min_degree() const {
    int m = truncation_ + 1;
    for (const auto& [w, c] : terms_)
        m = std::min(m, word_degree(w));
    return m;
}

bool TensorSeries::operator==(const TensorSeries& o) const {
    return genus_ == o.genus_ && terms_ == o.terms_;
}

TensorSeries TensorSeries::unit(int genus, int truncation) {
    TensorSeries r(genus, truncation);
    r.add_term(Word{}, 1);
    return r;
}

TensorSeries TensorSeries::letter(int genus, int truncation, int index) {
    if (index < 1 || index > 2 * genus)
        throw std::out_of_range("letter index " + std::to_string(index) +
                                " outside 1..2g");
    TensorSeries r(genus, truncation);
    r.add_term(word_of_letter(index), 1);
    return r;
}

TensorSeries ts_add(const TensorSeries& a, const TensorSeries& b) {
    require_same_genus(a, b);
    TensorSeries r(a.genus(), std::min(a.truncation(), b.truncation()));
    for (const auto& [w, c] : a.terms()) r.add_term(w, c);
    for (const auto& [w, c] : b.terms()) r.add_term(w, c);
    return r;
}

TensorSeries ts_sub(const TensorSeries& a, const TensorSeries& b) {
    require_same_genus(a, b);
    TensorSeries r(a.genus(), std::min(a.truncation(), b.truncation()));
    for (const auto& [w, c] : a.terms()) r.add_term(w, c);
    for (const auto& [w, c] : b.terms()) r.add_term(w, -c);
    return r;
}

TensorSeries ts_neg(const TensorSeries& a) {
    TensorSeries r(a.genus(), a.truncation());
    for (const auto& [w, c] : a.terms()) r.add_term(w, -c);
    return r;
}

TensorSeries ts_scale(const Rational& c, const TensorSeries& a) {
    TensorSeries r(a.genus(), a.truncation());
    if (c == 0) return r;
    for (const auto& [w, k] : a.terms()) r.add_term(w, c * k);
    return r;
}

TensorSeries ts_mul(const TensorSeries& a, const TensorSeries& b) {
    require_same_genus(a, b);
    const int trunc = std::min(a.truncation(), b.truncation());
    TensorSeries r(a.genus(), trunc);
    for (const auto& [wa, ca] : a.terms()) {
        const int da = word_degree(wa);
        if (da > trunc) continue;
        for (const auto& [wb, cb] : b.terms()) {
            if (da + word_degree(wb) > trunc) continue;
            r.add_term(wa + wb, ca * cb);
        }
    }
    return r;
}

TensorSeries ts_bracket(const TensorSeries& u, const TensorSeries& v) {
    return ts_sub(ts_mul(u, v), ts_mul(v, u));
}

TensorSeries ts_exp(const TensorSeries& u) {
    if (u.constant_term() != 0)
        throw std::invalid_argument("ts_exp: nonzero constant term");
    const int trunc = u.truncation();
    TensorSeries r = TensorSeries::unit(u.genus(), trunc);
    TensorSeries power = TensorSeries::unit(u.genus(), trunc);
    Rational factorial(1);
    for (int n = 1; n <= trunc; ++n) {
        power = ts_mul(power, u);
        if (power.is_zero()) break;
        factorial *= n;
        r = ts_add(r, ts_scale(Rational(1) / factorial, power));
    }
    return r;
}

TensorSeries ts_log(const TensorSeries& a) {
    if (a.constant_term() != 1)
        throw std::invalid_argument("ts_log: constant term is not 1");
    const int trunc = a.truncation();
    TensorSeries x = ts_sub(a, TensorSeries::unit(a.genus(), trunc));
    TensorSeries r(a.genus(), trunc);
    TensorSeries power = TensorSeries::unit(a.genus(), trunc);
    for (int n = 1; n <= trunc; ++n) {
        power = ts_mul(power, x);
        if (power.is_zero()) break;
        Rational c(n % 2 == 1 ? 1 : -1, n);
        c.canonicalize();
        r = ts_add(r, ts_scale(c, power));
    }
    return r;
}

TensorSeries bch(const TensorSeries& u, const TensorSeries& v) {
    if (u.constant_term() != 0 || v.constant_term() != 0)
        throw std::invalid_argument("bch: nonzero constant term");
    return ts_log(ts_mul(ts_exp(u), ts_exp(v)));
}

} // namespace symexp
