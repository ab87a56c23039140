#include "symexp/surface.hpp"

#include <sstream>
#include <stdexcept>

namespace symexp {

SignedWord reduce(const SignedWord& w) {
    SignedWord out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

SignedWord inverse_word(const SignedWord& w) {
    SignedWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->index, -it->sign});
    return out;
}

bool is_reduced(const SignedWord& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i].index == w[i - 1].index && w[i].sign == -w[i - 1].sign)
            return false;
    return true;
}

SignedWord parse_signed_word(const std::string& text) {
    SignedWord out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // trim spaces
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        int v = std::stoi(tok.substr(a, b - a + 1));
        if (v == 0) throw std::invalid_argument("signed word: letter index 0");
        out.push_back({std::abs(v), v > 0 ? 1 : -1});
    }
    return out;
}

std::string format_signed_word(const SignedWord& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i].sign * w[i].index);
    }
    return s;
}

RatMatrix identity_matrix(int n) {
    RatMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    const int n = static_cast<int>(a.size());
    RatMatrix r(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j)
                r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

RatMatrix mat_inverse(const RatMatrix& m) {
    const int n = static_cast<int>(m.size());
    RatMatrix a = m;
    RatMatrix inv = identity_matrix(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = a[col][col];
        for (int j = 0; j < n; ++j) { a[col][j] /= p; inv[col][j] /= p; }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

SignedWord standard_zeta(int g) {
    SignedWord z;
    for (int i = 1; i <= g; ++i) {
        const int a = 2 * i - 1, b = 2 * i;
        z.push_back({a, 1});
        z.push_back({b, 1});
        z.push_back({a, -1});
        z.push_back({b, -1});
    }
    return z;
}

GeneratorSystem GeneratorSystem::standard(int g) {
    GeneratorSystem sys;
    sys.genus = g;
    for (int i = 1; i <= g; ++i) {
        sys.labels.push_back("a" + std::to_string(i));
        sys.labels.push_back("b" + std::to_string(i));
    }
    sys.class_matrix = identity_matrix(2 * g);
    sys.zeta = standard_zeta(g);
    return sys;
}

bool GeneratorSystem::is_standard() const {
    return class_matrix == identity_matrix(2 * genus) && zeta == standard_zeta(genus);
}

TensorSeries GeneratorSystem::generator_class(int i, int truncation) const {
    TensorSeries t(genus, truncation);
    for (int k = 0; k < 2 * genus; ++k)
        t.add_term(word_of_letter(k + 1), class_matrix[i - 1][k]);
    return t;
}

std::vector<Rational> abelianize(const SignedWord& w, const GeneratorSystem& sys) {
    std::vector<Rational> v(2 * sys.genus, Rational(0));
    for (const auto& l : w)
        for (int k = 0; k < 2 * sys.genus; ++k)
            v[k] += Rational(l.sign) * sys.class_matrix[l.index - 1][k];
    return v;
}

TensorSeries f_map(const SignedWord& w, const GeneratorSystem& sys) {
    for (const auto& c : abelianize(w, sys))
        if (c != 0)
            throw std::invalid_argument("f_map: word is not in the commutator subgroup");
    const Rational half(1, 2);
    TensorSeries r(sys.genus, 2);
    std::vector<TensorSeries> cls;
    cls.reserve(w.size());
    for (const auto& l : w) {
        TensorSeries t = sys.generator_class(l.index, 2);
        cls.push_back(l.sign > 0 ? t : ts_neg(t));
    }
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i + 1; j < cls.size(); ++j)
            r = ts_add(r, ts_scale(half, ts_bracket(cls[i], cls[j])));
    return r;
}

SurfaceMatrices surface_matrices(const GeneratorSystem& sys) {
    const int n = 2 * sys.genus;
    TensorSeries omega = f_map(sys.zeta, sys);

    // Coefficient matrix F of omega in the reference basis: omega =
    // sum F_ab e_a (x) e_b.  With S_i = sum_a M_ia e_a and the target
    // decomposition omega = sum S_i (x) Z_i, Z_i = sum c_ik S_k, we get
    // F = M^T C M, so C = (M^T)^{-1} F M^{-1}.
    RatMatrix F(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [w, coef] : omega.terms()) {
        if (word_degree(w) != 2) throw std::logic_error("f_map result not degree 2");
        F[static_cast<unsigned char>(w[0]) - 1][static_cast<unsigned char>(w[1]) - 1] = coef;
    }

    RatMatrix Minv;
    try {
        Minv = mat_inverse(sys.class_matrix);
    } catch (const std::domain_error&) {
        throw std::domain_error("class matrix is singular");
    }
    RatMatrix MinvT(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) MinvT[i][j] = Minv[j][i];

    RatMatrix c = mat_mul(mat_mul(MinvT, F), Minv);
    for (const auto& row : c)
        for (const auto& e : row)
            if (e.get_den() != 1)
                throw std::domain_error("c matrix is not integral");

    RatMatrix d;
    try {
        d = mat_inverse(c);
    } catch (const std::domain_error&) {
        throw std::domain_error("degenerate boundary word");
    }
    return {std::move(omega), std::move(c), std::move(d)};
}

} // namespace symexp
