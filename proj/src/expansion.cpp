#include "symexp/expansion.hpp"

#include <stdexcept>

namespace symexp {

PartialExpansion PartialExpansion::initial(const GeneratorSystem& sys) {
    PartialExpansion pe{sys, surface_matrices(sys), 1, {}};
    pe.ell.resize(2 * sys.genus);
    for (int i = 1; i <= 2 * sys.genus; ++i)
        pe.ell[i - 1].push_back(sys.generator_class(i, 1));
    return pe;
}

TensorSeries PartialExpansion::ell_bar(int i, int sign, int truncation) const {
    TensorSeries t(system.genus, truncation);
    for (const auto& part : ell[i - 1])
        for (const auto& [w, c] : part.terms())
            t.add_term(w, sign > 0 ? c : -c);
    return t;
}

TensorSeries theta_bar(const PartialExpansion& pe, SignedLetter letter, int truncation) {
    return ts_exp(pe.ell_bar(letter.index, letter.sign, truncation));
}

TensorSeries boundary_product(const PartialExpansion& pe, int truncation) {
    TensorSeries r = TensorSeries::unit(pe.system.genus, truncation);
    for (const auto& l : pe.system.zeta)
        r = ts_mul(r, theta_bar(pe, l, truncation));
    return r;
}

TensorSeries boundary_star(const PartialExpansion& pe, int truncation) {
    const auto& z = pe.system.zeta;
    if (z.empty()) return TensorSeries::zero(pe.system.genus, truncation);
    TensorSeries r = pe.ell_bar(z[0].index, z[0].sign, truncation);
    for (size_t k = 1; k < z.size(); ++k)
        r = bch(r, pe.ell_bar(z[k].index, z[k].sign, truncation));
    return r;
}

TensorSeries defect(const PartialExpansion& pe) {
    const int target = pe.max_degree + 2; // degree of V
    TensorSeries omega = pe.matrices.omega.truncated(target);
    TensorSeries diff = ts_sub(boundary_product(pe, target), ts_exp(omega));
    // Congruence (3.1) at the current degree: everything below the defect
    // degree must already cancel.
    if (diff.min_degree() < target)
        throw std::runtime_error("congruence (3.1) failed at degree " +
                                 std::to_string(diff.min_degree()));
    TensorSeries v = diff.degree_part(target);
    if (!is_lie(v, target))
        throw std::runtime_error("internal consistency: defect of degree " +
                                 std::to_string(target) + " is not a Lie element");
    return v;
}

namespace {

// Slices V = sum_i S_i (x) V^{S_i} with respect to the generator classes.
// In the reference basis V = sum_a e_a (x) V_a, and S_i = sum_a M_ia e_a
// gives V^{S_i} = sum_a (M^{-1})_{ai} V_a.
std::vector<TensorSeries> slice_by_generator_class(const TensorSeries& v,
                                                   const GeneratorSystem& sys) {
    const int n = 2 * sys.genus;
    std::vector<TensorSeries> by_ref_letter(
        n, TensorSeries(sys.genus, v.truncation() - 1));
    for (const auto& [w, c] : v.terms())
        by_ref_letter[static_cast<unsigned char>(w[0]) - 1].add_term(w.substr(1), c);

    RatMatrix minv = mat_inverse(sys.class_matrix);
    std::vector<TensorSeries> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        TensorSeries s(sys.genus, v.truncation() - 1);
        for (int a = 0; a < n; ++a)
            if (minv[a][i] != 0)
                s = ts_add(s, ts_scale(minv[a][i], by_ref_letter[a]));
        out.push_back(std::move(s));
    }
    return out;
}

PartialExpansion extend(const PartialExpansion& pe,
                        std::vector<TensorSeries> new_terms) {
    PartialExpansion next = pe;
    next.max_degree = pe.max_degree + 1;
    for (int i = 0; i < 2 * pe.system.genus; ++i)
        next.ell[i].push_back(std::move(new_terms[i]));
    return next;
}

} // namespace

PartialExpansion refine_step(const PartialExpansion& pe) {
    const int n = pe.max_degree + 1; // degree being added
    const int g2 = 2 * pe.system.genus;
    TensorSeries v = defect(pe); // degree n+1

    std::vector<TensorSeries> slices = slice_by_generator_class(v, pe.system);
    Rational coeff(-1, n + 1);
    coeff.canonicalize();
    std::vector<TensorSeries> w(g2, TensorSeries(pe.system.genus, n));
    for (int i = 0; i < g2; ++i)
        w[i] = ts_scale(coeff, dynkin_phi(slices[i]).truncated(n));

    std::vector<TensorSeries> ell_n;
    ell_n.reserve(g2);
    for (int i = 0; i < g2; ++i) {
        TensorSeries li(pe.system.genus, n);
        for (int k = 0; k < g2; ++k)
            if (pe.matrices.d[i][k] != 0)
                li = ts_add(li, ts_scale(pe.matrices.d[i][k], w[k]));
        ell_n.push_back(std::move(li));
    }
    return extend(pe, std::move(ell_n));
}

TensorSeries commutator_g_factor(const TensorSeries& x, const TensorSeries& y) {
    const int trunc = std::min(x.truncation(), y.truncation());
    if (x.constant_term() != 0 || y.constant_term() != 0)
        throw std::invalid_argument("commutator_g_factor: nonzero constant term");
    TensorSeries r = TensorSeries::unit(x.genus(), trunc);
    TensorSeries base = ts_bracket(x, y); // degree >= 2
    TensorSeries xi = TensorSeries::unit(x.genus(), trunc);
    for (int i = 0; ; ++i) {
        if (i > 0) {
            xi = ts_mul(xi, x);
            if (xi.is_zero()) break;
        }
        TensorSeries term = ts_mul(base, xi);
        if (term.is_zero()) break;
        TensorSeries yj = term;
        for (int j = 0; ; ++j) {
            if (j > 0) {
                yj = ts_mul(yj, y);
                if (yj.is_zero()) break;
            }
            r = ts_add(r, (i + j) % 2 == 0 ? yj : ts_neg(yj));
        }
    }
    return r;
}

PartialExpansion symplectic_shortcut_step(const PartialExpansion& pe) {
    if (!pe.system.is_standard())
        throw std::invalid_argument("symplectic_shortcut_step: standard system required");
    const int n = pe.max_degree + 1;
    const int target = n + 1;
    const int g = pe.system.genus;

    TensorSeries prod = TensorSeries::unit(g, target);
    TensorSeries one = TensorSeries::unit(g, target);
    for (int i = 1; i <= g; ++i) {
        TensorSeries x = ts_sub(theta_bar(pe, {2 * i - 1, 1}, target), one);
        TensorSeries y = ts_sub(theta_bar(pe, {2 * i, 1}, target), one);
        prod = ts_mul(prod, commutator_g_factor(x, y));
    }
    TensorSeries omega = pe.matrices.omega.truncated(target);
    TensorSeries diff = ts_sub(prod, ts_exp(omega));
    if (diff.min_degree() < target)
        throw std::runtime_error("congruence (3.1) failed at degree " +
                                 std::to_string(diff.min_degree()));
    TensorSeries v = diff.degree_part(target);

    // Identity class matrix: the S_i slices are plain leading-letter slices.
    std::vector<TensorSeries> slices(2 * g, TensorSeries(g, target - 1));
    for (const auto& [w, c] : v.terms())
        slices[static_cast<unsigned char>(w[0]) - 1].add_term(w.substr(1), c);

    Rational coeff(1, n + 1);
    coeff.canonicalize();
    std::vector<TensorSeries> ell_n(2 * g, TensorSeries(g, n));
    for (int i = 1; i <= g; ++i) {
        // alpha_i from the B_i slice, beta_i from minus the A_i slice.
        ell_n[2 * i - 2] = ts_scale(coeff, dynkin_phi(slices[2 * i - 1]).truncated(n));
        ell_n[2 * i - 1] = ts_scale(-coeff, dynkin_phi(slices[2 * i - 2]).truncated(n));
    }
    return extend(pe, std::move(ell_n));
}

TensorSeries Expansion::ell_total(int i, int truncation) const {
    TensorSeries t(system.genus, truncation);
    for (const auto& part : ell[i - 1])
        for (const auto& [w, c] : part.terms())
            t.add_term(w, c);
    return t;
}

TensorSeries Expansion::theta(int i, int truncation) const {
    return ts_exp(ell_total(i, truncation));
}

TensorSeries Expansion::theta_word(const SignedWord& w, int truncation) const {
    TensorSeries r = TensorSeries::unit(system.genus, truncation);
    for (const auto& l : w) {
        TensorSeries e = ell_total(l.index, truncation);
        r = ts_mul(r, ts_exp(l.sign > 0 ? e : ts_neg(e)));
    }
    return r;
}

Expansion Expansion::truncated(int new_degree) const {
    Expansion e;
    e.system = system;
    e.degree = new_degree;
    e.ell.resize(ell.size());
    for (size_t i = 0; i < ell.size(); ++i)
        for (int j = 0; j < new_degree && j < static_cast<int>(ell[i].size()); ++j)
            e.ell[i].push_back(ell[i][j]);
    return e;
}

namespace {

Expansion run_driver(const GeneratorSystem& sys, int N,
                     PartialExpansion (*step)(const PartialExpansion&)) {
    if (N < 1) throw std::invalid_argument("degree must be >= 1");
    PartialExpansion pe = PartialExpansion::initial(sys);
    while (pe.max_degree < N)
        pe = step(pe);
    // Final congruence check at the reached degree; the loop above only
    // checked it for degrees below N.
    TensorSeries omega = pe.matrices.omega.truncated(N + 1);
    TensorSeries diff = ts_sub(boundary_product(pe, N + 1), ts_exp(omega));
    if (!diff.is_zero())
        throw std::runtime_error("congruence (3.1) failed at degree " +
                                 std::to_string(diff.min_degree()));
    Expansion e;
    e.system = sys;
    e.degree = N;
    e.ell = std::move(pe.ell);
    return e;
}

} // namespace

Expansion compute_expansion(const GeneratorSystem& sys, int N) {
    return run_driver(sys, N, refine_step);
}

Expansion compute_expansion_shortcut(const GeneratorSystem& sys, int N) {
    return run_driver(sys, N, symplectic_shortcut_step);
}

VerifyReport verify_symplectic(const Expansion& e) {
    VerifyReport rep;
    const int g2 = 2 * e.system.genus;
    int fail = 0;

    rep.magnus_ok = true;
    for (int i = 1; i <= g2 && rep.magnus_ok; ++i) {
        if (e.ell[i - 1].empty() ||
            e.ell[i - 1][0] != e.system.generator_class(i, 1)) {
            rep.magnus_ok = false;
            fail = 1;
        }
    }

    rep.group_like_ok = true;
    for (int i = 1; i <= g2; ++i)
        for (int j = 1; j <= static_cast<int>(e.ell[i - 1].size()); ++j) {
            const TensorSeries& part = e.ell[i - 1][j - 1];
            if (!part.is_zero() && !is_lie(part, j)) {
                rep.group_like_ok = false;
                if (fail == 0 || j < fail) fail = j;
            }
        }

    TensorSeries omega = f_map(e.system.zeta, e.system).truncated(e.degree + 1);
    TensorSeries diff =
        ts_sub(e.theta_word(e.system.zeta, e.degree + 1), ts_exp(omega));
    rep.boundary_ok = diff.is_zero();
    if (!rep.boundary_ok && (fail == 0 || diff.min_degree() < fail))
        fail = diff.min_degree();

    rep.first_failing_degree = fail;
    return rep;
}

} // namespace symexp
