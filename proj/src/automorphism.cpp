#include "symexp/automorphism.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace symexp {

namespace {

Rational determinant(RatMatrix a) {
    const int n = static_cast<int>(a.size());
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) { std::swap(a[pivot], a[col]); det = -det; }
        det *= a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[col][col];
            for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

} // namespace

FreeAutomorphism FreeAutomorphism::from_images(int genus,
                                               std::vector<SignedWord> images) {
    if (static_cast<int>(images.size()) != 2 * genus)
        throw std::invalid_argument("automorphism needs 2g generator images");
    FreeAutomorphism phi;
    phi.genus = genus;
    phi.h_action.assign(2 * genus, std::vector<Rational>(2 * genus, Rational(0)));
    for (int i = 0; i < 2 * genus; ++i) {
        images[i] = reduce(images[i]);
        for (const auto& l : images[i]) {
            if (l.index < 1 || l.index > 2 * genus)
                throw std::invalid_argument("automorphism image letter out of range");
            phi.h_action[i][l.index - 1] += l.sign;
        }
    }
    phi.images = std::move(images);
    const Rational det = determinant(phi.h_action);
    if (det != 1 && det != -1)
        throw std::invalid_argument("h_action determinant is not +-1");
    return phi;
}

FreeAutomorphism FreeAutomorphism::flip(int genus) {
    std::vector<SignedWord> images(2 * genus);
    for (int i = 1; i <= 2 * genus; ++i)
        images[i - 1] = {{2 * genus + 1 - i, 1}};
    return from_images(genus, std::move(images));
}

FreeAutomorphism FreeAutomorphism::identity(int genus) {
    std::vector<SignedWord> images(2 * genus);
    for (int i = 1; i <= 2 * genus; ++i)
        images[i - 1] = {{i, 1}};
    return from_images(genus, std::move(images));
}

FreeAutomorphism parse_automorphism(int genus, std::istream& in) {
    std::vector<SignedWord> images(2 * genus);
    std::vector<bool> seen(2 * genus, false);
    std::string line;
    while (std::getline(in, line)) {
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("automorphism line missing ':': " + line);
        int idx = std::stoi(line.substr(0, colon));
        if (idx < 1 || idx > 2 * genus)
            throw std::invalid_argument("automorphism generator index out of range");
        images[idx - 1] = parse_signed_word(line.substr(colon + 1));
        seen[idx - 1] = true;
    }
    for (int i = 0; i < 2 * genus; ++i)
        if (!seen[i])
            throw std::invalid_argument("automorphism missing image of generator " +
                                        std::to_string(i + 1));
    return FreeAutomorphism::from_images(genus, std::move(images));
}

SignedWord apply_word(const FreeAutomorphism& phi, const SignedWord& w) {
    SignedWord out;
    for (const auto& l : w) {
        const SignedWord& img = phi.images[l.index - 1];
        if (l.sign > 0)
            out.insert(out.end(), img.begin(), img.end());
        else {
            SignedWord inv = inverse_word(img);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return reduce(out);
}

TensorSeries extend_to_tensor(const FreeAutomorphism& phi, const TensorSeries& t) {
    const int n = 2 * phi.genus;
    TensorSeries r(t.genus(), t.truncation());
    for (const auto& [w, c] : t.terms()) {
        // substitute each letter by its image row and expand the product
        TensorSeries acc(t.genus(), t.truncation());
        acc.add_term(Word{}, c);
        for (char ch : w) {
            const int a = static_cast<unsigned char>(ch);
            TensorSeries img(t.genus(), t.truncation());
            for (int k = 0; k < n; ++k)
                img.add_term(word_of_letter(k + 1), phi.h_action[a - 1][k]);
            acc = ts_mul(acc, img);
        }
        r = ts_add(r, acc);
    }
    return r;
}

BoundaryBehavior boundary_behavior(const FreeAutomorphism& phi,
                                   const GeneratorSystem& sys) {
    SignedWord image = apply_word(phi, sys.zeta);
    if (image == reduce(sys.zeta)) return BoundaryBehavior::fixes;
    if (image == reduce(inverse_word(sys.zeta))) return BoundaryBehavior::inverts;
    return BoundaryBehavior::neither;
}

GeneratorSystem image_system(const FreeAutomorphism& phi, const GeneratorSystem& sys) {
    const BoundaryBehavior b = boundary_behavior(phi, sys);
    if (b == BoundaryBehavior::neither)
        throw std::invalid_argument("automorphism neither fixes nor inverts zeta");
    GeneratorSystem out;
    out.genus = sys.genus;
    for (int i = 0; i < 2 * sys.genus; ++i)
        out.labels.push_back("phi(" + sys.labels[i] + ")");
    // Row i = class of t_i = phi(s_i).
    out.class_matrix.reserve(2 * sys.genus);
    for (int i = 0; i < 2 * sys.genus; ++i)
        out.class_matrix.push_back(abelianize(phi.images[i], sys));
    // The same abstract letter sequence: in the new alphabet it represents
    // zeta (fixes) or zeta^{-1} (inverts); f_map of it picks up the sign.
    out.zeta = sys.zeta;
    return out;
}

NaturalityReport naturality_check(const FreeAutomorphism& phi,
                                  const GeneratorSystem& sys, int N) {
    NaturalityReport rep{boundary_behavior(phi, sys), true, 0, 0};
    if (rep.behavior == BoundaryBehavior::neither) {
        rep.ok = false;
        return rep;
    }
    Expansion base = compute_expansion(sys, N);
    Expansion image = compute_expansion(image_system(phi, sys), N);
    for (int j = 1; j <= N && rep.ok; ++j)
        for (int i = 1; i <= 2 * sys.genus; ++i) {
            if (image.ell[i - 1][j - 1] !=
                extend_to_tensor(phi, base.ell[i - 1][j - 1])) {
                rep.ok = false;
                rep.first_failing_degree = j;
                rep.first_failing_generator = i;
                break;
            }
        }
    return rep;
}

NaturalityReport symmetry_check(int g, int N) {
    FreeAutomorphism t = FreeAutomorphism::flip(g);
    NaturalityReport rep{BoundaryBehavior::inverts, true, 0, 0};
    Expansion e = compute_expansion(GeneratorSystem::standard(g), N);
    for (int j = 1; j <= N && rep.ok; ++j)
        for (int i = 1; i <= 2 * g; ++i) {
            if (e.ell[2 * g - i][j - 1] !=
                extend_to_tensor(t, e.ell[i - 1][j - 1])) {
                rep.ok = false;
                rep.first_failing_degree = j;
                rep.first_failing_generator = i;
                break;
            }
        }
    return rep;
}

} // namespace symexp
