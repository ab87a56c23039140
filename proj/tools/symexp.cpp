#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symexp/automorphism.hpp"
#include "symexp/document.hpp"
#include "symexp/expansion.hpp"

// Exit codes: 0 ok, 1 usage/parse, 2 degenerate input, 3 verification
// failure, 4 unsupported automorphism.
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitVerifyFail = 3;
constexpr int kExitBadAutomorphism = 4;

using namespace symexp;

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << content;
    }
}

GeneratorSystem make_system(int genus, const std::string& zeta_text) {
    GeneratorSystem sys = GeneratorSystem::standard(genus);
    if (!zeta_text.empty()) {
        SignedWord z = parse_signed_word(zeta_text);
        if (!is_reduced(z))
            throw std::invalid_argument("zeta word is not reduced");
        sys.zeta = z;
    }
    return sys;
}

int cmd_expand(int genus, int degree, const std::string& zeta_text,
               const std::string& format, const std::string& out_path) {
    if (genus < 1 || degree < 1) {
        std::cerr << "error: genus and degree must be >= 1\n";
        return kExitUsage;
    }
    GeneratorSystem sys;
    try {
        sys = make_system(genus, zeta_text);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    Expansion e{};
    try {
        e = compute_expansion(sys, degree);
    } catch (const std::exception& err) {
        // singular c matrix, non-commutator zeta, failed congruence
        std::cerr << "error: " << err.what() << "\n";
        return kExitDegenerate;
    }
    std::string content;
    if (format == "json")
        content = expansion_to_json(e).dump(2) + "\n";
    else if (format == "text")
        content = expansion_to_text(e);
    else if (format == "latex")
        content = expansion_to_latex(e);
    else {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }
    write_output(content, out_path);
    return kExitOk;
}

int cmd_verify(const std::string& input_path, int degree) {
    nlohmann::json doc;
    Expansion e{};
    try {
        std::ifstream f(input_path);
        if (!f) throw std::runtime_error("cannot open input file: " + input_path);
        f >> doc;
        e = expansion_from_json(doc);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    if (degree > 0) {
        if (degree > e.degree) {
            std::cerr << "error: document only reaches degree " << e.degree << "\n";
            return kExitUsage;
        }
        e = e.truncated(degree);
    }
    VerifyReport rep = verify_symplectic(e);
    std::cout << "magnus condition:  " << (rep.magnus_ok ? "pass" : "FAIL") << "\n"
              << "group-like:        " << (rep.group_like_ok ? "pass" : "FAIL") << "\n"
              << "boundary condition:" << (rep.boundary_ok ? " pass" : " FAIL") << "\n";
    if (!rep.all_ok()) {
        std::cout << "first failing degree: " << rep.first_failing_degree << "\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}

int cmd_naturality(int genus, int degree, const std::string& auto_path,
                   const std::string& zeta_text) {
    GeneratorSystem sys;
    FreeAutomorphism phi;
    try {
        sys = make_system(genus, zeta_text);
        std::ifstream f(auto_path);
        if (!f) throw std::runtime_error("cannot open automorphism file: " + auto_path);
        phi = parse_automorphism(genus, f);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        // non-unimodular images cannot come from an automorphism
        return std::string(err.what()).find("determinant") != std::string::npos
                   ? kExitBadAutomorphism
                   : kExitUsage;
    }
    NaturalityReport rep{};
    try {
        rep = naturality_check(phi, sys, degree);
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitDegenerate;
    }
    switch (rep.behavior) {
    case BoundaryBehavior::fixes:   std::cout << "boundary: fixed\n"; break;
    case BoundaryBehavior::inverts: std::cout << "boundary: inverted\n"; break;
    case BoundaryBehavior::neither:
        std::cout << "boundary: neither fixed nor inverted\n";
        return kExitBadAutomorphism;
    }
    if (rep.ok) {
        std::cout << "naturality holds to degree " << degree << "\n";
        return kExitOk;
    }
    std::cout << "naturality FAILS at degree " << rep.first_failing_degree
              << ", generator " << rep.first_failing_generator << "\n";
    return kExitVerifyFail;
}

int cmd_bch(int degree) {
    // BCH series of two formal degree-1 generators, printed in Lyndon
    // coordinates with the genus-1 letters renamed u, v.
    TensorSeries u = TensorSeries::letter(1, degree, 1);
    TensorSeries v = TensorSeries::letter(1, degree, 2);
    TensorSeries series = bch(u, v);
    bool first = true;
    for (int m = 1; m <= degree; ++m) {
        auto coeffs = to_lyndon(series.degree_part(m), m);
        for (const auto& [w, c] : coeffs) {
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            std::cout << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            if (mag != 1) std::cout << rational_to_string(mag) << "*";
            // rename the genus-1 letters A1 -> u, B1 -> v
            std::string body = lyndon_bracket_string(w);
            std::string renamed;
            for (size_t i = 0; i < body.size(); ++i) {
                if (body.compare(i, 2, "A1") == 0) { renamed += 'u'; ++i; }
                else if (body.compare(i, 2, "B1") == 0) { renamed += 'v'; ++i; }
                else renamed += body[i];
            }
            std::cout << renamed;
        }
    }
    std::cout << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symplectic Magnus expansions of surface groups"};
    app.require_subcommand(1);

    int genus = 1, degree = 1;
    std::string zeta_text, format = "json", out_path, input_path, auto_path;

    auto* expand = app.add_subcommand("expand", "Compute a symplectic expansion");
    expand->add_option("--genus", genus, "Surface genus")->required();
    expand->add_option("--degree", degree, "Target degree")->required();
    expand->add_option("--zeta", zeta_text, "Boundary word (default: standard)");
    expand->add_option("--format", format, "json|text|latex");
    expand->add_option("--out", out_path, "Output file (default: stdout)");

    int verify_degree = 0;
    auto* verify = app.add_subcommand("verify", "Verify a stored expansion");
    verify->add_option("input", input_path, "Expansion document (JSON)")->required();
    verify->add_option("--degree", verify_degree, "Re-verify truncated to this degree");

    auto* naturality = app.add_subcommand("naturality", "Check naturality under an automorphism");
    naturality->add_option("--genus", genus, "Surface genus")->required();
    naturality->add_option("--degree", degree, "Check depth")->required();
    naturality->add_option("--auto", auto_path, "Automorphism file")->required();
    naturality->add_option("--zeta", zeta_text, "Boundary word (default: standard)");

    auto* bch_cmd = app.add_subcommand("bch", "Print the BCH series of two generators");
    bch_cmd->add_option("--degree", degree, "Truncation degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
    }

    try {
        if (expand->parsed()) return cmd_expand(genus, degree, zeta_text, format, out_path);
        if (verify->parsed()) return cmd_verify(input_path, verify_degree);
        if (naturality->parsed()) return cmd_naturality(genus, degree, auto_path, zeta_text);
        if (bch_cmd->parsed()) return cmd_bch(degree);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
