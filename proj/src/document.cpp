#include "symexp/document.hpp"

#include <sstream>
#include <stdexcept>

namespace symexp {

namespace {

std::string word_key(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(static_cast<unsigned char>(w[i]));
    }
    return s;
}

Word word_from_key(const std::string& key) {
    Word w;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ','))
        w += static_cast<char>(std::stoi(tok));
    return w;
}

} // namespace

std::string letter_name(int index) {
    const int pair = (index + 1) / 2;
    return (index % 2 == 1 ? "A" : "B") + std::to_string(pair);
}

std::string lyndon_bracket_string(const LyndonWord& w) {
    if (word_degree(w) == 1) return letter_name(static_cast<unsigned char>(w[0]));
    auto [u, v] = standard_factorization(w);
    return "[" + lyndon_bracket_string(u) + "," + lyndon_bracket_string(v) + "]";
}

nlohmann::json expansion_to_json(const Expansion& e) {
    nlohmann::json doc;
    doc["genus"] = e.system.genus;
    doc["degree"] = e.degree;
    doc["zeta"] = format_signed_word(e.system.zeta);
    nlohmann::json gens = nlohmann::json::array();
    for (int i = 1; i <= 2 * e.system.genus; ++i) {
        nlohmann::json gen;
        gen["label"] = e.system.labels[i - 1];
        nlohmann::json hom = nlohmann::json::array();
        for (const auto& c : e.system.class_matrix[i - 1]) {
            if (c.get_den() != 1)
                throw std::invalid_argument("non-integer homology class");
            hom.push_back(std::stoll(c.get_num().get_str()));
        }
        gen["homology"] = hom;
        nlohmann::json parts = nlohmann::json::array();
        for (int j = 1; j <= e.degree; ++j) {
            const TensorSeries& part = e.ell[i - 1][j - 1];
            nlohmann::json entry;
            entry["degree"] = j;
            nlohmann::json lyn = nlohmann::json::object();
            for (const auto& [w, c] : to_lyndon(part, j))
                lyn[word_key(w)] = rational_to_string(c);
            entry["lyndon"] = lyn;
            parts.push_back(entry);
        }
        gen["ell"] = parts;
        gens.push_back(gen);
    }
    doc["generators"] = gens;
    return doc;
}

Expansion expansion_from_json(const nlohmann::json& doc) {
    Expansion e;
    e.system.genus = doc.at("genus").get<int>();
    e.degree = doc.at("degree").get<int>();
    e.system.zeta = parse_signed_word(doc.at("zeta").get<std::string>());
    const auto& gens = doc.at("generators");
    if (static_cast<int>(gens.size()) != 2 * e.system.genus)
        throw std::invalid_argument("document: wrong number of generators");
    for (const auto& gen : gens) {
        e.system.labels.push_back(gen.at("label").get<std::string>());
        std::vector<Rational> row;
        for (const auto& v : gen.at("homology"))
            row.emplace_back(v.get<long>());
        if (static_cast<int>(row.size()) != 2 * e.system.genus)
            throw std::invalid_argument("document: wrong homology vector length");
        e.system.class_matrix.push_back(std::move(row));
        std::vector<TensorSeries> parts;
        for (const auto& entry : gen.at("ell")) {
            const int j = entry.at("degree").get<int>();
            if (j != static_cast<int>(parts.size()) + 1)
                throw std::invalid_argument("document: ell degrees out of order");
            std::map<LyndonWord, Rational> coeffs;
            for (const auto& [key, val] : entry.at("lyndon").items()) {
                Word w = word_from_key(key);
                if (!is_lyndon(w))
                    throw std::invalid_argument("document: key is not a Lyndon word: " + key);
                coeffs[w] = rational_from_string(val.get<std::string>());
            }
            parts.push_back(from_lyndon(e.system.genus, j, coeffs));
        }
        if (static_cast<int>(parts.size()) != e.degree)
            throw std::invalid_argument("document: missing ell degrees");
        e.ell.push_back(std::move(parts));
    }
    return e;
}

namespace {

std::string render_terms(const Expansion& e, int i, bool latex) {
    std::ostringstream out;
    bool first = true;
    for (int j = 1; j <= e.degree; ++j) {
        for (const auto& [w, c] : to_lyndon(e.ell[i - 1][j - 1], j)) {
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (first)
                out << (neg ? "-" : "");
            else
                out << (neg ? " - " : " + ");
            first = false;
            std::string body = lyndon_bracket_string(w);
            if (latex) {
                if (mag.get_den() != 1)
                    out << "\\frac{" << mag.get_num().get_str() << "}{"
                        << mag.get_den().get_str() << "}" << body;
                else if (mag != 1)
                    out << mag.get_num().get_str() << body;
                else
                    out << body;
            } else {
                if (mag != 1)
                    out << rational_to_string(mag) << "*" << body;
                else
                    out << body;
            }
        }
    }
    if (first) out << "0";
    return out.str();
}

} // namespace

std::string expansion_to_text(const Expansion& e) {
    std::ostringstream out;
    for (int i = 1; i <= 2 * e.system.genus; ++i)
        out << "l(" << e.system.labels[i - 1] << ") = "
            << render_terms(e, i, false) << "\n";
    return out.str();
}

std::string expansion_to_latex(const Expansion& e) {
    std::ostringstream out;
    out << "\\begin{align*}\n";
    for (int i = 1; i <= 2 * e.system.genus; ++i)
        out << "\\ell(" << e.system.labels[i - 1] << ") &= "
            << render_terms(e, i, true) << " \\\\\n";
    out << "\\end{align*}\n";
    return out.str();
}

} // namespace symexp
