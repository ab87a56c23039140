#pragma once

#include <string>

#include <json.hpp>

#include "symexp/expansion.hpp"

namespace symexp {

// Canonical persistence of an expansion: Lyndon coordinates per generator
// per degree, rationals as "p/q" strings, Lyndon keys as comma-separated
// letter indices.  Maps are emitted in sorted key order, so identical inputs
// produce byte-identical output.
nlohmann::json expansion_to_json(const Expansion& e);
Expansion expansion_from_json(const nlohmann::json& doc);

// Plain-text bracket notation, e.g. "l(a1) = A1 + 1/2*[A1,B1] + ...".
std::string expansion_to_text(const Expansion& e);

// LaTeX in the nested-bracket style, one aligned line per generator.
std::string expansion_to_latex(const Expansion& e);

// Display name of a reference basis letter: A1, B1, A2, ...
std::string letter_name(int index);

// Nested-bracket rendering of a Lyndon word via its standard factorization.
std::string lyndon_bracket_string(const LyndonWord& w);

} // namespace symexp
