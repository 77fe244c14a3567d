#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "simplexity/dissection.hpp"
#include "simplexity/enumeration.hpp"
#include "simplexity/simplex.hpp"
#include "simplexity/weight_lp.hpp"

namespace simplexity::io {

// ordered_json keeps object keys in insertion order so serialized output
// is byte-stable and matches the documented schemas field for field.
using Json = nlohmann::ordered_json;

// {"n": int, "vertices": ["010", ...]} with vertices in canonical order.
Json simplex_to_json(const Simplex01& s);
Simplex01 simplex_from_json(const Json& j);

// Class-list file: {"n", "classes": [{"volume", "folded", "count",
// "witness"}], "rho"}. Volumes are exact "p/q" strings.
struct ClassFile {
    int n = 0;
    std::vector<ConstraintClass> classes;
    std::int64_t rho = 0;
};

Json class_file_to_json(const EnumerationSummary& summary);
ClassFile class_file_from_json(const Json& j);
ClassFile load_class_file(const std::string& path);

// LP result file: {"n", "g_star", "bound", "alpha", "tight_classes"};
// tight classes are identified by their (volume, folded) keys.
Json lp_result_to_json(int n, const LPSolution& sol,
                       const std::vector<ConstraintClass>& classes);

// Dissection file: {"n", "polytope": "cube", "axis" (optional, default 1),
// "simplices": [[vertex strings]...]}.
Json dissection_to_json(const Dissection& d);
Dissection dissection_from_json(const Json& j);
Dissection load_dissection(const std::string& path);

Json report_to_json(const VerificationReport& report);

// 2-space indentation plus a trailing newline, everywhere.
std::string dumps(const Json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
Json load_json(const std::string& path);

}  // namespace simplexity::io
