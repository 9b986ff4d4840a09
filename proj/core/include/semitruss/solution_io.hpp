#pragma once

#include <string>

#include "semitruss/solution.hpp"

namespace semitruss {

// Accepts exactly {"n": int, "sigma": [[...]], "gamma": [[...]]} and rejects
// unknown keys. Throws ShapeMismatch / OutOfRangeEntry on bad content and
// ShapeMismatch on malformed JSON or key problems.
ValidationResult parse_solution_text(const std::string& json_text);

// Reads the file and parses it. Throws ShapeMismatch when unreadable.
ValidationResult parse_solution_file(const std::string& path);

// Serializes in the same file format, keys in order n, sigma, gamma.
std::string solution_to_json(const Solution& s);

}  // namespace semitruss
