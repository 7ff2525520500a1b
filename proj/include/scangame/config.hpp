#pragma once
// Flat "key = value" configuration files for the model parameters.  Lines
// may carry '#' comments; blank lines are ignored.  Required keys: a, b, c,
// U, V, C_S, C_I, F.  Optional: q (defaults to 1).  Unknown or duplicate
// keys are errors; every diagnostic names the key and line involved.

#include "scangame/model.hpp"

#include <string>

namespace scangame {

// Parses config text.  `origin` labels diagnostics (usually the file path).
GameParams parse_config_text(const std::string& text, const std::string& origin);

// Reads and parses the file at `path`; the result is already validated.
GameParams load_config(const std::string& path);

} // namespace scangame
