#include "scangame/config.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace scangame {

namespace {

constexpr std::array<const char*, 9> kKeys = {"a",   "b",   "c", "U", "V",
                                              "C_S", "C_I", "F", "q"};

std::string trim(const std::string& s) {
    std::size_t lo = s.find_first_not_of(" \t\r");
    if (lo == std::string::npos) return std::string();
    std::size_t hi = s.find_last_not_of(" \t\r");
    return s.substr(lo, hi - lo + 1);
}

[[noreturn]] void fail_at(const std::string& origin, int line,
                          const std::string& what) {
    throw ValidationError(origin + ":" + std::to_string(line) + ": " + what);
}

} // namespace

GameParams parse_config_text(const std::string& text, const std::string& origin) {
    std::map<std::string, double> values;
    std::map<std::string, int> first_line;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail_at(origin, lineno, "expected 'key = value', got '" + trim(raw) + "'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) fail_at(origin, lineno, "missing key before '='");
        if (val.empty()) fail_at(origin, lineno, "missing value for key '" + key + "'");

        bool known = false;
        for (const char* k : kKeys) known = known || key == k;
        if (!known) fail_at(origin, lineno, "unknown key '" + key + "'");
        if (values.count(key))
            fail_at(origin, lineno,
                    "duplicate key '" + key + "' (first set on line " +
                        std::to_string(first_line[key]) + ")");

        double parsed = 0.0;
        const char* begin = val.data();
        const char* end = begin + val.size();
        auto [ptr, ec] = std::from_chars(begin, end, parsed);
        if (ec != std::errc{} || ptr != end)
            fail_at(origin, lineno,
                    "value for key '" + key + "' is not a number: '" + val + "'");
        values[key] = parsed;
        first_line[key] = lineno;
    }

    std::string missing;
    for (const char* k : kKeys) {
        if (std::string(k) == "q") continue;  // optional
        if (!values.count(k)) missing += missing.empty() ? k : std::string(", ") + k;
    }
    if (!missing.empty())
        throw ValidationError(origin + ": missing required key(s): " + missing);

    GameParams p;
    p.a = values["a"];
    p.b = values["b"];
    p.c = values["c"];
    p.U = values["U"];
    p.V = values["V"];
    p.C_S = values["C_S"];
    p.C_I = values["C_I"];
    p.F = values["F"];
    p.q = values.count("q") ? values["q"] : 1.0;

    try {
        validate_params(p);
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }
    return p;
}

GameParams load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

} // namespace scangame
