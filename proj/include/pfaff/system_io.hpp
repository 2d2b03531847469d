#pragma once

// Line-oriented system files:
//
//   # comment
//   vars x: x1 x2
//   vars y: y1 y2
//   d y1 / d x1 = y1
//   d y1 / d x2 = y1^2
//   d y2 / d x1 = y1*y2 + 1
//   d y2 / d x2 = y1^2
//   constraint y1 - 1
//
// Every derivative pair (unknown, direction) must appear exactly once;
// `constraint p` asserts p = 0. print_system emits the canonical form, and
// parse_system(print_system(S)) == S.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pfaff/pfaffian.hpp"

namespace pfaff {

class SystemFormatError : public Error {
  public:
    SystemFormatError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line(line) {}

    std::size_t line;
};

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

} // namespace detail

inline PfaffianSystem parse_system(const std::string& text) {
    std::vector<std::string> x_vars, y_vars;
    struct DerivLine {
        std::string y, x, rhs;
        std::size_t line;
    };
    std::vector<DerivLine> derivs;
    std::vector<std::pair<std::string, std::size_t>> constraints;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool seen_rule = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = detail::strip(line);
        if (line.empty())
            continue;

        if (line.rfind("vars", 0) == 0) {
            if (seen_rule)
                throw SystemFormatError("vars line after equations", lineno);
            std::size_t colon = line.find(':');
            if (colon == std::string::npos)
                throw SystemFormatError("vars line missing ':'", lineno);
            auto head = detail::split_ws(line.substr(4, colon - 4));
            auto names = detail::split_ws(line.substr(colon + 1));
            if (head.size() != 1 || (head[0] != "x" && head[0] != "y"))
                throw SystemFormatError("expected 'vars x:' or 'vars y:'", lineno);
            if (names.empty())
                throw SystemFormatError("empty variable list", lineno);
            auto& target = head[0] == "x" ? x_vars : y_vars;
            if (!target.empty())
                throw SystemFormatError("duplicate 'vars " + head[0] + ":' line", lineno);
            target = names;
            continue;
        }
        if (line.rfind("constraint", 0) == 0) {
            seen_rule = true;
            std::string rhs = detail::strip(line.substr(10));
            if (rhs.empty())
                throw SystemFormatError("constraint without polynomial", lineno);
            constraints.emplace_back(rhs, lineno);
            continue;
        }
        if (line.rfind("d", 0) == 0) {
            seen_rule = true;
            // d <y> / d <x> = <poly>
            std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw SystemFormatError("derivative line missing '='", lineno);
            std::string lhs = line.substr(0, eq);
            std::string rhs = detail::strip(line.substr(eq + 1));
            std::size_t slash = lhs.find('/');
            if (slash == std::string::npos)
                throw SystemFormatError("derivative line missing '/'", lineno);
            auto left = detail::split_ws(lhs.substr(0, slash));
            auto right = detail::split_ws(lhs.substr(slash + 1));
            if (left.size() != 2 || left[0] != "d" || right.size() != 2 || right[0] != "d")
                throw SystemFormatError("expected 'd <unknown> / d <variable> = <poly>'",
                                        lineno);
            if (rhs.empty())
                throw SystemFormatError("derivative line missing right-hand side", lineno);
            derivs.push_back({left[1], right[1], rhs, lineno});
            continue;
        }
        throw SystemFormatError("unrecognized line '" + line + "'", lineno);
    }

    if (x_vars.empty())
        throw SystemFormatError("missing 'vars x:' line", lineno);
    if (y_vars.empty())
        throw SystemFormatError("missing 'vars y:' line", lineno);

    auto index_of = [](const std::vector<std::string>& names, const std::string& name) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name)
                return std::optional<std::size_t>(i);
        return std::optional<std::size_t>();
    };

    std::size_t n = y_vars.size(), m = x_vars.size();
    std::vector<std::vector<std::string>> f(n, std::vector<std::string>(m));
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(m, false));
    for (const auto& d : derivs) {
        auto i = index_of(y_vars, d.y);
        if (!i)
            throw SystemFormatError("'" + d.y + "' is not a declared unknown", d.line);
        auto j = index_of(x_vars, d.x);
        if (!j)
            throw SystemFormatError("'" + d.x + "' is not a declared independent variable",
                                    d.line);
        if (seen[*i][*j])
            throw SystemFormatError("duplicate derivative for d " + d.y + " / d " + d.x,
                                    d.line);
        seen[*i][*j] = true;
        f[*i][*j] = d.rhs;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!seen[i][j])
                throw SystemFormatError("missing derivative for d " + y_vars[i] + " / d " +
                                            x_vars[j],
                                        lineno);

    // Validate each polynomial separately so errors carry their line.
    std::vector<std::string> all = x_vars;
    all.insert(all.end(), y_vars.begin(), y_vars.end());
    Ring full(all);
    for (const auto& d : derivs) {
        try {
            parse_polynomial(d.rhs, full);
        } catch (const ParseError& e) {
            throw SystemFormatError(std::string("bad polynomial: ") + e.what(), d.line);
        }
    }
    std::vector<std::string> g;
    for (const auto& [poly, line] : constraints) {
        try {
            parse_polynomial(poly, full);
        } catch (const ParseError& e) {
            throw SystemFormatError(std::string("bad polynomial: ") + e.what(), line);
        }
        g.push_back(poly);
    }

    return PfaffianSystem::parse(x_vars, y_vars, f, g);
}

inline std::string print_system(const PfaffianSystem& S) {
    std::ostringstream out;
    out << "vars x:";
    for (const auto& v : S.x_vars())
        out << " " << v;
    out << "\nvars y:";
    for (const auto& v : S.y_vars())
        out << " " << v;
    out << "\n";
    for (std::size_t i = 0; i < S.unknown_count(); ++i)
        for (std::size_t j = 0; j < S.independent_count(); ++j)
            out << "d " << S.y_vars()[i] << " / d " << S.x_vars()[j] << " = "
                << S.f(i, j).to_string() << "\n";
    for (const auto& g : S.constraints())
        out << "constraint " << g.to_string() << "\n";
    return out.str();
}

} // namespace pfaff
