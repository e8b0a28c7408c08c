#include <algorithm>
#include <charconv>
#include <sstream>

#include "gencon/reductions.hpp"

namespace gencon {

void CnfFormula::validate(bool strict_three) const {
    if (num_vars < 0) throw Error("CNF: negative variable count");
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        const auto& c = clauses[j];
        if (strict_three && c.size() != 3)
            throw Error("CNF: clause " + std::to_string(j + 1) + " does not have exactly three literals");
        std::vector<int> vars;
        for (const Literal& l : c) {
            if (l.var < 0 || l.var >= num_vars)
                throw Error("CNF: clause " + std::to_string(j + 1) + " has a variable out of range");
            vars.push_back(l.var);
        }
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
            throw Error("CNF: clause " + std::to_string(j + 1) + " repeats a variable (or has a complementary pair)");
    }
}

bool satisfies(const CnfFormula& phi, const Assignment& t) {
    if (static_cast<int>(t.values.size()) != phi.num_vars) return false;
    return std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const auto& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return t.values[l.var] == l.positive; });
    });
}

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula phi;
    bool header = false;
    long declared_clauses = 0;
    std::vector<Literal> current;
    int line_no = 0;
    std::size_t pos = 0;
    auto where = [&] { return "DIMACS line " + std::to_string(line_no) + ": "; };

    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string line(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::istringstream in(line);
        std::string first;
        if (!(in >> first)) continue;
        if (first == "c") continue;
        if (first == "%") break;  // SATLIB end marker
        if (first == "p") {
            std::string fmt;
            long vars = -1, clauses = -1;
            std::string extra;
            if (header || !(in >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0 || (in >> extra))
                throw Error(where() + "malformed header, expected \"p cnf <vars> <clauses>\"");
            header = true;
            phi.num_vars = static_cast<int>(vars);
            declared_clauses = clauses;
            continue;
        }
        if (!header) throw Error(where() + "clause before \"p cnf\" header");

        std::istringstream toks(line);
        std::string tok;
        while (toks >> tok) {
            long lit = 0;
            auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc() || end != tok.data() + tok.size())
                throw Error(where() + "bad literal \"" + tok + "\"");
            if (lit == 0) {
                phi.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            long var = lit < 0 ? -lit : lit;
            if (var > phi.num_vars) throw Error(where() + "literal " + tok + " out of range");
            current.push_back({static_cast<int>(var - 1), lit > 0});
        }
    }
    if (!header) throw Error("DIMACS: missing \"p cnf\" header");
    if (!current.empty()) throw Error("DIMACS: last clause is not terminated by 0");
    if (static_cast<long>(phi.clauses.size()) != declared_clauses)
        throw Error("DIMACS: header declares " + std::to_string(declared_clauses) + " clauses, found " +
                    std::to_string(phi.clauses.size()));
    phi.validate();
    return phi;
}

std::string write_dimacs(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& c : phi.clauses) {
        for (const Literal& l : c) out << (l.positive ? "" : "-") << (l.var + 1) << ' ';
        out << "0\n";
    }
    return out.str();
}

std::optional<Assignment> solve_sat_brute(const CnfFormula& phi) {
    phi.validate();
    if (phi.num_vars > 20) throw Error("SAT oracle: variable cap is 20");
    Assignment t;
    t.values.assign(static_cast<std::size_t>(phi.num_vars), false);
    const std::uint32_t total = 1u << phi.num_vars;
    for (std::uint32_t bits = 0; bits < total; ++bits) {
        for (int i = 0; i < phi.num_vars; ++i) t.values[i] = (bits >> i) & 1u;
        if (satisfies(phi, t)) return t;
    }
    return std::nullopt;
}

}  // namespace gencon
