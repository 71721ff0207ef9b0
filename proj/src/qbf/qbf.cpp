#include "seqproof/qbf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace seqproof {

Qbf::Qbf(std::vector<Quantifier> quantifiers, std::vector<Clause> clauses)
    : quantifiers_(std::move(quantifiers)), clauses_(std::move(clauses)) {
    if (quantifiers_.empty()) throw QbfError("formula needs at least one variable");
    if (clauses_.empty()) throw QbfError("formula needs at least one clause");
    for (const auto& clause : clauses_) {
        for (const auto& lit : clause) {
            if (lit.variable < 1 || lit.variable > quantifiers_.size()) {
                throw QbfError("variable " + std::to_string(lit.variable) + " out of range");
            }
        }
    }
}

bool Qbf::matrix_value(std::uint64_t assignment) const {
    for (const auto& clause : clauses_) {
        bool satisfied = false;
        for (const auto& lit : clause) {
            const bool value = lit.variable <= 64 && ((assignment >> (lit.variable - 1)) & 1);
            if (value != lit.negated) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) return false;
    }
    return true;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

long long parse_int(std::string_view tok, std::size_t line) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw QbfParseError(line, "expected integer, got '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace

Qbf parse_qbf(std::string_view text) {
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Quantifier> quantifiers;
    std::vector<Clause> clauses;

    std::size_t line_no = 0;
    std::size_t last_line = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        const auto tokens = split_tokens(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        last_line = line_no;

        if (tokens[0] == "p") {
            if (have_header) throw QbfParseError(line_no, "duplicate header");
            if (tokens.size() != 4 || tokens[1] != "cnf") throw QbfParseError(line_no, "header must be 'p cnf <n> <m>'");
            n = parse_int(tokens[2], line_no);
            m = parse_int(tokens[3], line_no);
            if (n < 1 || m < 1) throw QbfParseError(line_no, "need n >= 1 and m >= 1");
            if (n > 0xffff) throw QbfParseError(line_no, "too many variables");
            have_header = true;
            continue;
        }
        if (!have_header) throw QbfParseError(line_no, "missing 'p cnf' header");

        if (tokens[0] == "a" || tokens[0] == "e") {
            if (!clauses.empty()) throw QbfParseError(line_no, "quantifier line after clauses");
            const Quantifier q = tokens[0] == "a" ? Quantifier::Forall : Quantifier::Exists;
            if (tokens.size() < 2 || parse_int(tokens.back(), line_no) != 0) {
                throw QbfParseError(line_no, "quantifier line must end with 0");
            }
            for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
                const long long v = parse_int(tokens[i], line_no);
                if (v < 1 || v > n) throw QbfParseError(line_no, "variable " + std::to_string(v) + " out of range");
                if (static_cast<std::size_t>(v) != quantifiers.size() + 1) {
                    if (static_cast<std::size_t>(v) <= quantifiers.size()) {
                        throw QbfParseError(line_no, "variable " + std::to_string(v) + " quantified twice");
                    }
                    throw QbfParseError(line_no, "prefix must bind variables in order; expected " +
                                                     std::to_string(quantifiers.size() + 1));
                }
                quantifiers.push_back(q);
            }
            continue;
        }

        // clause line
        if (tokens.size() < 2) throw QbfParseError(line_no, "empty clause");
        if (parse_int(tokens.back(), line_no) != 0) throw QbfParseError(line_no, "clause must end with 0");
        if (tokens.size() - 1 > 3) throw QbfParseError(line_no, "clause has more than 3 literals");
        std::vector<Literal> lits;
        for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
            const long long v = parse_int(tokens[i], line_no);
            if (v == 0) throw QbfParseError(line_no, "0 inside clause");
            const long long var = v < 0 ? -v : v;
            if (var > n) throw QbfParseError(line_no, "variable " + std::to_string(var) + " out of range");
            if (static_cast<std::size_t>(var) > quantifiers.size()) {
                throw QbfParseError(line_no, "free variable " + std::to_string(var));
            }
            lits.push_back({static_cast<std::uint32_t>(var), v < 0});
        }
        Clause clause;
        for (std::size_t i = 0; i < 3; ++i) clause[i] = lits[std::min(i, lits.size() - 1)];
        clauses.push_back(clause);
    }

    if (!have_header) throw QbfParseError(line_no == 0 ? 1 : line_no, "missing 'p cnf' header");
    if (quantifiers.size() != static_cast<std::size_t>(n)) {
        throw QbfParseError(last_line, "free variable " + std::to_string(quantifiers.size() + 1) +
                                           " (prefix binds " + std::to_string(quantifiers.size()) + " of " +
                                           std::to_string(n) + ")");
    }
    if (clauses.size() != static_cast<std::size_t>(m)) {
        throw QbfParseError(last_line, "header declares " + std::to_string(m) + " clauses, found " +
                                           std::to_string(clauses.size()));
    }
    return Qbf(std::move(quantifiers), std::move(clauses));
}

std::string serialize_qbf(const Qbf& formula) {
    std::ostringstream out;
    out << "p cnf " << formula.num_vars() << ' ' << formula.num_clauses() << '\n';
    const auto& qs = formula.quantifiers();
    for (std::size_t i = 0; i < qs.size();) {
        out << (qs[i] == Quantifier::Forall ? 'a' : 'e');
        std::size_t j = i;
        for (; j < qs.size() && qs[j] == qs[i]; ++j) out << ' ' << j + 1;
        out << " 0\n";
        i = j;
    }
    for (const auto& clause : formula.clauses()) {
        for (const auto& lit : clause) out << (lit.negated ? "-" : "") << lit.variable << ' ';
        out << "0\n";
    }
    return out.str();
}

namespace {

bool eval_from(const Qbf& formula, std::size_t var, std::uint64_t assignment) {
    if (var > formula.num_vars()) return formula.matrix_value(assignment);
    const std::uint64_t bit = std::uint64_t{1} << (var - 1);
    const bool lo = eval_from(formula, var + 1, assignment);
    if (formula.quantifier(var) == Quantifier::Exists) {
        return lo || eval_from(formula, var + 1, assignment | bit);
    }
    return lo && eval_from(formula, var + 1, assignment | bit);
}

}  // namespace

bool eval_qbf_bruteforce(const Qbf& formula) {
    if (formula.num_vars() > kBruteForceVarLimit) {
        throw QbfError("brute-force evaluation limited to " + std::to_string(kBruteForceVarLimit) + " variables");
    }
    return eval_from(formula, 1, 0);
}

}  // namespace seqproof
