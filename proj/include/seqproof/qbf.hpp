#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqproof {

enum class Quantifier : std::uint8_t { Forall, Exists };

struct Literal {
    std::uint32_t variable = 1;  // 1-based
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

/// Exactly three literals; shorter input clauses are padded by repeating the last literal.
using Clause = std::array<Literal, 3>;

class QbfError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parse failure carrying the 1-based line of the offending input.
class QbfParseError : public QbfError {
public:
    QbfParseError(std::size_t line, const std::string& what)
        : QbfError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Prenex QBF  Q1 x1 ... Qn xn . phi  with phi in 3-CNF; quantifier i binds x_i.
class Qbf {
public:
    /// Throws QbfError unless n >= 1, m >= 1, |quantifiers| == n and every literal is in [1, n].
    Qbf(std::vector<Quantifier> quantifiers, std::vector<Clause> clauses);

    std::size_t num_vars() const { return quantifiers_.size(); }
    std::size_t num_clauses() const { return clauses_.size(); }
    const std::vector<Quantifier>& quantifiers() const { return quantifiers_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    Quantifier quantifier(std::size_t variable) const { return quantifiers_.at(variable - 1); }

    /// phi under a Boolean assignment; bit (i-1) of `assignment` is x_i.
    bool matrix_value(std::uint64_t assignment) const;

    friend bool operator==(const Qbf&, const Qbf&) = default;

private:
    std::vector<Quantifier> quantifiers_;
    std::vector<Clause> clauses_;
};

/// QDIMACS subset: 'c' comments, "p cnf n m", then "a|e v... 0" lines binding
/// x1..xn in order, then m clause lines of 1 to 3 nonzero literals ending in 0.
Qbf parse_qbf(std::string_view text);

/// Canonical QDIMACS: one quantifier line per maximal block, clauses as stored (padded).
std::string serialize_qbf(const Qbf& formula);

inline constexpr std::size_t kBruteForceVarLimit = 24;

/// Exhaustive recursion over assignments. Throws QbfError if n > kBruteForceVarLimit.
bool eval_qbf_bruteforce(const Qbf& formula);

}  // namespace seqproof
