#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "seqproof/bytes.hpp"
#include "seqproof/hash.hpp"

namespace seqproof::tm {

class TuringError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tape alphabet {0, 1, ⊢}; the left-end marker only ever sits in cell 0.
enum class Symbol : std::uint8_t { Zero = 0, One = 1, LeftEnd = 2 };

char to_char(Symbol s);
/// '0', '1' or '^' (the left-end marker).
Symbol symbol_from_char(char c);

enum class Move : std::int8_t { Left = -1, Stay = 0, Right = 1 };

struct Transition {
    std::uint64_t next_state;
    Symbol write;
    Move move;

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// Finite rule table delta(q, a) -> (q', a', d) over states [0, num_states).
class ExplicitTable {
public:
    explicit ExplicitTable(std::uint64_t num_states) : num_states_(num_states) {}

    /// Throws TuringError on out-of-range states, a duplicate rule, or a rule
    /// that would write or erase the left-end marker.
    void add(std::uint64_t state, Symbol read, Transition t);
    std::optional<Transition> lookup(std::uint64_t state, Symbol read) const;

    std::uint64_t num_states() const { return num_states_; }
    std::size_t size() const { return rules_.size(); }

private:
    std::uint64_t num_states_;
    std::map<std::pair<std::uint64_t, Symbol>, Transition> rules_;
};

/// Keyed pseudorandom rule over states {0,1}^b:
/// digest = H("SHVDF-delta-v1" || len(seed) || seed || q || a), then
/// next state = first 8 digest bytes (big-endian) mod 2^b, write bit =
/// digest[8] & 1, move = (big-endian digest[9..12]) mod 3 - 1.
class SeededRule {
public:
    /// state_bits in [1, 64].
    SeededRule(Bytes seed, unsigned state_bits);

    Transition lookup(std::uint64_t state, Symbol read) const;

    const Bytes& seed() const { return seed_; }
    unsigned state_bits() const { return state_bits_; }

private:
    Bytes seed_;
    unsigned state_bits_;
    Hasher prefix_;
};

/// Halting-state membership: either an explicit list, or every state below a
/// threshold, optionally with state 0 exempted.
class HaltSet {
public:
    static HaltSet of(std::vector<std::uint64_t> states);
    static HaltSet below(std::uint64_t threshold, bool exempt_zero);

    bool contains(std::uint64_t state) const;
    /// Declared |F|.
    std::uint64_t size_bound() const;

private:
    std::vector<std::uint64_t> states_;  // sorted
    std::uint64_t threshold_ = 0;
    bool exempt_zero_ = false;
};

struct TmDescription {
    unsigned state_bits = 0;
    std::variant<ExplicitTable, SeededRule> delta;
    HaltSet halt;
    std::uint64_t initial_state = 0;

    /// |Q|: the table's state count, or 2^b for a seeded rule (saturating).
    std::uint64_t num_states() const;
    /// Throws TuringError if delta is undefined for a non-halting (q, a).
    Transition transition(std::uint64_t state, Symbol read) const;
};

/// Single tape of S cells: cell 0 holds ⊢, the input follows, the rest is 0.
struct TmConfiguration {
    std::uint64_t state = 0;
    std::vector<Symbol> tape;
    std::size_t head = 0;

    /// Throws TuringError if |input| > S - 1 or input has characters other than '0'/'1'.
    static TmConfiguration initial(std::uint64_t state, std::string_view input, std::size_t space);

    Symbol scanned() const { return tape[head]; }
    std::string tape_string() const;

    friend bool operator==(const TmConfiguration&, const TmConfiguration&) = default;
};

/// States visited and symbols under the head: the initial entry first, then one per step.
struct StepTrace {
    std::vector<std::uint64_t> states;
    std::vector<Symbol> scanned;
};

/// One application of delta. Halting states absorb; the head clamps to
/// [0, S); cell 0 is never overwritten.
void step_in_place(const TmDescription& desc, TmConfiguration& c);
TmConfiguration tm_step(const TmDescription& desc, const TmConfiguration& c);

struct RunResult {
    TmConfiguration final;
    std::optional<StepTrace> trace;
    std::uint64_t steps = 0;
};

/// Exactly `steps` applications of tm_step.
RunResult tm_run(const TmDescription& desc, TmConfiguration c0, std::uint64_t steps, bool trace = false);

/// |Q| * S * 2^S, saturating at UINT64_MAX.
std::uint64_t configuration_bound(std::uint64_t num_states, std::size_t space);

inline constexpr std::uint64_t kSpaceHaltConfigLimit = std::uint64_t{1} << 28;

/// Runs from (q0, ⊢x, 0) for at most |Q| S 2^S steps and reports whether a
/// halting state was reached. Throws TuringError if the bound exceeds 2^28.
bool decide_spacehalt(const TmDescription& desc, std::string_view input, std::size_t space);

/// Text format:
///   states <count> | states <b>b
///   halt <q> ...
///   <q> <sym> -> <q'> <sym'> <L|S|R>      sym in {0, 1, ^}
/// '#' starts a comment. Initial state is 0.
TmDescription parse_machine(std::string_view text);

}  // namespace seqproof::tm
