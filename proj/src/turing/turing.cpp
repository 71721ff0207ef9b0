#include <algorithm>
#include <array>
#include <limits>

#include "seqproof/turing.hpp"

namespace seqproof::tm {

char to_char(Symbol s) {
    switch (s) {
        case Symbol::Zero: return '0';
        case Symbol::One: return '1';
        case Symbol::LeftEnd: return '^';
    }
    return '?';
}

Symbol symbol_from_char(char c) {
    switch (c) {
        case '0': return Symbol::Zero;
        case '1': return Symbol::One;
        case '^': return Symbol::LeftEnd;
        default: throw TuringError(std::string("invalid tape symbol '") + c + "'");
    }
}

void ExplicitTable::add(std::uint64_t state, Symbol read, Transition t) {
    if (state >= num_states_ || t.next_state >= num_states_) {
        throw TuringError("rule references a state outside [0, " + std::to_string(num_states_) + ")");
    }
    if ((read == Symbol::LeftEnd) != (t.write == Symbol::LeftEnd)) {
        throw TuringError("rules must leave the left-end marker in place and never write it elsewhere");
    }
    if (!rules_.emplace(std::pair{state, read}, t).second) {
        throw TuringError("duplicate rule for (" + std::to_string(state) + ", " + to_char(read) + ")");
    }
}

std::optional<Transition> ExplicitTable::lookup(std::uint64_t state, Symbol read) const {
    const auto it = rules_.find({state, read});
    if (it == rules_.end()) return std::nullopt;
    return it->second;
}

namespace {
constexpr std::string_view kDeltaDomain = "SHVDF-delta-v1";
}

SeededRule::SeededRule(Bytes seed, unsigned state_bits) : seed_(std::move(seed)), state_bits_(state_bits) {
    if (state_bits < 1 || state_bits > 64) throw TuringError("state bits must be in [1, 64]");
    ByteWriter w;
    w.raw(kDeltaDomain);
    w.prefixed(seed_);
    prefix_.update(w.bytes());
}

Transition SeededRule::lookup(std::uint64_t state, Symbol read) const {
    std::array<std::uint8_t, 9> tail{};
    for (int i = 0; i < 8; ++i) tail[i] = static_cast<std::uint8_t>(state >> (56 - 8 * i));
    tail[8] = static_cast<std::uint8_t>(read);
    Hasher h = prefix_;
    const Digest256 d = h.update(tail).digest();

    std::uint64_t next = 0;
    for (int i = 0; i < 8; ++i) next = (next << 8) | d[i];
    if (state_bits_ < 64) next &= (std::uint64_t{1} << state_bits_) - 1;
    const Symbol write = (d[8] & 1) ? Symbol::One : Symbol::Zero;
    const std::uint32_t word = (std::uint32_t{d[9]} << 24) | (std::uint32_t{d[10]} << 16) |
                               (std::uint32_t{d[11]} << 8) | std::uint32_t{d[12]};
    const auto move = static_cast<Move>(static_cast<int>(word % 3) - 1);
    return {next, write, move};
}

HaltSet HaltSet::of(std::vector<std::uint64_t> states) {
    HaltSet h;
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    h.states_ = std::move(states);
    return h;
}

HaltSet HaltSet::below(std::uint64_t threshold, bool exempt_zero) {
    HaltSet h;
    h.threshold_ = threshold;
    h.exempt_zero_ = exempt_zero;
    return h;
}

bool HaltSet::contains(std::uint64_t state) const {
    if (state < threshold_) return !(exempt_zero_ && state == 0);
    return std::binary_search(states_.begin(), states_.end(), state);
}

std::uint64_t HaltSet::size_bound() const {
    std::uint64_t below = threshold_;
    if (exempt_zero_ && below > 0) --below;
    return below + states_.size();
}

std::uint64_t TmDescription::num_states() const {
    if (const auto* table = std::get_if<ExplicitTable>(&delta)) return table->num_states();
    return state_bits >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << state_bits;
}

Transition TmDescription::transition(std::uint64_t state, Symbol read) const {
    if (const auto* table = std::get_if<ExplicitTable>(&delta)) {
        if (auto t = table->lookup(state, read)) return *t;
        throw TuringError("delta undefined for (" + std::to_string(state) + ", " + to_char(read) + ")");
    }
    return std::get<SeededRule>(delta).lookup(state, read);
}

TmConfiguration TmConfiguration::initial(std::uint64_t state, std::string_view input, std::size_t space) {
    if (space < 1 || input.size() > space - 1) {
        throw TuringError("input of length " + std::to_string(input.size()) + " does not fit space " +
                          std::to_string(space));
    }
    TmConfiguration c{state, std::vector<Symbol>(space, Symbol::Zero), 0};
    c.tape[0] = Symbol::LeftEnd;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (input[i] != '0' && input[i] != '1') throw TuringError("input must be a binary string");
        c.tape[i + 1] = symbol_from_char(input[i]);
    }
    return c;
}

std::string TmConfiguration::tape_string() const {
    std::string out;
    out.reserve(tape.size());
    for (auto s : tape) out.push_back(to_char(s));
    return out;
}

void step_in_place(const TmDescription& desc, TmConfiguration& c) {
    if (desc.halt.contains(c.state)) return;
    const Transition t = desc.transition(c.state, c.tape[c.head]);
    if (c.head != 0) c.tape[c.head] = t.write;
    c.state = t.next_state;
    if (t.move == Move::Left && c.head > 0) --c.head;
    if (t.move == Move::Right && c.head + 1 < c.tape.size()) ++c.head;
}

TmConfiguration tm_step(const TmDescription& desc, const TmConfiguration& c) {
    TmConfiguration next = c;
    step_in_place(desc, next);
    return next;
}

RunResult tm_run(const TmDescription& desc, TmConfiguration c0, std::uint64_t steps, bool trace) {
    RunResult r{std::move(c0), std::nullopt, 0};
    if (trace) {
        r.trace.emplace();
        r.trace->states.reserve(steps + 1);
        r.trace->scanned.reserve(steps + 1);
        r.trace->states.push_back(r.final.state);
        r.trace->scanned.push_back(r.final.scanned());
    }
    for (std::uint64_t i = 0; i < steps; ++i) {
        step_in_place(desc, r.final);
        ++r.steps;
        if (trace) {
            r.trace->states.push_back(r.final.state);
            r.trace->scanned.push_back(r.final.scanned());
        }
    }
    return r;
}

std::uint64_t configuration_bound(std::uint64_t num_states, std::size_t space) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    if (space >= 64) return kMax;
    const unsigned __int128 cells = static_cast<unsigned __int128>(space) << space;
    if (num_states != 0 && cells > kMax / num_states) return kMax;
    return static_cast<std::uint64_t>(cells * num_states);
}

bool decide_spacehalt(const TmDescription& desc, std::string_view input, std::size_t space) {
    if (!std::holds_alternative<ExplicitTable>(desc.delta)) {
        throw TuringError("SPACEHALT decider needs an explicit transition table");
    }
    const std::uint64_t bound = configuration_bound(desc.num_states(), space);
    if (bound > kSpaceHaltConfigLimit) {
        throw TuringError("|Q| S 2^S = " + std::to_string(bound) + " exceeds the 2^28 simulation guard");
    }
    TmConfiguration c = TmConfiguration::initial(desc.initial_state, input, space);
    for (std::uint64_t i = 0; i < bound; ++i) {
        if (desc.halt.contains(c.state)) return true;
        step_in_place(desc, c);
    }
    return desc.halt.contains(c.state);
}

}  // namespace seqproof::tm
