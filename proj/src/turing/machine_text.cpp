#include <charconv>

#include "seqproof/turing.hpp"

namespace seqproof::tm {

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
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

std::uint64_t number(std::string_view tok, std::size_t line) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw TuringError("line " + std::to_string(line) + ": expected a number, got '" + std::string(tok) + "'");
    }
    return v;
}

Symbol symbol(std::string_view tok, std::size_t line) {
    if (tok.size() != 1) throw TuringError("line " + std::to_string(line) + ": bad symbol '" + std::string(tok) + "'");
    try {
        return symbol_from_char(tok[0]);
    } catch (const TuringError& e) {
        throw TuringError("line " + std::to_string(line) + ": " + e.what());
    }
}

Move move(std::string_view tok, std::size_t line) {
    if (tok == "L") return Move::Left;
    if (tok == "S") return Move::Stay;
    if (tok == "R") return Move::Right;
    throw TuringError("line " + std::to_string(line) + ": direction must be L, S or R");
}

}  // namespace

TmDescription parse_machine(std::string_view text) {
    std::optional<ExplicitTable> table;
    unsigned bits = 0;
    std::vector<std::uint64_t> halting;
    bool have_halt = false;

    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = tokens_of(line);
        if (tok.empty()) continue;

        if (tok[0] == "states") {
            if (table) throw TuringError("line " + std::to_string(line_no) + ": duplicate 'states' line");
            if (tok.size() != 2) throw TuringError("line " + std::to_string(line_no) + ": expected 'states <count>'");
            std::uint64_t count = 0;
            if (tok[1].ends_with('b')) {
                const std::uint64_t b = number(tok[1].substr(0, tok[1].size() - 1), line_no);
                if (b < 1 || b > 24) throw TuringError("line " + std::to_string(line_no) + ": state bits must be in [1, 24]");
                count = std::uint64_t{1} << b;
            } else {
                count = number(tok[1], line_no);
            }
            if (count < 1) throw TuringError("line " + std::to_string(line_no) + ": need at least one state");
            while ((std::uint64_t{1} << bits) < count) ++bits;
            table.emplace(count);
            continue;
        }
        if (!table) throw TuringError("line " + std::to_string(line_no) + ": 'states' line must come first");

        if (tok[0] == "halt") {
            have_halt = true;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                const std::uint64_t q = number(tok[i], line_no);
                if (q >= table->num_states()) throw TuringError("line " + std::to_string(line_no) + ": halting state out of range");
                halting.push_back(q);
            }
            continue;
        }

        if (tok.size() != 6 || tok[2] != "->") {
            throw TuringError("line " + std::to_string(line_no) + ": expected \"q sym -> q' sym' d\"");
        }
        try {
            table->add(number(tok[0], line_no), symbol(tok[1], line_no),
                       {number(tok[3], line_no), symbol(tok[4], line_no), move(tok[5], line_no)});
        } catch (const TuringError& e) {
            const std::string what = e.what();
            if (what.starts_with("line ")) throw;
            throw TuringError("line " + std::to_string(line_no) + ": " + what);
        }
    }
    if (!table) throw TuringError("machine text has no 'states' line");
    if (!have_halt) throw TuringError("machine text has no 'halt' line");
    return TmDescription{bits, std::move(*table), HaltSet::of(std::move(halting)), 0};
}

}  // namespace seqproof::tm
