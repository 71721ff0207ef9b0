#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "seqproof/field.hpp"
#include "seqproof/poly.hpp"
#include "seqproof/qbf.hpp"

namespace seqproof::sumcheck {

class SumcheckError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnboundVariable : public std::logic_error {
public:
    explicit UnboundVariable(std::size_t variable)
        : std::logic_error("variable x" + std::to_string(variable) + " is unbound"), variable_(variable) {}
    std::size_t variable() const { return variable_; }

private:
    std::size_t variable_;
};

// ---------------------------------------------------------------------------
// Arithmetization

/// f(a) = prod_clauses (1 - prod_literals (1 - val(l, a))), val(x) = a, val(-x) = 1 - a.
/// Agrees with the CNF matrix on Boolean points.
class ArithPoly {
public:
    ArithPoly(Qbf formula, Prime p) : formula_(std::move(formula)), p_(p) {}

    /// point[i] is the value of x_{i+1}; point.size() must equal num_vars().
    FieldElement evaluate(std::span<const FieldElement> point) const;

    std::size_t num_vars() const { return formula_.num_vars(); }
    Prime modulus() const { return p_; }
    const Qbf& formula() const { return formula_; }

private:
    Qbf formula_;
    Prime p_;
};

ArithPoly arithmetize(const Qbf& formula, Prime p);

/// 2^n * 3^m, saturating at UINT64_MAX.
std::uint64_t minimum_prime_bound(std::size_t n, std::size_t m);

/// next_prime_at_least(2^n 3^m).
Prime default_prime(const Qbf& formula);

// ---------------------------------------------------------------------------
// Operator chain h' = Q1 L1 Q2 L1 L2 ... Qn L1 ... Ln f

enum class OpKind : std::uint8_t { Sum, Prod, Lin };

struct Operator {
    OpKind kind;
    std::uint32_t variable;  // 1-based
    std::uint32_t block;     // 1-based quantifier block the operator belongs to

    friend bool operator==(const Operator&, const Operator&) = default;
};

constexpr std::size_t chain_length(std::size_t n) { return n * (n + 3) / 2; }

class OperatorChain {
public:
    OperatorChain(std::vector<Operator> ops, std::size_t num_vars) : ops_(std::move(ops)), num_vars_(num_vars) {}

    const std::vector<Operator>& ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }
    std::size_t num_vars() const { return num_vars_; }
    const Operator& operator[](std::size_t i) const { return ops_[i]; }
    std::span<const Operator> suffix(std::size_t from) const { return std::span(ops_).subspan(from); }

private:
    std::vector<Operator> ops_;
    std::size_t num_vars_;
};

/// Outermost operator first; Q_i is Sum for an existential x_i and Prod for a universal one.
OperatorChain build_operator_chain(const Qbf& formula);

/// Partial assignment of field values to x_1..x_n.
class Bindings {
public:
    explicit Bindings(std::size_t num_vars) : values_(num_vars + 1) {}

    void bind(std::size_t variable, const FieldElement& value) { values_.at(variable) = value; }
    void unbind(std::size_t variable) { values_.at(variable).reset(); }
    const std::optional<FieldElement>& get(std::size_t variable) const { return values_.at(variable); }
    /// Throws UnboundVariable.
    const FieldElement& at(std::size_t variable) const;
    bool is_bound(std::size_t variable) const { return values_.at(variable).has_value(); }
    std::size_t num_vars() const { return values_.size() - 1; }
    /// (x_1, ..., x_n); throws UnboundVariable if any is missing.
    std::vector<FieldElement> point() const;

private:
    std::vector<std::optional<FieldElement>> values_;
};

struct EvalOptions {
    /// Lin_i at a Boolean binding b is the identity substitution x_i = b;
    /// taking it saves one recursive branch. Disabling it gives the literal
    /// two-branch definition everywhere.
    bool boolean_shortcut = true;
    /// Upper bound on concurrent branches; results are independent of it.
    unsigned workers = 1;
};

/// Reference evaluator of an operator suffix:
///   Sum_i  -> g(0) + g(1)
///   Prod_i -> g(0) * g(1)
///   Lin_i  -> b * g(1) + (1 - b) * g(0), b the current binding of x_i
///   empty  -> f(bindings)
/// Throws UnboundVariable if a variable is neither bound nor introduced by a Sum/Prod in the suffix.
FieldElement eval_chain(std::span<const Operator> suffix, const Bindings& bindings, const ArithPoly& f,
                        EvalOptions options = {});

/// Degree allowed for the round polynomial at `position`:
/// 1 for Sum/Prod, 2 for Lin in blocks 1..n-1, 3m for Lin in the final block.
std::size_t round_degree_bound(const OperatorChain& chain, std::size_t position, std::size_t m);

// ---------------------------------------------------------------------------
// Protocol messages

struct RoundMessage {
    std::size_t position;
    UniPoly s;
    std::optional<FieldElement> challenge;
};

struct Transcript {
    Qbf formula;
    Prime prime;
    FieldElement claimed_value;
    std::vector<RoundMessage> rounds;
    std::vector<FieldElement> final_point;  // (r_1, ..., r_n)
};

/// Where verifier randomness comes from: live coins or a Fiat-Shamir oracle.
class ChallengeSource {
public:
    virtual ~ChallengeSource() = default;
    /// Challenge for the round at `position`, after the prover has sent `s`.
    virtual FieldElement challenge(std::size_t position, const UniPoly& s) = 0;
};

/// Uniform challenges from all of F_p, seeded.
class RandomChallenges final : public ChallengeSource {
public:
    RandomChallenges(Prime p, std::uint64_t seed) : p_(p), rng_(seed), dist_(0, p.value() - 1) {}
    FieldElement challenge(std::size_t position, const UniPoly& s) override;

private:
    Prime p_;
    std::mt19937_64 rng_;
    std::uniform_int_distribution<std::uint64_t> dist_;
};

// ---------------------------------------------------------------------------
// Verifier

enum class RejectReason : std::uint8_t {
    None,
    ZeroClaim,
    DegreeOverflow,
    CaseMismatch,
    FinalMismatch,
    ChallengeMismatch,
    Malformed,
};

std::string to_string(RejectReason reason);

struct Verdict {
    RejectReason reason = RejectReason::None;
    std::optional<std::size_t> position;  // round that failed, if any
    std::string detail;

    bool accepted() const { return reason == RejectReason::None; }
    explicit operator bool() const { return accepted(); }

    static Verdict accept() { return {}; }
    static Verdict reject(RejectReason r, std::string detail, std::optional<std::size_t> position = std::nullopt) {
        return {r, position, std::move(detail)};
    }
};

/// Round-by-round verifier. Keeps the running claim y' and the current binding
/// of every variable; draws each challenge from `coins` after the round check.
class Verifier {
public:
    /// Throws SumcheckError if p < 2^n 3^m.
    Verifier(const Qbf& formula, Prime p, ChallengeSource& coins);

    std::optional<Verdict> receive_claim(const FieldElement& y);
    /// On success the returned challenge has been bound to the round's variable.
    std::variant<FieldElement, Verdict> receive_round(const UniPoly& s);
    /// Checks f(r_1..r_n) against the running claim. Call once every round is in.
    Verdict finish() const;

    std::size_t position() const { return position_; }
    std::size_t num_rounds() const { return chain_.size(); }
    bool rounds_done() const { return position_ == chain_.size(); }
    const Bindings& bindings() const { return bindings_; }
    const OperatorChain& chain() const { return chain_; }
    const Qbf& formula() const { return f_.formula(); }
    Prime prime() const { return f_.modulus(); }

private:
    ArithPoly f_;
    OperatorChain chain_;
    ChallengeSource& coins_;
    Bindings bindings_;
    std::optional<FieldElement> claim_;
    std::size_t position_ = 0;
    bool failed_ = false;
};

// ---------------------------------------------------------------------------
// Provers

class Prover {
public:
    virtual ~Prover() = default;
    virtual FieldElement announce() = 0;
    /// Polynomial for the current round.
    virtual UniPoly round_polynomial() = 0;
    virtual void receive_challenge(const FieldElement& r) = 0;
};

struct ProverOptions {
    unsigned workers = 1;
};

/// Builds each s by evaluating the remaining chain at 0..d and interpolating.
class HonestProver final : public Prover {
public:
    /// Throws SumcheckError if n > kProverVarLimit or p < 2^n 3^m.
    HonestProver(const Qbf& formula, Prime p, ProverOptions options = {});

    FieldElement announce() override;
    UniPoly round_polynomial() override;
    void receive_challenge(const FieldElement& r) override;

    std::size_t position() const { return position_; }
    const Bindings& bindings() const { return bindings_; }
    const OperatorChain& chain() const { return chain_; }
    const ArithPoly& arith() const { return f_; }
    /// Value of the remaining chain (from the current position) under the current bindings.
    FieldElement current_value() const;

private:
    ArithPoly f_;
    OperatorChain chain_;
    Bindings bindings_;
    ProverOptions options_;
    std::size_t position_ = 0;
};

inline constexpr std::size_t kProverVarLimit = 12;

/// Honest prover driven by `challenges`; records every message.
Transcript sumcheck_prove(const Qbf& formula, Prime p, ChallengeSource& challenges, ProverOptions options = {});

struct SessionResult {
    Verdict verdict;
    Transcript transcript;  // messages up to the point of rejection
};

/// Live interaction between a prover and a verifier.
SessionResult run_session(Prover& prover, Verifier& verifier);

/// Interactive verification against a live peer.
Verdict sumcheck_verify(const Qbf& formula, Prime p, Prover& peer, ChallengeSource& coins);

/// Replays a recorded transcript through the verifier; each recorded challenge
/// must equal the one `coins` produces for that round.
Verdict verify_transcript(const Qbf& formula, const Transcript& transcript, ChallengeSource& coins);

// ---------------------------------------------------------------------------
// Cheating provers (soundness experiments)

enum class CheatStrategy : std::uint8_t { WrongClaim, RandomRound, ConstantPoly };

std::string to_string(CheatStrategy strategy);
CheatStrategy parse_cheat_strategy(const std::string& name);

struct CheatConfig {
    CheatStrategy strategy = CheatStrategy::WrongClaim;
    std::size_t round = 1;   // 1-based round replaced by RandomRound
    std::uint64_t seed = 0;  // prover-side randomness
};

/// WrongClaim: announces h' + 1, then in every round whose claim is already
/// false sends the honest polynomial plus a correction that satisfies the
/// round check and vanishes on d random points (d the degree bound), so the
/// lie is dropped only if the verifier hits one of them.
/// RandomRound: announces the true value (or 1 if it is 0), at `round` sends a
/// uniformly random polynomial of the round's degree bound among those passing
/// the round check, and patches later rounds like WrongClaim.
/// ConstantPoly: announces h' + 1 and answers every round with the cheapest
/// polynomial passing the check (y'/2, y', or 1 + (y' - 1)x for products).
std::unique_ptr<Prover> make_cheat_prover(const CheatConfig& config, const Qbf& formula, Prime p);

/// Cheating prover driven by `challenges` with no verifier in the loop.
Transcript cheat_prover(const CheatConfig& config, const Qbf& formula, Prime p, ChallengeSource& challenges);

}  // namespace seqproof::sumcheck
