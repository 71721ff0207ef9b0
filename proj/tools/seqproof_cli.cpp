#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "seqproof/fiatshamir.hpp"
#include "seqproof/harness.hpp"
#include "seqproof/shvdf.hpp"
#include "seqproof/sumcheck.hpp"
#include "seqproof/turing.hpp"

using namespace seqproof;
using harness::Json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;

std::string read_text(const std::string& path) {
    const Bytes b = read_file(path);
    return std::string(b.begin(), b.end());
}

std::uint64_t parse_integer(const std::string& s) {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used, 0);
    if (used != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
}

int emit(const harness::ExperimentReport& report, bool json) {
    if (json) {
        std::cout << report.to_json().dump(2) << '\n';
    } else {
        std::cout << report.to_text();
    }
    return report.passed ? kOk : kFail;
}

void print_verdict(const sumcheck::Verdict& v) {
    if (v.accepted()) {
        std::cout << "verdict: accept\n";
        return;
    }
    std::cout << "verdict: reject (" << sumcheck::to_string(v.reason) << ")";
    if (v.position) std::cout << " at round " << *v.position;
    if (!v.detail.empty()) std::cout << ": " << v.detail;
    std::cout << '\n';
}

vdf::VdfParams load_params(const std::string& path) { return vdf::decode_params(read_file(path)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sumcheck for TQBF and the SPACEHALT-based delay function"};
    app.require_subcommand(1);
    int status = kOk;

    // prove-tqbf
    auto* prove = app.add_subcommand("prove-tqbf", "Run the honest sumcheck prover on a QDIMACS formula");
    std::string formula_path, out_path, transcript_path;
    std::uint64_t prime = 0, seed = 1;
    bool fs_mode = false;
    unsigned workers = 1;
    prove->add_option("--in", formula_path, "QDIMACS formula")->required()->check(CLI::ExistingFile);
    prove->add_option("--prime", prime, "Field modulus (default: next prime >= 2^n 3^m)");
    prove->add_flag("--fs", fs_mode, "Non-interactive (Fiat-Shamir) mode");
    prove->add_option("--out", out_path, "Transcript file (with --fs)");
    prove->add_option("--seed", seed, "Verifier coins in interactive mode");
    prove->add_option("--workers", workers, "Prover worker threads")->check(CLI::Range(1u, 256u));
    prove->callback([&] {
        if (!out_path.empty() && !fs_mode) throw CLI::ValidationError("--out", "requires --fs");
        const Qbf formula = parse_qbf(read_text(formula_path));
        const Prime p = prime ? Prime(prime) : sumcheck::default_prime(formula);
        std::cout << "n: " << formula.num_vars() << "\nm: " << formula.num_clauses() << "\np: " << p.value()
                  << "\nrounds: " << sumcheck::chain_length(formula.num_vars()) << '\n';
        sumcheck::Verdict verdict;
        if (fs_mode) {
            const auto proof = fs::fs_prove_tqbf(formula, p, fs::OracleSpec::tqbf(), {workers});
            std::cout << "claim: " << proof.transcript.claimed_value.residue() << '\n';
            if (!out_path.empty()) {
                write_file(out_path, proof.file);
                std::cout << "transcript: " << out_path << " (" << proof.file.size() << " bytes)\n";
            }
            verdict = fs::fs_verify_tqbf(formula, proof.file);
        } else {
            sumcheck::RandomChallenges coins(p, seed);
            sumcheck::HonestProver prover(formula, p, {workers});
            sumcheck::Verifier verifier(formula, p, coins);
            const auto result = sumcheck::run_session(prover, verifier);
            std::cout << "claim: " << result.transcript.claimed_value.residue() << '\n';
            verdict = result.verdict;
        }
        std::cout << "truth: " << (eval_qbf_bruteforce(formula) ? "true" : "false") << '\n';
        print_verdict(verdict);
        status = verdict.accepted() ? kOk : kFail;
    });

    // verify-tqbf
    auto* verify = app.add_subcommand("verify-tqbf", "Check a Fiat-Shamir sumcheck transcript");
    verify->add_option("--in", formula_path, "QDIMACS formula")->required()->check(CLI::ExistingFile);
    verify->add_option("--transcript", transcript_path, "Transcript file")->required()->check(CLI::ExistingFile);
    verify->callback([&] {
        const Qbf formula = parse_qbf(read_text(formula_path));
        const auto verdict = fs::fs_verify_tqbf(formula, read_file(transcript_path));
        print_verdict(verdict);
        status = verdict.accepted() ? kOk : kFail;
    });

    // vdf
    auto* vdf_cmd = app.add_subcommand("vdf", "Delay function operations");
    vdf_cmd->require_subcommand(1);
    unsigned lambda = 16, log2t = 10, state_bits = 0;
    std::size_t space = 32;
    std::string seed_text = "0", pp_path, input, challenge_text, proof_path, output_text;

    auto* setup = vdf_cmd->add_subcommand("setup", "Generate public parameters");
    setup->add_option("--lambda", lambda, "Security parameter")->required();
    setup->add_option("--log2t", log2t, "log2 of the delay T")->required();
    setup->add_option("--space", space, "Tape cells S")->required();
    setup->add_option("--seed", seed_text, "Integer seed or hex:<bytes>")->required();
    setup->add_option("--state-bits", state_bits, "State bits b (default min(2 lambda, 64))");
    setup->add_option("--out", out_path, "Parameter file");
    setup->callback([&] {
        if (log2t >= 63) throw CLI::ValidationError("--log2t", "too large");
        const Bytes seed_bytes = seed_text.rfind("hex:", 0) == 0 ? from_hex(seed_text.substr(4))
                                                                  : vdf::seed_from_integer(parse_integer(seed_text));
        const auto pp = vdf::vdf_setup(lambda, std::uint64_t{1} << log2t, space, seed_bytes, {state_bits});
        const Bytes encoded = vdf::encode_params(pp);
        std::cout << "lambda: " << pp.lambda << "\nT: " << pp.T << "\nS: " << pp.S << "\nstate_bits: " << pp.state_bits
                  << "\nseed: " << to_hex(pp.seed) << '\n';
        if (out_path.empty()) {
            std::cout << "pp: " << to_hex(encoded) << '\n';
        } else {
            write_file(out_path, encoded);
            std::cout << "pp: " << out_path << '\n';
        }
    });

    auto add_pp_input = [&](CLI::App* cmd) {
        cmd->add_option("--pp", pp_path, "Parameter file")->check(CLI::ExistingFile);
        cmd->add_option("--input", input, "Binary input string x")->required();
    };

    auto* eval = vdf_cmd->add_subcommand("eval", "Compute y = q_T");
    add_pp_input(eval);
    eval->add_flag("--fs", fs_mode, "Also open at the oracle challenge and write a transcript");
    eval->add_option("--transcript", transcript_path, "Transcript file (with --fs)");
    eval->callback([&] {
        if (pp_path.empty()) throw CLI::RequiredError("--pp");
        const auto pp = load_params(pp_path);
        if (fs_mode) {
            const auto proof = fs::fs_prove_vdf(pp, input);
            std::cout << "y: " << proof.y.y << "\nt: " << proof.t.t << "\neval_steps: " << proof.eval_steps
                      << "\nopen_steps: " << proof.open_steps << '\n';
            if (!transcript_path.empty()) {
                write_file(transcript_path, proof.file);
                std::cout << "transcript: " << transcript_path << '\n';
            }
            return;
        }
        const auto result = vdf::vdf_eval(pp, input);
        std::cout << "y: " << result.output.y << "\nsteps: " << result.steps << '\n';
    });

    auto* open = vdf_cmd->add_subcommand("open", "Produce the proof (q_t, z) for challenge t");
    add_pp_input(open);
    open->add_option("--challenge", challenge_text, "Challenge t in [T - lambda, T - 1]")->required();
    open->add_option("--proof", proof_path, "Proof file");
    open->callback([&] {
        if (pp_path.empty()) throw CLI::RequiredError("--pp");
        const auto pp = load_params(pp_path);
        const auto result = vdf::vdf_open(pp, input, {parse_integer(challenge_text)});
        const Bytes encoded = vdf::encode_proof(pp, result.proof);
        std::cout << "qt: " << result.proof.qt << "\n|z|: " << result.proof.z.size() << "\nsteps: " << result.steps
                  << '\n';
        if (proof_path.empty()) {
            std::cout << "proof: " << to_hex(encoded) << '\n';
        } else {
            write_file(proof_path, encoded);
            std::cout << "proof: " << proof_path << '\n';
        }
    });

    auto* vverify = vdf_cmd->add_subcommand("verify", "Check (y, t, proof), or an --fs transcript");
    vverify->add_option("--pp", pp_path, "Parameter file")->check(CLI::ExistingFile);
    vverify->add_option("--input", input, "Binary input string x");
    vverify->add_option("--output", output_text, "Claimed y");
    vverify->add_option("--challenge", challenge_text, "Challenge t");
    vverify->add_option("--proof", proof_path, "Proof file")->check(CLI::ExistingFile);
    vverify->add_flag("--fs", fs_mode, "Verify a Fiat-Shamir transcript");
    vverify->add_option("--transcript", transcript_path, "Transcript file")->check(CLI::ExistingFile);
    vverify->callback([&] {
        if (fs_mode) {
            if (transcript_path.empty()) throw CLI::RequiredError("--transcript");
            std::optional<vdf::VdfParams> pp;
            if (!pp_path.empty()) pp = load_params(pp_path);
            std::optional<std::string_view> x;
            if (vverify->count("--input")) x = input;
            const auto v = fs::fs_verify_vdf(read_file(transcript_path), pp ? &*pp : nullptr, x);
            std::cout << "verdict: " << (v.accepted ? "accept" : "reject") << " (" << v.reason << ")\n";
            status = v.accepted ? kOk : kFail;
            return;
        }
        for (const char* flag : {"--pp", "--input", "--output", "--challenge", "--proof"}) {
            if (vverify->count(flag) == 0) throw CLI::RequiredError(flag);
        }
        const auto pp = load_params(pp_path);
        const auto proof = vdf::decode_proof(pp, read_file(proof_path));
        const auto r = vdf::vdf_verify_counted(pp, input, {parse_integer(output_text)},
                                               {parse_integer(challenge_text)}, proof);
        std::cout << "verdict: " << (r.accepted ? "accept" : "reject (" + r.reason + ")") << "\nsteps: " << r.steps
                  << '\n';
        status = r.accepted ? kOk : kFail;
    });

    auto* attack = vdf_cmd->add_subcommand("attack", "Forge an output and proof without running Eval");
    add_pp_input(attack);
    attack->add_option("--seed", seed, "Adversary randomness");
    attack->add_option("--challenge", challenge_text, "Challenge t (default: sampled from --seed)");
    attack->add_option("--proof", proof_path, "Forged proof file");
    attack->add_flag("--fs", fs_mode, "Forge a Fiat-Shamir transcript instead");
    attack->add_option("--transcript", transcript_path, "Transcript file (with --fs)");
    attack->callback([&] {
        if (pp_path.empty()) throw CLI::RequiredError("--pp");
        const auto pp = load_params(pp_path);
        if (fs_mode) {
            const auto forged = fs::fs_forge_vdf(pp, input, seed);
            std::cout << "y: " << forged.y.y << "\nt: " << forged.t.t << "\nadversary_steps: " << forged.eval_steps
                      << '\n';
            if (!transcript_path.empty()) write_file(transcript_path, forged.file);
            const auto v = fs::fs_verify_vdf(forged.file, &pp, input);
            std::cout << "verdict: " << (v.accepted ? "accept" : "reject") << " (" << v.reason << ")\n";
            status = v.accepted ? kOk : kFail;
            return;
        }
        const auto adversary = vdf::vdf_attack(pp, input, seed);
        vdf::Challenge t;
        if (challenge_text.empty()) {
            std::mt19937_64 rng(seed);
            t = vdf::sample_challenge(pp, rng);
        } else {
            t = {parse_integer(challenge_text)};
        }
        const auto proof = adversary.respond(t);
        if (!proof_path.empty()) write_file(proof_path, vdf::encode_proof(pp, proof));
        const auto r = vdf::vdf_verify_counted(pp, input, adversary.forged_output(), t, proof);
        std::cout << "start_state: " << adversary.start_state() << "\ny: " << adversary.forged_output().y
                  << "\nt: " << t.t << "\nadversary_steps: " << adversary.steps() << "\nverdict: "
                  << (r.accepted ? "accept" : "reject (" + r.reason + ")") << "\n";
        status = r.accepted ? kOk : kFail;
    });

    // spacehalt
    auto* halt = app.add_subcommand("spacehalt", "Decide whether a machine halts within space S");
    std::string machine_path;
    halt->add_option("--machine", machine_path, "Machine description")->required()->check(CLI::ExistingFile);
    halt->add_option("--input", input, "Binary input string x");
    halt->add_option("--space", space, "Tape cells S")->required();
    halt->callback([&] {
        const auto machine = tm::parse_machine(read_text(machine_path));
        const bool halts = tm::decide_spacehalt(machine, input, space);
        std::cout << "bound: " << tm::configuration_bound(machine.num_states(), space)
                  << "\nhalts: " << (halts ? "yes" : "no") << '\n';
    });

    // exp
    auto* exp = app.add_subcommand("exp", "Batch experiments");
    exp->require_subcommand(1);
    bool json = false;
    std::uint64_t trials = 0;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--trials", trials, "Number of trials");
        cmd->add_option("--seed", seed, "Experiment seed");
        cmd->add_flag("--json", json, "Emit one JSON document");
    };

    harness::SoundnessConfig sound;
    std::string strategy = "wrong-claim";
    auto* esound = exp->add_subcommand("soundness", "Cheating-prover accept rate against (3mn + n^2)/p");
    add_common(esound);
    esound->add_option("--n", sound.n, "Variables");
    esound->add_option("--m", sound.m, "Clauses");
    esound->add_option("--prime", sound.p, "Field modulus");
    esound->add_option("--strategy", strategy, "wrong-claim | random-round | constant-poly | honest");
    esound->add_option("--round", sound.round, "Round for random-round (0 = random per trial)");
    esound->add_option("--workers", sound.workers, "Concurrent trial workers")->check(CLI::Range(1u, 256u));
    esound->callback([&] {
        sound.trials = trials ? trials : 10000;
        sound.seed = seed;
        if (strategy != "honest") sound.strategy = sumcheck::parse_cheat_strategy(strategy);
        status = emit(harness::exp_soundness(sound), json);
    });

    harness::ParallelConfig par;
    auto* epar = exp->add_subcommand("parallel", "Sum of f over the Boolean cube with several worker counts");
    add_common(epar);
    epar->add_option("--n", par.n, "Variables (<= 20)");
    epar->add_option("--m", par.m, "Clauses (0 = 2n)");
    epar->add_option("--workers", par.workers, "Worker counts")->delimiter(',');
    epar->callback([&] {
        par.seed = seed;
        status = emit(harness::exp_parallel_sum(par), json);
    });

    harness::GrowthConfig growth;
    auto* egrowth = exp->add_subcommand("growth", "Eval and Open step counters as T grows");
    add_common(egrowth);
    egrowth->add_option("--lambda", growth.lambda, "Security parameter");
    egrowth->add_option("--space", growth.space, "Tape cells S");
    egrowth->add_option("--log2t", growth.log2_T, "log2 T values")->delimiter(',');
    egrowth->add_option("--input", growth.input, "Binary input string x");
    egrowth->callback([&] {
        growth.seed = seed;
        status = emit(harness::exp_vdf_growth(growth), json);
    });

    harness::AttackConfig att;
    auto* eatt = exp->add_subcommand("attack", "Forgery acceptance rate and adversary cost");
    add_common(eatt);
    eatt->add_option("--lambda", att.lambda, "Security parameter");
    eatt->add_option("--log2t", att.log2_T, "log2 T");
    eatt->add_option("--space", att.space, "Tape cells S");
    eatt->callback([&] {
        att.trials = trials ? trials : 100;
        att.seed = seed;
        status = emit(harness::exp_attack(att), json);
    });

    std::uint64_t delay = 1;
    auto* eminv = exp->add_subcommand("min-vars", "Smallest n whose operator chain has at least T rounds");
    eminv->add_option("--T", delay, "Delay T")->required();
    eminv->add_flag("--json", json, "Emit JSON");
    eminv->callback([&] {
        const std::size_t n = harness::min_formula_vars(delay);
        if (json) {
            std::cout << Json{{"T", delay}, {"n", n}, {"rounds", sumcheck::chain_length(n)}}.dump() << '\n';
        } else {
            std::cout << "T: " << delay << "\nn: " << n << "\nrounds: " << sumcheck::chain_length(n) << '\n';
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return status;
}
