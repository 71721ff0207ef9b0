#include "seqproof/sumcheck.hpp"

namespace seqproof::sumcheck {

FieldElement RandomChallenges::challenge(std::size_t, const UniPoly&) { return FieldElement(dist_(rng_), p_); }

std::string to_string(RejectReason reason) {
    switch (reason) {
        case RejectReason::None: return "accepted";
        case RejectReason::ZeroClaim: return "zero claim";
        case RejectReason::DegreeOverflow: return "degree overflow";
        case RejectReason::CaseMismatch: return "case-equation mismatch";
        case RejectReason::FinalMismatch: return "final-evaluation mismatch";
        case RejectReason::ChallengeMismatch: return "challenge mismatch";
        case RejectReason::Malformed: return "malformed transcript";
    }
    return "unknown";
}

}  // namespace seqproof::sumcheck
