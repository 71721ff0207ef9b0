#include "seqproof/sumcheck.hpp"

#include <future>
#include <vector>

namespace seqproof::sumcheck {

OperatorChain build_operator_chain(const Qbf& formula) {
    const std::size_t n = formula.num_vars();
    std::vector<Operator> ops;
    ops.reserve(chain_length(n));
    for (std::uint32_t i = 1; i <= n; ++i) {
        const OpKind q = formula.quantifier(i) == Quantifier::Exists ? OpKind::Sum : OpKind::Prod;
        ops.push_back({q, i, i});
        for (std::uint32_t j = 1; j <= i; ++j) ops.push_back({OpKind::Lin, j, i});
    }
    return OperatorChain(std::move(ops), n);
}

const FieldElement& Bindings::at(std::size_t variable) const {
    const auto& v = values_.at(variable);
    if (!v) throw UnboundVariable(variable);
    return *v;
}

std::vector<FieldElement> Bindings::point() const {
    std::vector<FieldElement> out;
    out.reserve(num_vars());
    for (std::size_t i = 1; i <= num_vars(); ++i) out.push_back(at(i));
    return out;
}

namespace {

// Mutable working copy of the bindings. Every variable reachable at the
// leaves is bound, which the precheck in eval_chain guarantees.
struct Point {
    std::vector<std::optional<FieldElement>> values;  // index 1..n
};

unsigned spawn_depth_for(unsigned workers) {
    unsigned depth = 0;
    while ((1u << depth) < workers && depth < 16) ++depth;
    return depth;
}

class ChainEvaluator {
public:
    ChainEvaluator(std::span<const Operator> ops, const ArithPoly& f, bool shortcut)
        : ops_(ops), f_(f), shortcut_(shortcut), one_(FieldElement::one(f.modulus())) {}

    FieldElement eval(std::size_t k, Point& point, unsigned spawn_depth) const {
        if (k == ops_.size()) return leaf(point);
        const Operator& op = ops_[k];
        auto& slot = point.values[op.variable];

        if (op.kind == OpKind::Lin) {
            const FieldElement b = *slot;
            if (shortcut_ && (b.residue() <= 1)) return eval(k + 1, point, spawn_depth);
            const auto [g0, g1] = branches(k, point, spawn_depth, op.variable);
            slot = b;
            return b * g1 + (one_ - b) * g0;
        }

        const auto saved = slot;
        const auto [g0, g1] = branches(k, point, spawn_depth, op.variable);
        slot = saved;
        return op.kind == OpKind::Sum ? g0 + g1 : g0 * g1;
    }

private:
    std::pair<FieldElement, FieldElement> branches(std::size_t k, Point& point, unsigned spawn_depth,
                                                   std::uint32_t variable) const {
        const FieldElement zero = FieldElement::zero(f_.modulus());
        if (spawn_depth > 0) {
            Point other = point;
            other.values[variable] = one_;
            auto hi = std::async(std::launch::async, [this, k, spawn_depth, other = std::move(other)]() mutable {
                return eval(k + 1, other, spawn_depth - 1);
            });
            point.values[variable] = zero;
            FieldElement g0 = eval(k + 1, point, spawn_depth - 1);
            return {g0, hi.get()};
        }
        point.values[variable] = zero;
        FieldElement g0 = eval(k + 1, point, 0);
        point.values[variable] = one_;
        FieldElement g1 = eval(k + 1, point, 0);
        return {g0, g1};
    }

    FieldElement leaf(const Point& point) const {
        std::vector<FieldElement> coords;
        coords.reserve(f_.num_vars());
        for (std::size_t i = 1; i <= f_.num_vars(); ++i) coords.push_back(*point.values[i]);
        return f_.evaluate(coords);
    }

    std::span<const Operator> ops_;
    const ArithPoly& f_;
    bool shortcut_;
    FieldElement one_;
};

}  // namespace

FieldElement eval_chain(std::span<const Operator> suffix, const Bindings& bindings, const ArithPoly& f,
                        EvalOptions options) {
    const std::size_t n = f.num_vars();
    if (bindings.num_vars() != n) throw SumcheckError("bindings do not match the polynomial's variable count");

    std::vector<bool> bound(n + 1, false);
    for (std::size_t i = 1; i <= n; ++i) bound[i] = bindings.is_bound(i);
    for (const auto& op : suffix) {
        if (op.variable < 1 || op.variable > n) throw SumcheckError("operator variable out of range");
        if (op.kind == OpKind::Lin && !bound[op.variable]) throw UnboundVariable(op.variable);
        bound[op.variable] = true;
    }
    for (std::size_t i = 1; i <= n; ++i) {
        if (!bound[i]) throw UnboundVariable(i);
    }

    Point point{std::vector<std::optional<FieldElement>>(n + 1)};
    for (std::size_t i = 1; i <= n; ++i) {
        point.values[i] = bindings.get(i);
        if (point.values[i] && point.values[i]->modulus() != f.modulus()) {
            throw FieldError("binding modulus differs from the polynomial's");
        }
    }
    ChainEvaluator evaluator(suffix, f, options.boolean_shortcut);
    return evaluator.eval(0, point, spawn_depth_for(options.workers));
}

std::size_t round_degree_bound(const OperatorChain& chain, std::size_t position, std::size_t m) {
    if (position >= chain.size()) throw SumcheckError("round position out of range");
    const Operator& op = chain[position];
    if (op.kind != OpKind::Lin) return 1;
    return op.block == chain.num_vars() ? 3 * m : 2;
}

}  // namespace seqproof::sumcheck
