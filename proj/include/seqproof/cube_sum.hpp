#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqproof/field.hpp"
#include "seqproof/qbf.hpp"

namespace seqproof::simd {

/// Kernels counting satisfying assignments of a CNF matrix over a range of
/// the Boolean cube. All three return identical counts.
enum class KernelKind : std::uint8_t { Scalar, Swar64, Avx2 };

std::string to_string(KernelKind kind);
KernelKind parse_kernel(const std::string& name);

bool kernel_available(KernelKind kind);
/// Best available kernel, unless SEQPROOF_KERNEL=scalar|swar64|avx2 names another available one.
KernelKind select_kernel();
std::vector<KernelKind> available_kernels();

/// Packed clause form shared by the kernels: literal i of clause c is
/// variables[3c+i] (0-based) and negated[3c+i].
struct PackedCnf {
    unsigned num_vars = 0;
    std::vector<std::uint8_t> variables;
    std::vector<std::uint8_t> negated;

    std::size_t num_clauses() const { return variables.size() / 3; }
};

PackedCnf pack(const Qbf& formula);

inline constexpr unsigned kCubeVarLimit = 30;

/// Number of satisfying assignments z in [begin, end), z's bit i holding x_{i+1}.
std::uint64_t count_scalar(const PackedCnf& cnf, std::uint64_t begin, std::uint64_t end);
/// begin and end multiples of 64 (or end = 2^n when n < 6).
std::uint64_t count_swar64(const PackedCnf& cnf, std::uint64_t begin, std::uint64_t end);
/// begin and end multiples of 256; only compiled in on x86-64.
std::uint64_t count_avx2(const PackedCnf& cnf, std::uint64_t begin, std::uint64_t end);

struct CubeSumOptions {
    unsigned workers = 1;
    std::optional<KernelKind> kernel;  // default: select_kernel()
};

/// Sum of f(z) over {0,1}^n, split into `workers` contiguous chunks counted
/// concurrently. Throws std::invalid_argument if n > kCubeVarLimit or workers == 0.
std::uint64_t cube_count(const Qbf& formula, CubeSumOptions options = {});
FieldElement cube_sum(const Qbf& formula, Prime p, CubeSumOptions options = {});

/// Reference route through the arithmetized polynomial at every Boolean point.
FieldElement cube_sum_field(const Qbf& formula, Prime p);

}  // namespace seqproof::simd
