#include <cstdlib>
#include <future>
#include <stdexcept>

#include "seqproof/cube_sum.hpp"

namespace seqproof::simd {

#if !SEQPROOF_HAVE_AVX2_KERNEL
std::uint64_t count_avx2(const PackedCnf&, std::uint64_t, std::uint64_t) {
    throw std::logic_error("AVX2 kernel not compiled in");
}
#endif

std::string to_string(KernelKind kind) {
    switch (kind) {
        case KernelKind::Scalar: return "scalar";
        case KernelKind::Swar64: return "swar64";
        case KernelKind::Avx2: return "avx2";
    }
    return "unknown";
}

KernelKind parse_kernel(const std::string& name) {
    if (name == "scalar") return KernelKind::Scalar;
    if (name == "swar64") return KernelKind::Swar64;
    if (name == "avx2") return KernelKind::Avx2;
    throw std::invalid_argument("unknown kernel '" + name + "'");
}

bool kernel_available(KernelKind kind) {
    if (kind != KernelKind::Avx2) return true;
#if SEQPROOF_HAVE_AVX2_KERNEL
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

std::vector<KernelKind> available_kernels() {
    std::vector<KernelKind> out;
    for (auto k : {KernelKind::Scalar, KernelKind::Swar64, KernelKind::Avx2}) {
        if (kernel_available(k)) out.push_back(k);
    }
    return out;
}

KernelKind select_kernel() {
    if (const char* env = std::getenv("SEQPROOF_KERNEL"); env && *env) {
        const KernelKind k = parse_kernel(env);
        if (kernel_available(k)) return k;
    }
    return kernel_available(KernelKind::Avx2) ? KernelKind::Avx2 : KernelKind::Swar64;
}

namespace {

std::uint64_t run_kernel(KernelKind kind, const PackedCnf& cnf, std::uint64_t begin, std::uint64_t end) {
    switch (kind) {
        case KernelKind::Scalar: return count_scalar(cnf, begin, end);
        case KernelKind::Swar64: return count_swar64(cnf, begin, end);
        case KernelKind::Avx2: return count_avx2(cnf, begin, end);
    }
    return 0;
}

}  // namespace

std::uint64_t cube_count(const Qbf& formula, CubeSumOptions options) {
    if (formula.num_vars() > kCubeVarLimit) throw std::invalid_argument("cube too large");
    if (options.workers == 0) throw std::invalid_argument("workers must be positive");
    KernelKind kind = options.kernel.value_or(select_kernel());
    if (!kernel_available(kind)) throw std::invalid_argument("kernel " + to_string(kind) + " unavailable");

    const PackedCnf cnf = pack(formula);
    const std::uint64_t size = std::uint64_t{1} << cnf.num_vars;
    std::uint64_t grain = 1;
    if (kind == KernelKind::Avx2 && cnf.num_vars < 8) kind = KernelKind::Swar64;
    if (kind == KernelKind::Swar64) grain = cnf.num_vars < 6 ? size : 64;
    if (kind == KernelKind::Avx2) grain = 256;

    const std::uint64_t units = size / grain;
    const std::uint64_t chunks = std::min<std::uint64_t>(options.workers, units);
    std::vector<std::future<std::uint64_t>> parts;
    std::uint64_t total = 0;
    for (std::uint64_t w = 0; w < chunks; ++w) {
        const std::uint64_t begin = units * w / chunks * grain;
        const std::uint64_t end = units * (w + 1) / chunks * grain;
        if (w + 1 == chunks) {
            total += run_kernel(kind, cnf, begin, end);
        } else {
            parts.push_back(std::async(std::launch::async, run_kernel, kind, std::cref(cnf), begin, end));
        }
    }
    for (auto& part : parts) total += part.get();
    return total;
}

FieldElement cube_sum(const Qbf& formula, Prime p, CubeSumOptions options) {
    return FieldElement(cube_count(formula, options) % p.value(), p);
}

}  // namespace seqproof::simd
