#include "kernels_impl.hpp"

#include <cstdlib>
#include <string_view>

namespace xmscarf::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(XMSCARF_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable* select() {
    if (const char* env = std::getenv("XMSCARF_SIMD"); env && std::string_view(env) == "scalar") {
        return &scalar_table();
    }
    if (const KernelTable* t = avx2_table()) return t;
    return &scalar_table();
}

} // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{Isa::scalar, detail::fd2_interior_scalar,
                                   detail::sturm_count4_scalar, detail::weighted_dot_scalar};
    return table;
}

const KernelTable* avx2_table() {
#if defined(XMSCARF_HAVE_AVX2)
    static const KernelTable table{Isa::avx2, detail::fd2_interior_avx2,
                                   detail::sturm_count4_avx2, detail::weighted_dot_avx2};
    static const bool usable = cpu_has_avx2();
    return usable ? &table : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() {
    static const KernelTable* chosen = select();
    return *chosen;
}

const char* isa_name(Isa isa) {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "unknown";
}

} // namespace xmscarf::kernels
