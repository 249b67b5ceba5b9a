#include "ncbf/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace ncbf::kernels {

#ifdef NCBF_HAVE_AVX2_TU
const Table& avx2_table();  // defined in kernels_avx2.cpp
#endif

bool cpu_supports_avx2() {
#if defined(NCBF_HAVE_AVX2_TU) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Table* table_for(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return &scalar_table();
        case Backend::avx2:
#ifdef NCBF_HAVE_AVX2_TU
            if (cpu_supports_avx2()) return &avx2_table();
#endif
            return nullptr;
    }
    return nullptr;
}

namespace {

const Table& pick_active() {
    if (const char* env = std::getenv("NCBF_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return scalar_table();
        if (std::strcmp(env, "avx2") == 0) {
            if (const Table* t = table_for(Backend::avx2)) return *t;
        }
    }
    if (const Table* t = table_for(Backend::avx2)) return *t;
    return scalar_table();
}

}  // namespace

const Table& active() {
    static const Table& t = pick_active();
    return t;
}

}  // namespace ncbf::kernels
