// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <array>

#include "kernel_registry.hpp"

namespace prelie::kernels {

namespace {

constexpr int lanes = 8;
constexpr int max_entries = max_dim * max_dim;

struct ModP {
    __m256i p;
    __m256i p_minus_1;
    __m256 inv;
};

ModP make_mod(int p) {
    return {_mm256_set1_epi32(p), _mm256_set1_epi32(p - 1), _mm256_set1_ps(1.0f / static_cast<float>(p))};
}

// x in [0, 2^24): the float quotient is off by at most one, fixed below.
inline __m256i reduce(__m256i x, const ModP& m) {
    __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(x), m.inv));
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, m.p));
    __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
    r = _mm256_add_epi32(r, _mm256_and_si256(neg, m.p));
    __m256i over = _mm256_cmpgt_epi32(r, m.p_minus_1);
    return _mm256_sub_epi32(r, _mm256_and_si256(over, m.p));
}

inline __m256i addmod(__m256i a, __m256i b, const ModP& m) {
    __m256i s = _mm256_add_epi32(a, b);
    __m256i over = _mm256_cmpgt_epi32(s, m.p_minus_1);
    return _mm256_sub_epi32(s, _mm256_and_si256(over, m.p));
}

inline __m256i mulmod(__m256i a, __m256i b, const ModP& m) { return reduce(_mm256_mullo_epi32(a, b), m); }

// Fills 8 lanes of candidate matrices starting at the odometer state and
// advances the odometer; lanes past `valid` are junk and masked off.
void fill_lanes(int* digits, int count, int p, int valid, std::array<__m256i, max_entries>& mat) {
    alignas(32) std::array<std::array<int, lanes>, max_entries> buf{};
    for (int l = 0; l < valid; ++l) {
        for (int e = 0; e < count; ++e) {
            buf[e][l] = digits[e];
        }
        for (int e = 0; e < count; ++e) {
            if (++digits[e] < p) {
                break;
            }
            digits[e] = 0;
        }
    }
    for (int e = 0; e < count; ++e) {
        mat[e] = _mm256_load_si256(reinterpret_cast<const __m256i*>(buf[e].data()));
    }
}

__m256i lane_mask(int valid) {
    alignas(32) std::array<int, lanes> m{};
    for (int l = 0; l < valid; ++l) {
        m[l] = -1;
    }
    return _mm256_load_si256(reinterpret_cast<const __m256i*>(m.data()));
}

void emit(__m256i ok, std::uint64_t base, std::vector<std::uint64_t>& out) {
    const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(ok));
    for (int l = 0; l < lanes; ++l) {
        if (bits & (1 << l)) {
            out.push_back(base + static_cast<std::uint64_t>(l));
        }
    }
}

__m256i rb_lanes(const ModTable& t, int lambda, const std::array<__m256i, max_entries>& m, __m256i ok,
                 const ModP& mp) {
    const int n = t.n;
    auto at = [&](int r, int c) { return m[r * n + c]; };
    const __m256i zero = _mm256_setzero_si256();
    std::array<__m256i, max_dim> lhs;
    std::array<__m256i, max_dim> u;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            lhs.fill(zero);
            u.fill(zero);
            for (const auto& e : t.entries) {
                __m256i term = mulmod(_mm256_set1_epi32(e.c), mulmod(at(e.i, i), at(e.j, j), mp), mp);
                lhs[e.k] = addmod(lhs[e.k], term, mp);
            }
            for (const auto& e : t.with_right[j]) {
                u[e.k] = addmod(u[e.k], mulmod(_mm256_set1_epi32(e.c), at(e.i, i), mp), mp);
            }
            for (const auto& e : t.with_left[i]) {
                u[e.k] = addmod(u[e.k], mulmod(_mm256_set1_epi32(e.c), at(e.j, j), mp), mp);
            }
            for (const auto& e : t.with_pair[i * n + j]) {
                u[e.k] = addmod(u[e.k], _mm256_set1_epi32(lambda * e.c % t.p), mp);
            }
            for (int k = 0; k < n; ++k) {
                // n products below p^2 each: well inside the exact range.
                __m256i acc = zero;
                for (int x = 0; x < n; ++x) {
                    acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(at(k, x), u[x]));
                }
                ok = _mm256_and_si256(ok, _mm256_cmpeq_epi32(reduce(acc, mp), lhs[k]));
            }
            if (_mm256_testz_si256(ok, ok)) {
                return ok;
            }
        }
    }
    return ok;
}

__m256i hom_lanes(const ModTable& t, const std::array<__m256i, max_entries>& m, __m256i ok, const ModP& mp) {
    const int n = t.n;
    auto at = [&](int r, int c) { return m[r * n + c]; };
    const __m256i zero = _mm256_setzero_si256();
    std::array<__m256i, max_dim> lhs;
    std::array<__m256i, max_dim> rhs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            lhs.fill(zero);
            rhs.fill(zero);
            for (const auto& e : t.with_pair[i * n + j]) {
                const __m256i c = _mm256_set1_epi32(e.c);
                for (int k = 0; k < n; ++k) {
                    lhs[k] = addmod(lhs[k], mulmod(c, at(k, e.k), mp), mp);
                }
            }
            for (const auto& e : t.entries) {
                __m256i term = mulmod(_mm256_set1_epi32(e.c), mulmod(at(e.i, i), at(e.j, j), mp), mp);
                rhs[e.k] = addmod(rhs[e.k], term, mp);
            }
            for (int k = 0; k < n; ++k) {
                ok = _mm256_and_si256(ok, _mm256_cmpeq_epi32(lhs[k], rhs[k]));
            }
            if (_mm256_testz_si256(ok, ok)) {
                return ok;
            }
        }
    }
    return ok;
}

template <bool Rb>
void scan(const ModTable& t, int lambda, std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& out) {
    const ModP mp = make_mod(t.p);
    const int count = t.n * t.n;
    std::array<int, max_entries> digits{};
    decode_index(begin, t.p, count, digits.data());
    std::array<__m256i, max_entries> mat;
    for (std::uint64_t base = begin; base < end; base += lanes) {
        const int valid = static_cast<int>(std::min<std::uint64_t>(lanes, end - base));
        fill_lanes(digits.data(), count, t.p, valid, mat);
        __m256i ok = lane_mask(valid);
        ok = Rb ? rb_lanes(t, lambda, mat, ok, mp) : hom_lanes(t, mat, ok, mp);
        emit(ok, base, out);
    }
}

void scan_rb_avx2(const ModTable& t, int lambda, std::uint64_t begin, std::uint64_t end,
                  std::vector<std::uint64_t>& out) {
    scan<true>(t, lambda, begin, end, out);
}

void scan_hom_avx2(const ModTable& t, int lambda, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& out) {
    scan<false>(t, lambda, begin, end, out);
}

} // namespace

const KernelSet& avx2_kernel_set() {
    static const KernelSet set{Isa::avx2, "avx2", &scan_rb_avx2, &scan_hom_avx2};
    return set;
}

} // namespace prelie::kernels
