#include "prelie/kernels.hpp"

#include <array>
#include <cstdlib>

namespace prelie::kernels {

ModTable ModTable::from_algebra(const Algebra& a) {
    if (a.field().kind() != FieldKind::prime) {
        throw Error("scan kernels need a prime field");
    }
    ModTable t;
    t.p = static_cast<int>(a.field().characteristic());
    t.n = static_cast<int>(a.dim());
    t.with_left.resize(a.dim());
    t.with_right.resize(a.dim());
    t.with_pair.resize(a.dim() * a.dim());
    for (const auto& e : a.table()) {
        Entry x{static_cast<int>(e.i), static_cast<int>(e.j), static_cast<int>(e.k),
                static_cast<int>(e.c.a().get_num().get_si())};
        t.entries.push_back(x);
        t.with_left[e.i].push_back(x);
        t.with_right[e.j].push_back(x);
        t.with_pair[e.i * a.dim() + e.j].push_back(x);
    }
    return t;
}

bool supports(const Algebra& a) {
    return a.field().kind() == FieldKind::prime && a.field().characteristic() <= max_modulus &&
           a.dim() <= static_cast<std::size_t>(max_dim);
}

void decode_index(std::uint64_t t, int p, int entries, int* digits) {
    for (int e = 0; e < entries; ++e) {
        digits[e] = static_cast<int>(t % static_cast<std::uint64_t>(p));
        t /= static_cast<std::uint64_t>(p);
    }
}

namespace {

constexpr int max_entries = max_dim * max_dim;

// Matrix entry (r, c) of the candidate held in `m`.
inline int at(const int* m, int n, int r, int c) { return m[r * n + c]; }

bool rb_holds(const ModTable& t, int lambda, const int* m) {
    const int n = t.n;
    const int p = t.p;
    std::array<int, max_dim> lhs{};
    std::array<int, max_dim> u{};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            lhs.fill(0);
            u.fill(0);
            for (const auto& e : t.entries) {
                lhs[e.k] = (lhs[e.k] + e.c * at(m, n, e.i, i) % p * at(m, n, e.j, j)) % p;
            }
            for (const auto& e : t.with_right[j]) {
                u[e.k] = (u[e.k] + e.c * at(m, n, e.i, i)) % p;
            }
            for (const auto& e : t.with_left[i]) {
                u[e.k] = (u[e.k] + e.c * at(m, n, e.j, j)) % p;
            }
            for (const auto& e : t.with_pair[i * n + j]) {
                u[e.k] = (u[e.k] + lambda * e.c) % p;
            }
            for (int k = 0; k < n; ++k) {
                int rhs = 0;
                for (int x = 0; x < n; ++x) {
                    rhs = (rhs + at(m, n, k, x) * u[x]) % p;
                }
                if (rhs != lhs[k]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool hom_holds(const ModTable& t, const int* m) {
    const int n = t.n;
    const int p = t.p;
    std::array<int, max_dim> lhs{};
    std::array<int, max_dim> rhs{};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            lhs.fill(0);
            rhs.fill(0);
            for (const auto& e : t.with_pair[i * n + j]) {
                for (int k = 0; k < n; ++k) {
                    lhs[k] = (lhs[k] + e.c * at(m, n, k, e.k)) % p;
                }
            }
            for (const auto& e : t.entries) {
                rhs[e.k] = (rhs[e.k] + e.c * at(m, n, e.i, i) % p * at(m, n, e.j, j)) % p;
            }
            for (int k = 0; k < n; ++k) {
                if (lhs[k] != rhs[k]) {
                    return false;
                }
            }
        }
    }
    return true;
}

void increment(int* digits, int count, int p) {
    for (int e = 0; e < count; ++e) {
        if (++digits[e] < p) {
            return;
        }
        digits[e] = 0;
    }
}

void scan_rb_scalar(const ModTable& t, int lambda, std::uint64_t begin, std::uint64_t end,
                    std::vector<std::uint64_t>& out) {
    std::array<int, max_entries> m{};
    const int count = t.n * t.n;
    decode_index(begin, t.p, count, m.data());
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (rb_holds(t, lambda, m.data())) {
            out.push_back(idx);
        }
        increment(m.data(), count, t.p);
    }
}

void scan_hom_scalar(const ModTable& t, int, std::uint64_t begin, std::uint64_t end,
                     std::vector<std::uint64_t>& out) {
    std::array<int, max_entries> m{};
    const int count = t.n * t.n;
    decode_index(begin, t.p, count, m.data());
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (hom_holds(t, m.data())) {
            out.push_back(idx);
        }
        increment(m.data(), count, t.p);
    }
}

} // namespace

const KernelSet& scalar_kernels() {
    static const KernelSet set{Isa::scalar, "scalar", &scan_rb_scalar, &scan_hom_scalar};
    return set;
}

} // namespace prelie::kernels
