#pragma once

// Brute-force scan kernels over GF(p). A candidate n x n matrix is encoded by
// its index t in [0, p^(n*n)): entry (r, c) is digit r*n + c of t in base p
// (least significant first). Every kernel reports the accepted indices of a
// range in increasing order; variants must agree exactly.

#include <cstdint>
#include <string_view>
#include <vector>

#include "prelie/algebra.hpp"

namespace prelie::kernels {

/// Structure constants of an algebra over GF(p) as small residues, plus the
/// groupings the scans need.
struct ModTable {
    struct Entry {
        int i, j, k, c;
    };

    int p = 0;
    int n = 0;
    std::vector<Entry> entries;
    std::vector<std::vector<Entry>> with_left;   // entries with e.i == i
    std::vector<std::vector<Entry>> with_right;  // entries with e.j == j
    std::vector<std::vector<Entry>> with_pair;   // entries with (e.i, e.j) == (i, j), index i*n + j

    static ModTable from_algebra(const Algebra& a);
};

/// Largest modulus and dimension the kernels accept.
inline constexpr int max_modulus = 127;
inline constexpr int max_dim = 8;

/// True when the algebra is over a prime field inside the kernel limits.
bool supports(const Algebra& a);

/// Scans candidate indices [begin, end) and appends accepted ones to `out`.
/// `lambda` is the weight residue (ignored by multiplicativity scans).
using ScanFn = void (*)(const ModTable& table, int lambda, std::uint64_t begin, std::uint64_t end,
                        std::vector<std::uint64_t>& out);

enum class Isa { scalar, avx2 };

struct KernelSet {
    Isa isa;
    std::string_view name;
    /// R(x)R(y) = R(R(x)y + xR(y) + lambda xy) on all basis pairs.
    ScanFn scan_rb;
    /// M(e_i e_j) = M(e_i) M(e_j) on all basis pairs.
    ScanFn scan_hom;
};

const KernelSet& scalar_kernels();
/// Null when the build lacks AVX2 code or the CPU lacks AVX2.
const KernelSet* avx2_kernels();
/// Every variant usable on this machine, scalar first.
std::vector<const KernelSet*> available_kernels();
/// Fastest usable variant. Setting PRELIE_ISA=scalar forces the reference.
const KernelSet& best_kernels();

/// Digits of candidate index t in base p, n*n of them.
void decode_index(std::uint64_t t, int p, int entries, int* digits);

} // namespace prelie::kernels
