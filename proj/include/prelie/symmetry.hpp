#pragma once

// Automorphisms and derivations of structure-constant algebras, and the
// explicit relation systems that characterize them on I_n.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prelie/algebra.hpp"

namespace prelie {

/// Knobs shared by every exhaustive matrix scan.
struct ScanOptions {
    /// Upper bound on the number of candidates (q^(n*n)).
    std::uint64_t cap = 10'000'000;
    unsigned workers = 1;
    /// Use the GF(p) scan kernels when the algebra allows it.
    bool use_kernels = true;
};

/// phi(e_i e_j) = phi(e_i) phi(e_j) on every basis pair (column j of m is phi(e_j)).
Report is_endomorphism(const Algebra& a, const Matrix& m);
/// Invertible endomorphism.
Report is_automorphism(const Algebra& a, const Matrix& m);
/// d(e_i e_j) = d(e_i) e_j + e_i d(e_j) on every basis pair.
Report is_derivation(const Algebra& a, const Matrix& d);

/// Row-major flattening used for the derivation space: entry (r, c) sits at r*n + c.
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, std::size_t n);

/// Kernel of the linear Leibniz system, as a subspace of F^(n*n).
Subspace derivation_algebra(const Algebra& a);
/// The canonical basis of derivation_algebra as matrices.
std::vector<Matrix> derivation_basis(const Algebra& a);

/// Block-embeds an orthogonal (n-1)x(n-1) matrix with e_n fixed.
Matrix automorphism_from_orthogonal(const Matrix& q);
/// Block-embeds a skew-symmetric (n-1)x(n-1) matrix with zero border.
Matrix derivation_from_skew(const Matrix& s);

/// Candidate index t <-> matrix over a finite field (entry (r, c) is digit r*n + c).
Matrix matrix_from_index(Field field, std::size_t n, std::uint64_t t);
std::uint64_t index_of_matrix(const Matrix& m);
/// q^(n*n), or throws CapExceededError when above cap.
std::uint64_t candidate_count(Field field, std::size_t n, std::uint64_t cap);

/// Every automorphism of a finite algebra, in increasing candidate index.
std::vector<Matrix> enumerate_automorphisms_finite(const Algebra& a, const ScanOptions& opts = {});

enum class MapMode { automorphism, derivation };

struct CandidateMap {
    Matrix matrix;
    MapMode mode = MapMode::automorphism;
};

struct NamedResidual {
    std::string name;
    Scalar value;
};

/// Evaluates every scalar relation of the I_n automorphism (or derivation)
/// system on the column split phi(e_i) = v_i + alpha_i e_n. All residuals
/// vanish exactly when the map is multiplicative (resp. a derivation).
/// Throws if `a` is not I_n.
std::vector<NamedResidual> theorem1_residuals(const Algebra& a, const CandidateMap& c);

bool all_zero(std::span<const NamedResidual> residuals);
/// First nonzero residual, or nullptr.
const NamedResidual* first_nonzero(std::span<const NamedResidual> residuals);

} // namespace prelie
