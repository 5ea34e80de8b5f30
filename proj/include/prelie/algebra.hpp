#pragma once

// Structure-constant algebras, the Burde family I_n and its relatives,
// polynomial identity checks, ideals, and finite-field simplicity.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "prelie/linalg.hpp"
#include "prelie/report.hpp"

namespace prelie {

/// e_i * e_j contributes c * e_k. Indices are 0-based in the C++ API and
/// 1-based in JSON and reports.
struct StructureConstant {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Scalar c;

    friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Finite-dimensional algebra given by structure constants. The sparse table
/// is kept sorted by (i, j, k) with zero coefficients dropped and no repeats,
/// so two algebras with the same product compare equal.
class Algebra {
public:
    Algebra() = default;
    /// Repeated (i, j, k) entries are summed.
    Algebra(Field field, std::size_t dim, std::vector<StructureConstant> table);

    Field field() const { return field_; }
    std::size_t dim() const { return dim_; }
    std::span<const StructureConstant> table() const { return table_; }
    bool has_zero_product() const { return table_.empty(); }

    Vector basis(std::size_t i) const { return Vector::unit(field_, dim_, i); }
    /// e_i * e_j.
    const Vector& basis_product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
    Vector multiply(const Vector& x, const Vector& y) const;

    /// Matrix of y -> e_i * y.
    const Matrix& left_basis(std::size_t i) const { return left_[i]; }
    /// Matrix of y -> y * e_i.
    const Matrix& right_basis(std::size_t i) const { return right_[i]; }

    friend bool operator==(const Algebra& x, const Algebra& y) {
        return x.field_ == y.field_ && x.dim_ == y.dim_ && x.table_ == y.table_;
    }

private:
    Field field_;
    std::size_t dim_ = 0;
    std::vector<StructureConstant> table_;
    std::vector<Vector> products_;
    std::vector<Matrix> left_;
    std::vector<Matrix> right_;
};

Vector multiply(const Algebra& a, const Vector& x, const Vector& y);

/// Matrix of the right multiplication R_x : y -> y * x.
Matrix right_multiplication(const Algebra& a, const Vector& x);
/// Matrix of the left multiplication L_x : y -> x * y.
Matrix left_multiplication(const Algebra& a, const Vector& x);
Scalar trace(const Matrix& m);

enum class IdentityKind {
    pre_lie,
    novikov,
    flexible,
    commutative,
    third_power_associative,
    lie,  // anticommutative + Jacobi
};

/// Multilinear identities are checked on basis tuples. Flexibility also checks
/// the diagonal (x,y,x) on basis pairs so the verdict is valid in every
/// characteristic. Third-power associativity compares every coefficient of
/// (xx)x - x(xx) for the generic x = sum t_i e_i with zero.
Report check_identity(const Algebra& a, IdentityKind kind);

/// (xx)x = x(xx) for every x of a finite algebra, by exhaustion.
Report check_third_power_associative_exhaustive(const Algebra& a, std::uint64_t cap = 1'000'000);

/// I_n: e_n e_n = 2e_n, e_n e_j = e_j, e_j e_j = e_n for j < n.
Algebra build_In(Field field, std::size_t n);
/// The size of I_n when `a` is literally I_n over its field.
std::optional<std::size_t> burde_dimension(const Algebra& a);

/// u o v = (u,v) a + (u,a) v with the standard dot product; rejects a = 0.
Algebra build_example1(Field field, std::size_t n, const Vector& a);

struct UpperTriangular {
    Algebra algebra;
    /// Positions of the first-row units e_{11}, ..., e_{1n}.
    std::vector<std::size_t> first_row;
    /// Position of e_{ij} (0-based i <= j).
    static std::size_t index(std::size_t n, std::size_t i, std::size_t j);
};

/// Upper-triangular n x n matrices under x o y = xy + tau(xy^T + yx^T),
/// basis e_{ij} (i <= j) in row-major order.
UpperTriangular build_Un_circ(Field field, std::size_t n);

/// Restricts to the span of the listed basis vectors (new e_k = old
/// e_{indices[k]}); throws when a product leaves the span.
Algebra extract_subalgebra(const Algebra& a, std::span<const std::size_t> indices);

/// Relabels the basis: old e_i becomes new e_{perm[i]}.
Algebra permute_basis(const Algebra& a, std::span<const std::size_t> perm);

/// Basis e_0..e_m with e_0 e_0 = 2e_0, e_0 e_j = e_j, e_j e_j = e_0; e_i is
/// stored at position i.
Algebra build_I_infinity_truncation(Field field, std::size_t m);

/// (ab + ba)/2; rejects characteristic 2.
Algebra plus_algebra(const Algebra& a);
/// ab - ba.
Algebra minus_algebra(const Algebra& a);
/// A + F1 with the unit appended as the last basis vector.
Algebra unital_extension(const Algebra& a);

/// A two-sided ideal of a particular algebra.
class Ideal {
public:
    /// Verifies closure under left and right multiplication by the basis.
    Ideal(std::shared_ptr<const Algebra> algebra, Subspace space);

    const Algebra& algebra() const { return *algebra_; }
    const Subspace& space() const { return space_; }
    bool is_proper() const { return space_.dim() < algebra_->dim(); }

private:
    std::shared_ptr<const Algebra> algebra_;
    Subspace space_;
};

/// True when w is closed under multiplication by every basis vector on both sides.
bool is_ideal(const Algebra& a, const Subspace& w);
/// True when w * w is contained in w.
bool is_subalgebra(const Algebra& a, const Subspace& w);

/// Smallest two-sided ideal containing the seed.
Ideal ideal_closure(const Algebra& a, const Subspace& seed);

struct SimplicityResult {
    Report report;
    /// A proper nonzero ideal when the algebra is not simple.
    std::optional<Subspace> witness_ideal;
};

/// Exhaustive simplicity test over a finite field: nonzero product and every
/// projective point generates the whole algebra. Throws if q^n exceeds cap.
/// The first witness in canonical order is reported, independent of workers.
SimplicityResult is_simple_finite(const Algebra& a, std::uint64_t cap = 1'000'000, unsigned workers = 1);

} // namespace prelie
