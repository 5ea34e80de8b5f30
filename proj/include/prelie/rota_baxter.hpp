#pragma once

// Rota-Baxter operators R(x)R(y) = R(R(x)y + xR(y) + lambda xy) on
// structure-constant algebras, with the full structure theory on I_n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prelie/symmetry.hpp"

namespace prelie {

/// Column j of `matrix` holds R(e_j). On I_n the column split is
/// R(e_j) = v_j + alpha_j e_n.
struct RBOperator {
    Matrix matrix;
    Scalar weight;

    friend bool operator==(const RBOperator&, const RBOperator&) = default;
};

/// Checks the axiom on every basis pair; the witness is the first failing pair.
Report is_rb(const Algebra& a, const RBOperator& r);

/// Every scalar relation of the I_n operator system, grouped as
/// rb.ij1 / rb.ij2 / rb.in1 / rb.in2 / rb.nj1 / rb.nj2 / rb.nn1 / rb.nn2.
/// All vanish exactly when is_rb accepts. Throws if `a` is not I_n.
std::vector<NamedResidual> rb_residuals_In(const Algebra& a, const RBOperator& r);

/// -R - lambda*E, same weight.
RBOperator phi_conjugate(const RBOperator& r);

/// A direct-sum decomposition into two subalgebras. `w`/`u` are filled in when
/// the decomposition has been put in the I_n normal form.
struct Decomposition {
    Subspace a1;
    Subspace a2;
    std::optional<Subspace> w;
    std::optional<Subspace> u;
};

/// -lambda times the projection onto a2 along a1. Throws with a witness when
/// a part is not a subalgebra or the sum is not direct.
RBOperator splitting_from_decomposition(const Algebra& a, const Decomposition& d, const Scalar& lambda);

/// (ker R, ker(R + lambda E)).
Decomposition kernel_decomposition(const RBOperator& r);

/// A^2 + lambda A = 0.
bool is_splitting(const RBOperator& r);

struct Theorem2Verdict {
    Report report;
    bool r2_plus_lr_zero = false;
    bool ata_zero = false;
    /// B^T B = 0 for B = -A - lambda E.
    bool phi_ata_zero = false;
};

/// R^2 + lambda R = 0 together with A^T A = 0 or B^T B = 0 (B the matrix of
/// phi(R)). Throws if R is not an RB operator on `a`.
Theorem2Verdict theorem2_check(const Algebra& a, const RBOperator& r);

enum class RBCase { trivial, case1, case2 };

std::string to_string(RBCase c);

struct CaseCertificate {
    RBCase kind = RBCase::trivial;
    /// Case 1: S = A + (lambda/2)E and S^2 - (lambda^2/4)E.
    std::optional<Matrix> s;
    std::optional<Matrix> s_square_defect;
    /// Case 2: alpha_n (0 or -lambda), and whether phi was applied to reach alpha_n = 0.
    std::optional<Scalar> alpha_n;
    bool phi_normalized = false;
    /// Fails when the certificate does not recompute to zero.
    Report check;
};

/// Splits by v_n = 0 / v_n != 0 and recomputes the certificate of the case.
/// Throws if `a` is not I_n or R is not RB.
CaseCertificate classify_case(const Algebra& a, const RBOperator& r);

/// Every weight-lambda RB operator of a finite algebra, in candidate order.
std::vector<RBOperator> enumerate_rb_finite(const Algebra& a, const Scalar& lambda, const ScanOptions& opts = {});

/// Least m with R^k (R + lambda E)^(m-k) = 0 for some k, for each operator.
std::optional<unsigned> rb_index_of(const RBOperator& r);
/// Maximum of rb_index_of over the enumeration; nullopt means infinite.
std::optional<unsigned> rb_index_finite(const Algebra& a, const Scalar& lambda, const ScanOptions& opts = {});

enum class DecompositionShape {
    /// One part contains e_n and the other is Lagrangian.
    normal_form,
    /// Neither part contains e_n and both are Lagrangian.
    both_lagrangian,
    /// A part without e_n fails to be Lagrangian.
    violation,
};

std::string to_string(DecompositionShape s);

struct ClassifiedDecomposition {
    Decomposition decomposition;
    DecompositionShape shape = DecompositionShape::violation;
};

/// Every ordered pair (a1, a2) of subalgebras of I_n with a1 + a2 direct and
/// equal to the whole space, classified by where e_n sits.
std::vector<ClassifiedDecomposition> lagrangian_decompositions_finite(const Algebra& a,
                                                                      const ScanOptions& opts = {});

/// R(e_1) = e_n + (1/sqrt(2-n)) (e_2 + ... + e_{n-1}), zero elsewhere, weight 0; n >= 3.
RBOperator example4_operator(Field field, std::size_t n);
/// The skew weight-0 operator on I_4 built from i = sqrt(-1).
RBOperator example5_operator(Field field);
/// I_2 = Span{e_1 + sign*i e_2} + Span{e_2}; sign is +1 or -1.
Decomposition example6_decomposition(Field field, int sign);

/// Over Q: A^T A = 0 forces A = 0 through the diagonal sums of squares.
Report totally_real_mechanism_check(const Matrix& a);

/// The matrix of the extension to A + F1 with 1 mapped to at_unit * 1.
Matrix unital_lift(const Matrix& m, const Scalar& at_unit);

} // namespace prelie
