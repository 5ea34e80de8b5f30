#pragma once

// Dense exact linear algebra over any prelie::Field.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prelie/field.hpp"

namespace prelie {

/// Coordinate vector of fixed length over a field. Indices are 0-based.
class Vector {
public:
    Vector() = default;
    Vector(Field field, std::size_t n);
    Vector(Field field, std::vector<Scalar> entries);

    static Vector unit(Field field, std::size_t n, std::size_t i);

    Field field() const { return field_; }
    std::size_t size() const { return entries_.size(); }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }
    Scalar& operator[](std::size_t i) { return entries_[i]; }
    std::span<const Scalar> entries() const { return entries_; }

    bool is_zero() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& s);
    Vector operator-() const;
    friend Vector operator+(Vector x, const Vector& y) { return x += y; }
    friend Vector operator-(Vector x, const Vector& y) { return x -= y; }
    friend Vector operator*(const Scalar& s, Vector x) { return x *= s; }

    friend bool operator==(const Vector& x, const Vector& y) {
        return x.field_ == y.field_ && x.entries_ == y.entries_;
    }

    std::string to_string() const;

private:
    Field field_;
    std::vector<Scalar> entries_;
};

/// Row-major rows x cols matrix. Column j of an operator's matrix holds the
/// coordinates of the image of the j-th basis vector.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols);
    /// Convenience for tests: integers mapped into the field.
    static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    std::vector<Vector> row_list() const;

    Matrix transpose() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);
    Matrix operator-() const;
    friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
    friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
    friend Matrix operator*(const Scalar& s, Matrix x) { return x *= s; }
    friend Matrix operator*(const Matrix& x, const Matrix& y);
    friend Vector operator*(const Matrix& m, const Vector& v);

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.field_ == y.field_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix power(const Matrix& m, unsigned k);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form (zero rows kept at the bottom).
RrefResult rref(const Matrix& m);

/// Subspace of F^n stored as its canonical basis: the nonzero rows of the
/// reduced row-echelon form. Equal subspaces have identical representations.
class Subspace {
public:
    Subspace() = default;
    /// The zero subspace of F^ambient.
    Subspace(Field field, std::size_t ambient);

    static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace whole(Field field, std::size_t ambient);

    Field field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
    std::span<const std::size_t> pivots() const { return pivots_; }

    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.ambient_ == y.ambient_ && x.basis_ == y.basis_;
    }

    std::string to_string() const;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {x : M x = 0}.
Subspace kernel(const Matrix& m);
/// Image (column space) of m.
Subspace image(const Matrix& m);

/// One solution of M x = b with free variables set to zero, if consistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

bool member(const Subspace& w, const Vector& x);
bool contains(const Subspace& outer, const Subspace& inner);
Subspace sum(const Subspace& w1, const Subspace& w2);
Subspace intersect(const Subspace& w1, const Subspace& w2);
/// Deterministic complement of w inside u: greedily adjoins u's canonical
/// basis vectors that are independent of what has been collected so far.
Subspace complement_in(const Subspace& w, const Subspace& u);
/// Every subspace of F^n over a finite field, by dimension and then by the
/// candidate order of the reduced echelon forms. Throws CapExceededError
/// when more than cap echelon forms would be visited.
std::vector<Subspace> all_subspaces(Field field, std::size_t n, std::uint64_t cap = 1'000'000);
/// True when w1 + w2 is direct and fills F^ambient.
bool is_direct_sum(const Subspace& w1, const Subspace& w2, std::size_t ambient);

/// Standard dot product on J_n = Span{e_1..e_{n-1}}; takes (n-1)-vectors.
Scalar form_J(const Vector& a, const Vector& b);
/// Extended form (v + alpha e_n, u + beta e_n) = (v,u) + alpha*beta on F^n.
Scalar form_ext(const Vector& x, const Vector& y);
/// Gram matrix of w's canonical basis under form_ext.
Matrix gram_ext(const Subspace& w);
/// (a,b)_ext vanishes for all a, b in w.
bool is_lagrangian(const Subspace& w);

bool is_orthogonal(const Matrix& m);
bool is_skew_symmetric(const Matrix& m);
bool is_invertible(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

} // namespace prelie
