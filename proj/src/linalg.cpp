#include "prelie/linalg.hpp"

#include <sstream>
#include <utility>

namespace prelie {

namespace {

void require(bool ok, const char* what) {
    if (!ok) {
        throw Error(what);
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Vector

Vector::Vector(Field field, std::size_t n) : field_(field), entries_(n, field.zero()) {}

Vector::Vector(Field field, std::vector<Scalar> entries) : field_(field), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        require(e.field() == field_, "vector entry from a different field");
    }
}

Vector Vector::unit(Field field, std::size_t n, std::size_t i) {
    Vector v(field, n);
    v[i] = field.one();
    return v;
}

bool Vector::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

Vector& Vector::operator+=(const Vector& o) {
    require(size() == o.size(), "vector length mismatch");
    for (std::size_t i = 0; i < size(); ++i) {
        entries_[i] += o.entries_[i];
    }
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    require(size() == o.size(), "vector length mismatch");
    for (std::size_t i = 0; i < size(); ++i) {
        entries_[i] -= o.entries_[i];
    }
    return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
    for (auto& e : entries_) {
        e *= s;
    }
    return *this;
}

Vector Vector::operator-() const {
    Vector out = *this;
    for (auto& e : out.entries_) {
        e = -e;
    }
    return out;
}

std::string Vector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < size(); ++i) {
        os << (i ? ", " : "") << entries_[i];
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = field.one();
    }
    return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        require(cols[c].size() == rows, "column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = cols[c][r];
        }
    }
    return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "ragged matrix literal");
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = field.from_integer(rows[r][c]);
        }
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(field_, std::vector<Scalar>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

std::vector<Vector> Matrix::row_list() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out.push_back(row(r));
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& e : data_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += o.data_[i];
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
    for (auto& e : data_) {
        e *= s;
    }
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& e : out.data_) {
        e = -e;
    }
    return out;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    require(x.cols_ == y.rows_, "matrix product shape mismatch");
    Matrix out(x.field_, x.rows_, y.cols_);
    for (std::size_t r = 0; r < x.rows_; ++r) {
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const Scalar& xv = x(r, k);
            if (xv.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < y.cols_; ++c) {
                if (!y(k, c).is_zero()) {
                    out(r, c) += xv * y(k, c);
                }
            }
        }
    }
    return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
    require(m.cols_ == v.size(), "matrix-vector shape mismatch");
    Vector out(m.field_, m.rows_);
    for (std::size_t r = 0; r < m.rows_; ++r) {
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (!v[c].is_zero() && !m(r, c).is_zero()) {
                out[r] += m(r, c) * v[c];
            }
        }
    }
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) {
            os << (c ? " " : "") << (*this)(r, c);
        }
    }
    os << ']';
    return os.str();
}

Matrix power(const Matrix& m, unsigned k) {
    require(m.is_square(), "power of a non-square matrix");
    Matrix out = Matrix::identity(m.field(), m.rows());
    for (unsigned i = 0; i < k; ++i) {
        out = out * m;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const Matrix& m) {
    RrefResult res{m, 0, {}};
    Matrix& a = res.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = pivot_row; r < rows; ++r) {
            if (!a(r, c).is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel == rows) {
            continue;
        }
        if (sel != pivot_row) {
            for (std::size_t k = 0; k < cols; ++k) {
                std::swap(a(sel, k), a(pivot_row, k));
            }
        }
        const Scalar inv = a(pivot_row, c).inverse();
        for (std::size_t k = c; k < cols; ++k) {
            a(pivot_row, k) *= inv;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a(r, c).is_zero()) {
                continue;
            }
            const Scalar factor = a(r, c);
            for (std::size_t k = c; k < cols; ++k) {
                if (!a(pivot_row, k).is_zero()) {
                    a(r, k) -= factor * a(pivot_row, k);
                }
            }
        }
        res.pivots.push_back(c);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

// ---------------------------------------------------------------------------
// Subspaces

Subspace::Subspace(Field field, std::size_t ambient) : ambient_(ambient), basis_(field, 0, ambient) {}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(field, ambient);
    if (vectors.empty()) {
        return s;
    }
    RrefResult r = rref(Matrix::from_rows(field, ambient, vectors));
    s.basis_ = Matrix(field, r.rank, ambient);
    for (std::size_t i = 0; i < r.rank; ++i) {
        for (std::size_t c = 0; c < ambient; ++c) {
            s.basis_(i, c) = r.reduced(i, c);
        }
    }
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::whole(Field field, std::size_t ambient) {
    return span(field, ambient, Matrix::identity(field, ambient).row_list());
}

std::string Subspace::to_string() const {
    std::ostringstream os;
    os << "Span{";
    for (std::size_t i = 0; i < dim(); ++i) {
        os << (i ? ", " : "") << basis_.row(i).to_string();
    }
    os << "} in dim " << ambient_;
    return os.str();
}

Subspace kernel(const Matrix& m) {
    const std::size_t n = m.cols();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) {
        is_pivot[p] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        Vector v(m.field(), n);
        v[f] = m.field().one();
        for (std::size_t i = 0; i < r.rank; ++i) {
            v[r.pivots[i]] = -r.reduced(i, f);
        }
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.field(), n, basis);
}

Subspace image(const Matrix& m) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        cols.push_back(m.column(c));
    }
    return Subspace::span(m.field(), m.rows(), cols);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    require(m.rows() == b.size(), "solve: dimension mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, m.cols()) = b[r];
    }
    RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) {
        return std::nullopt;
    }
    Vector x(m.field(), m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        x[r.pivots[i]] = r.reduced(i, m.cols());
    }
    return x;
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw Error("subspace ambient dimension mismatch");
    }
}

} // namespace

bool member(const Subspace& w, const Vector& x) {
    if (x.size() != w.ambient_dim()) {
        throw Error("subspace ambient dimension mismatch");
    }
    // Reduce x against the canonical basis using the pivot columns.
    Vector rest = x;
    for (std::size_t i = 0; i < w.dim(); ++i) {
        const Scalar coeff = rest[w.pivots()[i]];
        if (!coeff.is_zero()) {
            rest -= coeff * w.basis().row(i);
        }
    }
    return rest.is_zero();
}

bool contains(const Subspace& outer, const Subspace& inner) {
    require_same_ambient(outer, inner);
    for (const auto& v : inner.basis_vectors()) {
        if (!member(outer, v)) {
            return false;
        }
    }
    return true;
}

Subspace sum(const Subspace& w1, const Subspace& w2) {
    require_same_ambient(w1, w2);
    auto vs = w1.basis_vectors();
    auto more = w2.basis_vectors();
    vs.insert(vs.end(), more.begin(), more.end());
    return Subspace::span(w1.field(), w1.ambient_dim(), vs);
}

Subspace intersect(const Subspace& w1, const Subspace& w2) {
    require_same_ambient(w1, w2);
    const Field f = w1.field();
    const std::size_t n = w1.ambient_dim();
    const std::size_t d1 = w1.dim();
    const std::size_t d2 = w2.dim();
    if (d1 == 0 || d2 == 0) {
        return Subspace(f, n);
    }
    // Columns: basis of w1 then the negated basis of w2; a kernel vector
    // (a, b) gives sum a_i u_i = sum b_j w_j in the intersection.
    Matrix m(f, n, d1 + d2);
    for (std::size_t i = 0; i < d1; ++i) {
        for (std::size_t r = 0; r < n; ++r) {
            m(r, i) = w1.basis()(i, r);
        }
    }
    for (std::size_t j = 0; j < d2; ++j) {
        for (std::size_t r = 0; r < n; ++r) {
            m(r, d1 + j) = -w2.basis()(j, r);
        }
    }
    std::vector<Vector> vs;
    for (const auto& k : kernel(m).basis_vectors()) {
        Vector v(f, n);
        for (std::size_t i = 0; i < d1; ++i) {
            if (!k[i].is_zero()) {
                v += k[i] * w1.basis().row(i);
            }
        }
        vs.push_back(std::move(v));
    }
    return Subspace::span(f, n, vs);
}

Subspace complement_in(const Subspace& w, const Subspace& u) {
    require_same_ambient(w, u);
    if (!contains(u, w)) {
        throw Error("complement_in: subspace is not contained in the ambient subspace");
    }
    Subspace acc = w;
    std::vector<Vector> chosen;
    for (const auto& v : u.basis_vectors()) {
        if (!member(acc, v)) {
            chosen.push_back(v);
            acc = sum(acc, Subspace::span(w.field(), w.ambient_dim(), {v}));
        }
    }
    return Subspace::span(w.field(), w.ambient_dim(), chosen);
}

bool is_direct_sum(const Subspace& w1, const Subspace& w2, std::size_t ambient) {
    require_same_ambient(w1, w2);
    if (w1.ambient_dim() != ambient) {
        throw Error("subspace ambient dimension mismatch");
    }
    return w1.dim() + w2.dim() == ambient && sum(w1, w2).dim() == ambient &&
           intersect(w1, w2).dim() == 0;
}

// ---------------------------------------------------------------------------
// Forms and predicates

Scalar form_J(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), "form_J: length mismatch");
    Scalar s = a.field().zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

Scalar form_ext(const Vector& x, const Vector& y) {
    // (v,u) + alpha*beta is the full dot product in these coordinates.
    return form_J(x, y);
}

Matrix gram_ext(const Subspace& w) {
    const auto vs = w.basis_vectors();
    Matrix g(w.field(), vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = 0; j < vs.size(); ++j) {
            g(i, j) = form_ext(vs[i], vs[j]);
        }
    }
    return g;
}

bool is_lagrangian(const Subspace& w) { return gram_ext(w).is_zero(); }

bool is_orthogonal(const Matrix& m) {
    require(m.is_square(), "is_orthogonal: square matrix required");
    const Matrix id = Matrix::identity(m.field(), m.rows());
    const Matrix t = m.transpose();
    return m * t == id && t * m == id;
}

bool is_skew_symmetric(const Matrix& m) {
    require(m.is_square(), "is_skew_symmetric: square matrix required");
    return m.transpose() == -m;
}

bool is_invertible(const Matrix& m) {
    require(m.is_square(), "is_invertible: square matrix required");
    return rref(m).rank == m.rows();
}

} // namespace prelie

namespace prelie {

std::optional<Matrix> inverse(const Matrix& m) {
    require(m.is_square(), "inverse: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) {
        return m;
    }
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, n + r) = m.field().one();
    }
    RrefResult red = rref(aug);
    if (red.rank < n || red.pivots[n - 1] >= n) {
        return std::nullopt;
    }
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv(r, c) = red.reduced(r, n + c);
        }
    }
    return inv;
}

} // namespace prelie

namespace prelie {

std::vector<Subspace> all_subspaces(Field field, std::size_t n, std::uint64_t cap) {
    const std::uint64_t q = field.order();
    std::vector<Subspace> out;
    std::uint64_t visited = 0;
    for (std::size_t d = 0; d <= n; ++d) {
        // Pivot columns as an increasing d-subset, walked in lexicographic order.
        std::vector<std::size_t> piv(d);
        for (std::size_t r = 0; r < d; ++r) {
            piv[r] = r;
        }
        while (true) {
            std::vector<bool> is_pivot(n, false);
            for (auto c : piv) {
                is_pivot[c] = true;
            }
            std::vector<std::pair<std::size_t, std::size_t>> free_slots;
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t c = piv[r] + 1; c < n; ++c) {
                    if (!is_pivot[c]) {
                        free_slots.emplace_back(r, c);
                    }
                }
            }
            std::vector<std::uint64_t> digits(free_slots.size(), 0);
            while (true) {
                if (++visited > cap) {
                    throw CapExceededError("subspace enumeration of GF(" + std::to_string(q) + ")^" +
                                           std::to_string(n) + " exceeds the cap " + std::to_string(cap));
                }
                std::vector<Vector> rows;
                for (std::size_t r = 0; r < d; ++r) {
                    Vector v(field, n);
                    v[piv[r]] = field.one();
                    rows.push_back(std::move(v));
                }
                for (std::size_t s = 0; s < free_slots.size(); ++s) {
                    rows[free_slots[s].first][free_slots[s].second] = field.element(digits[s]);
                }
                out.push_back(Subspace::span(field, n, rows));
                std::size_t s = 0;
                for (; s < digits.size(); ++s) {
                    if (++digits[s] < q) {
                        break;
                    }
                    digits[s] = 0;
                }
                if (s == digits.size()) {
                    break;
                }
            }
            // Next pivot subset.
            std::size_t r = d;
            while (r > 0 && piv[r - 1] == n - d + r - 1) {
                --r;
            }
            if (r == 0) {
                break;
            }
            ++piv[r - 1];
            for (std::size_t t = r; t < d; ++t) {
                piv[t] = piv[t - 1] + 1;
            }
        }
    }
    return out;
}

} // namespace prelie
