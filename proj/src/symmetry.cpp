#include "prelie/symmetry.hpp"

#include "prelie/kernels.hpp"
#include "prelie/parallel.hpp"

namespace prelie {

namespace {

void require_square(const Algebra& a, const Matrix& m) {
    if (!m.is_square() || m.rows() != a.dim()) {
        throw Error("map matrix must be " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()));
    }
    if (m.field() != a.field()) {
        throw Error("map matrix is over a different field than the algebra");
    }
}

std::string pair_text(std::size_t i, std::size_t j) {
    return "(e_" + std::to_string(i + 1) + ", e_" + std::to_string(j + 1) + ")";
}

} // namespace

Report is_endomorphism(const Algebra& a, const Matrix& m) {
    require_square(a, m);
    const std::size_t n = a.dim();
    std::vector<Vector> images;
    for (std::size_t j = 0; j < n; ++j) {
        images.push_back(m.column(j));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m * a.basis_product(i, j) != a.multiply(images[i], images[j])) {
                return Report::fail({static_cast<int>(i) + 1, static_cast<int>(j) + 1},
                                    "phi(e_i e_j) != phi(e_i) phi(e_j) at " + pair_text(i, j));
            }
        }
    }
    return Report::pass();
}

Report is_automorphism(const Algebra& a, const Matrix& m) {
    require_square(a, m);
    if (!is_invertible(m)) {
        return Report::fail({}, "map is not invertible");
    }
    return is_endomorphism(a, m);
}

Report is_derivation(const Algebra& a, const Matrix& d) {
    require_square(a, d);
    const std::size_t n = a.dim();
    std::vector<Vector> images;
    for (std::size_t j = 0; j < n; ++j) {
        images.push_back(d.column(j));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vector lhs = d * a.basis_product(i, j);
            Vector rhs = a.multiply(images[i], a.basis(j)) + a.multiply(a.basis(i), images[j]);
            if (lhs != rhs) {
                return Report::fail({static_cast<int>(i) + 1, static_cast<int>(j) + 1},
                                    "Leibniz rule fails at " + pair_text(i, j));
            }
        }
    }
    return Report::pass();
}

Vector flatten(const Matrix& m) {
    Vector v(m.field(), m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            v[r * m.cols() + c] = m(r, c);
        }
    }
    return v;
}

Matrix unflatten(const Vector& v, std::size_t n) {
    if (v.size() != n * n) {
        throw Error("unflatten: length is not n^2");
    }
    Matrix m(v.field(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = v[r * n + c];
        }
    }
    return m;
}

Subspace derivation_algebra(const Algebra& a) {
    const std::size_t n = a.dim();
    const Field f = a.field();
    // Row (i, j, k) of D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0; unknown D(r, c) at r*n + c.
    Matrix sys(f, n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vector& prod = a.basis_product(i, j);
            const Matrix& right_j = a.right_basis(j);
            const Matrix& left_i = a.left_basis(i);
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = (i * n + j) * n + k;
                for (std::size_t m = 0; m < n; ++m) {
                    if (!prod[m].is_zero()) {
                        sys(row, k * n + m) += prod[m];
                    }
                    if (!right_j(k, m).is_zero()) {
                        sys(row, m * n + i) -= right_j(k, m);
                    }
                    if (!left_i(k, m).is_zero()) {
                        sys(row, m * n + j) -= left_i(k, m);
                    }
                }
            }
        }
    }
    return kernel(sys);
}

std::vector<Matrix> derivation_basis(const Algebra& a) {
    std::vector<Matrix> out;
    for (const auto& v : derivation_algebra(a).basis_vectors()) {
        out.push_back(unflatten(v, a.dim()));
    }
    return out;
}

Matrix automorphism_from_orthogonal(const Matrix& q) {
    if (!q.is_square()) {
        throw Error("orthogonal block must be square");
    }
    if (!is_orthogonal(q)) {
        const Matrix g = q * q.transpose();
        for (std::size_t r = 0; r < g.rows(); ++r) {
            for (std::size_t c = 0; c < g.cols(); ++c) {
                const bool diag = r == c;
                if ((diag && !g(r, c).is_one()) || (!diag && !g(r, c).is_zero())) {
                    throw Error("block is not orthogonal: (Q Q^T)(" + std::to_string(r + 1) + "," +
                                std::to_string(c + 1) + ") = " + g(r, c).to_string());
                }
            }
        }
        throw Error("block is not orthogonal: Q^T Q != E");
    }
    const std::size_t n = q.rows() + 1;
    Matrix m(q.field(), n, n);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        for (std::size_t c = 0; c + 1 < n; ++c) {
            m(r, c) = q(r, c);
        }
    }
    m(n - 1, n - 1) = q.field().one();
    return m;
}

Matrix derivation_from_skew(const Matrix& s) {
    if (!s.is_square()) {
        throw Error("skew block must be square");
    }
    for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t c = 0; c < s.cols(); ++c) {
            if (s(r, c) != -s(c, r)) {
                throw Error("block is not skew-symmetric: S(" + std::to_string(r + 1) + "," +
                            std::to_string(c + 1) + ") = " + s(r, c).to_string() + " but S(" +
                            std::to_string(c + 1) + "," + std::to_string(r + 1) + ") = " + s(c, r).to_string());
            }
        }
    }
    const std::size_t n = s.rows() + 1;
    Matrix m(s.field(), n, n);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        for (std::size_t c = 0; c + 1 < n; ++c) {
            m(r, c) = s(r, c);
        }
    }
    return m;
}

Matrix matrix_from_index(Field field, std::size_t n, std::uint64_t t) {
    const std::uint64_t q = field.order();
    Matrix m(field, n, n);
    for (std::size_t e = 0; e < n * n; ++e) {
        m(e / n, e % n) = field.element(t % q);
        t /= q;
    }
    return m;
}

std::uint64_t index_of_matrix(const Matrix& m) {
    const Field f = m.field();
    const std::uint64_t q = f.order();
    std::uint64_t t = 0;
    for (std::size_t e = m.rows() * m.cols(); e-- > 0;) {
        t = t * q + f.index_of(m(e / m.cols(), e % m.cols()));
    }
    return t;
}

std::uint64_t candidate_count(Field field, std::size_t n, std::uint64_t cap) {
    const std::uint64_t q = field.order();
    std::uint64_t total = 1;
    for (std::size_t e = 0; e < n * n; ++e) {
        if (total > cap / q) {
            throw CapExceededError(std::to_string(q) + "^" + std::to_string(n * n) +
                                   " candidates exceed the cap " + std::to_string(cap));
        }
        total *= q;
    }
    return total;
}

std::vector<Matrix> enumerate_automorphisms_finite(const Algebra& a, const ScanOptions& opts) {
    const Field f = a.field();
    const std::size_t n = a.dim();
    const std::uint64_t total = candidate_count(f, n, opts.cap);
    std::vector<std::vector<std::uint64_t>> chunks;
    if (opts.use_kernels && kernels::supports(a)) {
        const auto table = kernels::ModTable::from_algebra(a);
        const auto& k = kernels::best_kernels();
        chunks = map_chunks(total, opts.workers, [&](std::uint64_t b, std::uint64_t e) {
            std::vector<std::uint64_t> out;
            k.scan_hom(table, 0, b, e, out);
            return out;
        });
    } else {
        chunks = map_chunks(total, opts.workers, [&](std::uint64_t b, std::uint64_t e) {
            std::vector<std::uint64_t> out;
            for (std::uint64_t t = b; t < e; ++t) {
                if (is_endomorphism(a, matrix_from_index(f, n, t))) {
                    out.push_back(t);
                }
            }
            return out;
        });
    }
    std::vector<Matrix> result;
    for (const auto& c : chunks) {
        for (auto t : c) {
            Matrix m = matrix_from_index(f, n, t);
            if (is_invertible(m)) {
                result.push_back(std::move(m));
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Relation systems on I_n

namespace {

std::string lbl(std::size_t i) { return std::to_string(i + 1); }

struct Split {
    std::size_t n;
    const Matrix& m;
    // v_i coordinate k (k < n-1) and alpha_i of column i.
    const Scalar& v(std::size_t i, std::size_t k) const { return m(k, i); }
    const Scalar& alpha(std::size_t i) const { return m(n - 1, i); }
    Scalar dot(std::size_t i, std::size_t j) const {
        Scalar s = m.field().zero();
        for (std::size_t k = 0; k + 1 < n; ++k) {
            s += v(i, k) * v(j, k);
        }
        return s;
    }
};

void automorphism_system(const Split& s, std::vector<NamedResidual>& out) {
    const std::size_t n = s.n;
    const std::size_t last = n - 1;
    const Field f = s.m.field();
    const Scalar two = f.from_integer(2);
    for (std::size_t i = 0; i < last; ++i) {
        for (std::size_t k = 0; k < last; ++k) {
            out.push_back({"aut.ii.vec[i=" + lbl(i) + ",k=" + lbl(k) + "]",
                           s.alpha(i) * s.v(i, k) - s.v(last, k)});
        }
        out.push_back({"aut.ii.scal[i=" + lbl(i) + "]", s.dot(i, i) + two * s.alpha(i) * s.alpha(i) - s.alpha(last)});
    }
    for (std::size_t k = 0; k < last; ++k) {
        out.push_back({"aut.nn.vec[k=" + lbl(k) + "]", s.alpha(last) * s.v(last, k) - two * s.v(last, k)});
    }
    out.push_back({"aut.nn.scal", s.dot(last, last) + two * s.alpha(last) * s.alpha(last) - two * s.alpha(last)});
    for (std::size_t i = 0; i < last; ++i) {
        for (std::size_t j = 0; j < last; ++j) {
            if (i == j) {
                continue;
            }
            for (std::size_t k = 0; k < last; ++k) {
                out.push_back({"aut.ij.vec[i=" + lbl(i) + ",j=" + lbl(j) + ",k=" + lbl(k) + "]",
                               s.alpha(i) * s.v(j, k)});
            }
            out.push_back({"aut.ij.scal[i=" + lbl(i) + ",j=" + lbl(j) + "]",
                           s.dot(i, j) + two * s.alpha(i) * s.alpha(j)});
        }
    }
    for (std::size_t i = 0; i < last; ++i) {
        for (std::size_t k = 0; k < last; ++k) {
            out.push_back({"aut.in.vec[i=" + lbl(i) + ",k=" + lbl(k) + "]", s.alpha(i) * s.v(last, k)});
        }
        out.push_back({"aut.in.scal[i=" + lbl(i) + "]", s.dot(last, i) + two * s.alpha(last) * s.alpha(i)});
    }
    for (std::size_t j = 0; j < last; ++j) {
        for (std::size_t k = 0; k < last; ++k) {
            out.push_back({"aut.nj.vec[j=" + lbl(j) + ",k=" + lbl(k) + "]",
                           s.alpha(last) * s.v(j, k) - s.v(j, k)});
        }
        out.push_back({"aut.nj.scal[j=" + lbl(j) + "]",
                       s.dot(last, j) + two * s.alpha(last) * s.alpha(j) - s.alpha(j)});
    }
}

void derivation_system(const Split& s, std::vector<NamedResidual>& out) {
    const std::size_t n = s.n;
    const std::size_t last = n - 1;
    const Field f = s.m.field();
    const Scalar two = f.from_integer(2);
    const Scalar four = f.from_integer(4);
    // w_{ki} = s.v(i, k) (coordinate k of d(e_i)), gamma_i = s.alpha(i).
    auto w = [&](std::size_t k, std::size_t i) -> const Scalar& { return s.v(i, k); };
    auto delta = [&](std::size_t a, std::size_t b) { return a == b ? f.one() : f.zero(); };
    for (std::size_t i = 0; i < last; ++i) {
        for (std::size_t k = 0; k < last; ++k) {
            out.push_back({"der.ii.vec[i=" + lbl(i) + ",k=" + lbl(k) + "]", s.alpha(i) * delta(i, k) - w(k, last)});
        }
        out.push_back({"der.ii.scal[i=" + lbl(i) + "]", two * w(i, i) - s.alpha(last)});
    }
    for (std::size_t k = 0; k < last; ++k) {
        out.push_back({"der.nn.vec[k=" + lbl(k) + "]", w(k, last) - two * w(k, last)});
    }
    out.push_back({"der.nn.scal", four * s.alpha(last) - two * s.alpha(last)});
    for (std::size_t i = 0; i < last; ++i) {
        for (std::size_t j = 0; j < last; ++j) {
            if (i == j) {
                continue;
            }
            for (std::size_t k = 0; k < last; ++k) {
                out.push_back({"der.ij.vec[i=" + lbl(i) + ",j=" + lbl(j) + ",k=" + lbl(k) + "]",
                               s.alpha(i) * delta(j, k)});
            }
            out.push_back({"der.ij.scal[i=" + lbl(i) + ",j=" + lbl(j) + "]", w(i, j) + w(j, i)});
        }
    }
    for (std::size_t i = 0; i < last; ++i) {
        out.push_back({"der.in.scal[i=" + lbl(i) + "]", w(i, last) + two * s.alpha(i)});
    }
    for (std::size_t j = 0; j < last; ++j) {
        for (std::size_t k = 0; k < last; ++k) {
            out.push_back({"der.nj.vec[j=" + lbl(j) + ",k=" + lbl(k) + "]", s.alpha(last) * delta(j, k)});
        }
        out.push_back({"der.nj.scal[j=" + lbl(j) + "]", w(j, last) + s.alpha(j)});
    }
}

} // namespace

std::vector<NamedResidual> theorem1_residuals(const Algebra& a, const CandidateMap& c) {
    if (!burde_dimension(a)) {
        throw Error("the automorphism/derivation relation system is specific to I_n");
    }
    require_square(a, c.matrix);
    Split s{a.dim(), c.matrix};
    std::vector<NamedResidual> out;
    if (c.mode == MapMode::automorphism) {
        automorphism_system(s, out);
    } else {
        derivation_system(s, out);
    }
    return out;
}

bool all_zero(std::span<const NamedResidual> residuals) { return first_nonzero(residuals) == nullptr; }

const NamedResidual* first_nonzero(std::span<const NamedResidual> residuals) {
    for (const auto& r : residuals) {
        if (!r.value.is_zero()) {
            return &r;
        }
    }
    return nullptr;
}

} // namespace prelie
