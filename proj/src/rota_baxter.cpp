#include "prelie/rota_baxter.hpp"

#include "prelie/kernels.hpp"
#include "prelie/parallel.hpp"

namespace prelie {

namespace {

void require_operator(const Algebra& a, const RBOperator& r) {
    const Matrix& m = r.matrix;
    if (!m.is_square() || m.rows() != a.dim()) {
        throw Error("operator matrix must be " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()));
    }
    if (m.field() != a.field() || r.weight.field() != a.field()) {
        throw Error("operator and weight must live over the algebra's field");
    }
}

void require_In(const Algebra& a) {
    if (!burde_dimension(a)) {
        throw Error("operation is specific to I_n");
    }
}

Matrix scaled_identity(Field f, std::size_t n, const Scalar& s) { return s * Matrix::identity(f, n); }

std::string lbl(std::size_t i) { return std::to_string(i + 1); }

Subspace J_of(Field f, std::size_t n) {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        basis.push_back(Vector::unit(f, n, i));
    }
    return Subspace::span(f, n, basis);
}

void require_subalgebra(const Algebra& a, const Subspace& w, const char* label) {
    const auto basis = w.basis_vectors();
    for (const auto& x : basis) {
        for (const auto& y : basis) {
            Vector p = a.multiply(x, y);
            if (!member(w, p)) {
                throw Error(std::string("part ") + label + " is not a subalgebra: (" + x.to_string() + ")(" +
                            y.to_string() + ") = " + p.to_string() + " leaves it");
            }
        }
    }
}

Scalar require_root(Field f, const Scalar& value) {
    auto r = sqrt_in_field(f, value);
    if (!r) {
        throw Error("x^2 = " + value.to_string() + " has no solution in " + f.name());
    }
    return *r;
}

} // namespace

Report is_rb(const Algebra& a, const RBOperator& r) {
    require_operator(a, r);
    const std::size_t n = a.dim();
    std::vector<Vector> images;
    for (std::size_t j = 0; j < n; ++j) {
        images.push_back(r.matrix.column(j));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vector lhs = a.multiply(images[i], images[j]);
            Vector inner = a.multiply(images[i], a.basis(j)) + a.multiply(a.basis(i), images[j]) +
                           r.weight * a.basis_product(i, j);
            if (lhs != r.matrix * inner) {
                return Report::fail({static_cast<int>(i) + 1, static_cast<int>(j) + 1},
                                    "R(x)R(y) != R(R(x)y + xR(y) + lambda xy) at (e_" + lbl(i) + ", e_" + lbl(j) +
                                        ")");
            }
        }
    }
    return Report::pass();
}

std::vector<NamedResidual> rb_residuals_In(const Algebra& a, const RBOperator& r) {
    require_In(a);
    require_operator(a, r);
    const std::size_t n = a.dim();
    const std::size_t last = n - 1;
    const Field f = a.field();
    const Matrix& m = r.matrix;
    const Scalar& lambda = r.weight;
    const Scalar two = f.from_integer(2);
    const Scalar three = f.from_integer(3);
    // v(k, i): coordinate k of v_i; al(i): alpha_i.
    auto v = [&](std::size_t k, std::size_t i) -> const Scalar& { return m(k, i); };
    auto al = [&](std::size_t i) -> const Scalar& { return m(last, i); };
    auto dot = [&](std::size_t i, std::size_t j) {
        Scalar s = f.zero();
        for (std::size_t k = 0; k < last; ++k) {
            s += v(k, i) * v(k, j);
        }
        return s;
    };
    auto delta = [&](std::size_t x, std::size_t y) { return x == y ? f.one() : f.zero(); };

    std::vector<NamedResidual> out;
    for (std::size_t i = 0; i < last; ++i) {
        for (std::size_t j = 0; j < last; ++j) {
            const Scalar c = v(i, j) + v(j, i) + lambda * delta(i, j);
            for (std::size_t k = 0; k < last; ++k) {
                out.push_back({"rb.ij1[i=" + lbl(i) + ",j=" + lbl(j) + ",k=" + lbl(k) + "]", c * v(k, last)});
            }
            out.push_back({"rb.ij2[i=" + lbl(i) + ",j=" + lbl(j) + "]", dot(i, j) + al(i) * al(j) - c * al(last)});
        }
    }
    for (std::size_t i = 0; i < last; ++i) {
        for (std::size_t k = 0; k < last; ++k) {
            out.push_back({"rb.in1[i=" + lbl(i) + ",k=" + lbl(k) + "]", (al(i) + v(i, last)) * v(k, last)});
        }
        out.push_back({"rb.in2[i=" + lbl(i) + "]", dot(i, last) - v(i, last) * al(last)});
    }
    for (std::size_t j = 0; j < last; ++j) {
        for (std::size_t k = 0; k < last; ++k) {
            Scalar s = lambda * v(k, j) + (v(j, last) + two * al(j)) * v(k, last);
            for (std::size_t t = 0; t < last; ++t) {
                s += v(t, j) * v(k, t);
            }
            out.push_back({"rb.nj1[j=" + lbl(j) + ",k=" + lbl(k) + "]", s});
        }
        Scalar s = lambda * al(j) + (v(j, last) + al(j)) * al(last) - dot(last, j);
        for (std::size_t t = 0; t < last; ++t) {
            s += al(t) * v(t, j);
        }
        out.push_back({"rb.nj2[j=" + lbl(j) + "]", s});
    }
    for (std::size_t k = 0; k < last; ++k) {
        Scalar s = (three * al(last) + two * lambda) * v(k, last);
        for (std::size_t t = 0; t < last; ++t) {
            s += v(t, last) * v(k, t);
        }
        out.push_back({"rb.nn1[k=" + lbl(k) + "]", s});
    }
    Scalar s = two * al(last) * (al(last) + lambda) - dot(last, last);
    for (std::size_t t = 0; t < last; ++t) {
        s += al(t) * v(t, last);
    }
    out.push_back({"rb.nn2", s});
    return out;
}

RBOperator phi_conjugate(const RBOperator& r) {
    const Matrix& m = r.matrix;
    return {-m - scaled_identity(m.field(), m.rows(), r.weight), r.weight};
}

RBOperator splitting_from_decomposition(const Algebra& a, const Decomposition& d, const Scalar& lambda) {
    const Field f = a.field();
    const std::size_t n = a.dim();
    if (d.a1.ambient_dim() != n || d.a2.ambient_dim() != n) {
        throw Error("decomposition parts must live in the algebra's space");
    }
    require_subalgebra(a, d.a1, "A1");
    require_subalgebra(a, d.a2, "A2");
    if (!is_direct_sum(d.a1, d.a2, n)) {
        throw Error("not a direct sum: dim A1 + dim A2 = " + std::to_string(d.a1.dim() + d.a2.dim()) +
                    ", dim(A1 + A2) = " + std::to_string(sum(d.a1, d.a2).dim()) + ", ambient " +
                    std::to_string(n));
    }
    std::vector<Vector> cols = d.a1.basis_vectors();
    for (auto& v : d.a2.basis_vectors()) {
        cols.push_back(std::move(v));
    }
    const Matrix b = Matrix::from_columns(f, n, cols);
    Matrix diag(f, n, n);
    for (std::size_t k = d.a1.dim(); k < n; ++k) {
        diag(k, k) = -lambda;
    }
    return {b * diag * *inverse(b), lambda};
}

Decomposition kernel_decomposition(const RBOperator& r) {
    const Matrix& m = r.matrix;
    return {kernel(m), kernel(m + scaled_identity(m.field(), m.rows(), r.weight)), std::nullopt, std::nullopt};
}

bool is_splitting(const RBOperator& r) {
    const Matrix& m = r.matrix;
    return (m * m + r.weight * m).is_zero();
}

Theorem2Verdict theorem2_check(const Algebra& a, const RBOperator& r) {
    if (Report rb = is_rb(a, r); !rb) {
        throw Error("theorem2_check needs an RB operator: " + rb.message);
    }
    Theorem2Verdict v;
    const Matrix& m = r.matrix;
    const Matrix b = phi_conjugate(r).matrix;
    v.r2_plus_lr_zero = is_splitting(r);
    v.ata_zero = (m.transpose() * m).is_zero();
    v.phi_ata_zero = (b.transpose() * b).is_zero();
    if (!v.r2_plus_lr_zero) {
        v.report = Report::fail({}, "R^2 + lambda R != 0");
    } else if (!v.ata_zero && !v.phi_ata_zero) {
        v.report = Report::fail({}, "neither A^T A nor B^T B vanishes");
    } else {
        v.report = Report::pass(v.ata_zero ? "A^T A = 0" : "B^T B = 0 for B = -A - lambda E");
    }
    return v;
}

std::string to_string(RBCase c) {
    switch (c) {
    case RBCase::trivial:
        return "trivial";
    case RBCase::case1:
        return "1";
    case RBCase::case2:
        return "2";
    }
    return "?";
}

CaseCertificate classify_case(const Algebra& a, const RBOperator& r) {
    require_In(a);
    if (Report rb = is_rb(a, r); !rb) {
        throw Error("classify_case needs an RB operator: " + rb.message);
    }
    const Field f = a.field();
    const std::size_t n = a.dim();
    const std::size_t last = n - 1;
    const Matrix& m = r.matrix;
    const Scalar& lambda = r.weight;
    const Matrix e = Matrix::identity(f, n);

    CaseCertificate cert;
    cert.check = Report::pass();
    if (m.is_zero() || (m + lambda * e).is_zero()) {
        cert.kind = RBCase::trivial;
        return cert;
    }
    bool vn_zero = true;
    for (std::size_t k = 0; k < last; ++k) {
        vn_zero = vn_zero && m(k, last).is_zero();
    }
    if (!vn_zero) {
        cert.kind = RBCase::case1;
        const Scalar half = f.from_integer(2).inverse();
        Matrix s = m + (lambda * half) * e;
        Matrix defect = s * s - (lambda * lambda * half * half) * e;
        if (!is_skew_symmetric(s)) {
            cert.check = Report::fail({}, "S = A + (lambda/2)E is not skew-symmetric");
        } else if (!defect.is_zero()) {
            cert.check = Report::fail({}, "S^2 != (lambda^2/4)E");
        }
        cert.s = std::move(s);
        cert.s_square_defect = std::move(defect);
        return cert;
    }
    cert.kind = RBCase::case2;
    const Scalar alpha = m(last, last);
    cert.alpha_n = alpha;
    if (!alpha.is_zero() && alpha != -lambda) {
        cert.check = Report::fail({}, "v_n = 0 but alpha_n = " + alpha.to_string() + " is neither 0 nor -lambda");
        return cert;
    }
    Matrix b = m;
    if (!alpha.is_zero()) {
        cert.phi_normalized = true;
        b = phi_conjugate(r).matrix;
    }
    if (!b.column(last).is_zero()) {
        cert.check = Report::fail({}, "normalized operator does not kill e_n");
    } else if (!(b.transpose() * b).is_zero()) {
        cert.check = Report::fail({}, "normalized operator has A^T A != 0");
    } else if (!(b * b + lambda * b).is_zero()) {
        cert.check = Report::fail({}, "normalized operator has A^2 + lambda A != 0");
    }
    return cert;
}

std::vector<RBOperator> enumerate_rb_finite(const Algebra& a, const Scalar& lambda, const ScanOptions& opts) {
    const Field f = a.field();
    const std::size_t n = a.dim();
    if (lambda.field() != f) {
        throw Error("weight must live over the algebra's field");
    }
    const std::uint64_t total = candidate_count(f, n, opts.cap);
    std::vector<std::vector<std::uint64_t>> chunks;
    if (opts.use_kernels && kernels::supports(a)) {
        const auto table = kernels::ModTable::from_algebra(a);
        const auto& k = kernels::best_kernels();
        const int lam = static_cast<int>(lambda.a().get_num().get_si());
        chunks = map_chunks(total, opts.workers, [&](std::uint64_t b, std::uint64_t e) {
            std::vector<std::uint64_t> out;
            k.scan_rb(table, lam, b, e, out);
            return out;
        });
    } else {
        chunks = map_chunks(total, opts.workers, [&](std::uint64_t b, std::uint64_t e) {
            std::vector<std::uint64_t> out;
            for (std::uint64_t t = b; t < e; ++t) {
                if (is_rb(a, {matrix_from_index(f, n, t), lambda})) {
                    out.push_back(t);
                }
            }
            return out;
        });
    }
    std::vector<RBOperator> result;
    for (const auto& c : chunks) {
        for (auto t : c) {
            result.push_back({matrix_from_index(f, n, t), lambda});
        }
    }
    return result;
}

std::optional<unsigned> rb_index_of(const RBOperator& r) {
    const Matrix& m = r.matrix;
    const std::size_t n = m.rows();
    const Field f = m.field();
    const unsigned bound = static_cast<unsigned>(std::max<std::size_t>(1, n * n));
    const Matrix shifted = m + r.weight * Matrix::identity(f, n);
    std::vector<Matrix> rp{Matrix::identity(f, n)};
    std::vector<Matrix> sp{Matrix::identity(f, n)};
    for (unsigned k = 1; k <= bound; ++k) {
        rp.push_back(rp.back() * m);
        sp.push_back(sp.back() * shifted);
    }
    for (unsigned total = 1; total <= bound; ++total) {
        for (unsigned k = 0; k <= total; ++k) {
            if ((rp[k] * sp[total - k]).is_zero()) {
                return total;
            }
        }
    }
    return std::nullopt;
}

std::optional<unsigned> rb_index_finite(const Algebra& a, const Scalar& lambda, const ScanOptions& opts) {
    unsigned best = 1;
    for (const auto& r : enumerate_rb_finite(a, lambda, opts)) {
        auto m = rb_index_of(r);
        if (!m) {
            return std::nullopt;
        }
        best = std::max(best, *m);
    }
    return best;
}

std::string to_string(DecompositionShape s) {
    switch (s) {
    case DecompositionShape::normal_form:
        return "normal_form";
    case DecompositionShape::both_lagrangian:
        return "both_lagrangian";
    case DecompositionShape::violation:
        return "violation";
    }
    return "?";
}

std::vector<ClassifiedDecomposition> lagrangian_decompositions_finite(const Algebra& a, const ScanOptions& opts) {
    require_In(a);
    const Field f = a.field();
    const std::size_t n = a.dim();
    const Vector en = Vector::unit(f, n, n - 1);
    const Subspace jn = J_of(f, n);
    std::vector<Subspace> subalgebras;
    for (auto& s : all_subspaces(f, n, opts.cap)) {
        if (is_subalgebra(a, s)) {
            subalgebras.push_back(std::move(s));
        }
    }
    std::vector<ClassifiedDecomposition> out;
    for (const auto& s1 : subalgebras) {
        for (const auto& s2 : subalgebras) {
            if (s1.dim() + s2.dim() != n || !is_direct_sum(s1, s2, n)) {
                continue;
            }
            ClassifiedDecomposition c{{s1, s2, std::nullopt, std::nullopt}, DecompositionShape::violation};
            const bool e1 = member(s1, en);
            const bool e2 = member(s2, en);
            const bool ok1 = e1 || is_lagrangian(s1);
            const bool ok2 = e2 || is_lagrangian(s2);
            if (ok1 && ok2) {
                if (e1 || e2) {
                    c.shape = DecompositionShape::normal_form;
                    c.decomposition.w = e1 ? s2 : s1;
                    c.decomposition.u = intersect(e1 ? s1 : s2, jn);
                } else {
                    c.shape = DecompositionShape::both_lagrangian;
                }
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

RBOperator example4_operator(Field field, std::size_t n) {
    if (n < 3) {
        throw Error("the weight-0 example needs n >= 3 (its coefficient is 1/sqrt(2-n))");
    }
    const Scalar d = field.from_integer(2 - static_cast<std::int64_t>(n));
    if (d.is_zero()) {
        throw Error("2 - n vanishes in " + field.name() + ", so 1/sqrt(2 - n) is undefined");
    }
    const Scalar root = require_root(field, d);
    Matrix m(field, n, n);
    m(n - 1, 0) = field.one();
    const Scalar c = root.inverse();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        m(i, 0) = c;
    }
    return {m, field.zero()};
}

RBOperator example5_operator(Field field) {
    const Scalar i = require_root(field, field.from_integer(-1));
    const Scalar one = field.one();
    const Scalar z = field.zero();
    std::vector<Vector> cols{
        Vector(field, {z, z, -i, -one}),
        Vector(field, {z, z, one, -i}),
        Vector(field, {i, -one, z, z}),
        Vector(field, {one, i, z, z}),
    };
    return {Matrix::from_columns(field, 4, cols), field.zero()};
}

Decomposition example6_decomposition(Field field, int sign) {
    if (sign != 1 && sign != -1) {
        throw Error("sign must be +1 or -1");
    }
    const Scalar i = require_root(field, field.from_integer(-1));
    Vector w(field, {field.one(), field.from_integer(sign) * i});
    Subspace a1 = Subspace::span(field, 2, {w});
    Subspace a2 = Subspace::span(field, 2, {Vector::unit(field, 2, 1)});
    return {a1, a2, a1, Subspace(field, 2)};
}

Report totally_real_mechanism_check(const Matrix& a) {
    if (a.field().kind() != FieldKind::rational) {
        throw Error("the sum-of-squares argument needs a matrix over Q");
    }
    const Matrix g = a.transpose() * a;
    if (!g.is_zero()) {
        return Report::pass("A^T A != 0");
    }
    // (A^T A)_jj is the sum of squares of column j; over Q it vanishes only termwise.
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (!a(i, j).is_zero()) {
                return Report::fail({static_cast<int>(i) + 1, static_cast<int>(j) + 1},
                                    "A^T A = 0 with a nonzero rational entry");
            }
        }
    }
    return Report::pass("A^T A = 0 and A = 0");
}

Matrix unital_lift(const Matrix& m, const Scalar& at_unit) {
    const std::size_t n = m.rows();
    Matrix out(m.field(), n + 1, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(r, c) = m(r, c);
        }
    }
    out(n, n) = at_unit;
    return out;
}

} // namespace prelie
