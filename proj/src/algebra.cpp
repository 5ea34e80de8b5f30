#include "prelie/algebra.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <tuple>

#include "prelie/parallel.hpp"

namespace prelie {

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(Field field, std::size_t dim, std::vector<StructureConstant> table)
    : field_(field), dim_(dim) {
    if (dim == 0) {
        throw Error("algebra dimension must be at least 1");
    }
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> merged;
    for (auto& e : table) {
        if (e.i >= dim || e.j >= dim || e.k >= dim) {
            throw Error("structure constant index out of range");
        }
        if (e.c.field() != field) {
            throw Error("structure constant from a different field");
        }
        auto key = std::make_tuple(e.i, e.j, e.k);
        auto it = merged.find(key);
        if (it == merged.end()) {
            merged.emplace(key, e.c);
        } else {
            it->second += e.c;
        }
    }
    for (auto& [key, c] : merged) {
        if (!c.is_zero()) {
            auto [i, j, k] = key;
            table_.push_back({i, j, k, c});
        }
    }
    products_.assign(dim * dim, Vector(field, dim));
    for (const auto& e : table_) {
        products_[e.i * dim + e.j][e.k] += e.c;
    }
    left_.assign(dim, Matrix(field, dim, dim));
    right_.assign(dim, Matrix(field, dim, dim));
    for (const auto& e : table_) {
        // (e_i e_j)_k = c: column j of L_{e_i}, column i of R_{e_j}.
        left_[e.i](e.k, e.j) += e.c;
        right_[e.j](e.k, e.i) += e.c;
    }
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) {
        throw Error("multiply: vector length does not match the algebra dimension");
    }
    Vector out(field_, dim_);
    for (const auto& e : table_) {
        if (x[e.i].is_zero() || y[e.j].is_zero()) {
            continue;
        }
        out[e.k] += e.c * x[e.i] * y[e.j];
    }
    return out;
}

Vector multiply(const Algebra& a, const Vector& x, const Vector& y) { return a.multiply(x, y); }

Matrix right_multiplication(const Algebra& a, const Vector& x) {
    Matrix m(a.field(), a.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        Vector col = a.multiply(a.basis(j), x);
        for (std::size_t r = 0; r < a.dim(); ++r) {
            m(r, j) = col[r];
        }
    }
    return m;
}

Matrix left_multiplication(const Algebra& a, const Vector& x) {
    Matrix m(a.field(), a.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        Vector col = a.multiply(x, a.basis(j));
        for (std::size_t r = 0; r < a.dim(); ++r) {
            m(r, j) = col[r];
        }
    }
    return m;
}

Scalar trace(const Matrix& m) {
    if (!m.is_square()) {
        throw Error("trace of a non-square matrix");
    }
    Scalar t = m.field().zero();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        t += m(i, i);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Identities

namespace {

// (xy)z - x(yz) on basis vectors.
Vector associator(const Algebra& a, std::size_t x, std::size_t y, std::size_t z) {
    return a.right_basis(z) * a.basis_product(x, y) - a.left_basis(x) * a.basis_product(y, z);
}

std::vector<int> labels(std::initializer_list<std::size_t> idx) {
    std::vector<int> out;
    for (auto i : idx) {
        out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

std::string tuple_text(const std::vector<int>& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        os << (i ? "," : "") << "e_" << w[i];
    }
    os << ')';
    return os.str();
}

Report violated(std::vector<int> w, const std::string& what) {
    std::string msg = what + " fails at " + tuple_text(w);
    return Report::fail(std::move(w), msg);
}

Report check_third_power_symbolic(const Algebra& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = j; k < n; ++k) {
                std::array<std::size_t, 3> perm{i, j, k};
                Vector coeff(a.field(), n);
                do {
                    coeff += associator(a, perm[0], perm[1], perm[2]);
                } while (std::next_permutation(perm.begin(), perm.end()));
                if (!coeff.is_zero()) {
                    return violated(labels({i, j, k}), "(xx)x = x(xx): coefficient of t_" +
                                                           std::to_string(i + 1) + " t_" + std::to_string(j + 1) +
                                                           " t_" + std::to_string(k + 1));
                }
            }
        }
    }
    return Report::pass("third-power associative");
}

} // namespace

Report check_identity(const Algebra& a, IdentityKind kind) {
    const std::size_t n = a.dim();
    switch (kind) {
    case IdentityKind::pre_lie:
    case IdentityKind::novikov:
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                for (std::size_t z = 0; z < n; ++z) {
                    if (associator(a, x, y, z) != associator(a, y, x, z)) {
                        return violated(labels({x, y, z}), "(xy)z - x(yz) = (yx)z - y(xz)");
                    }
                    if (kind == IdentityKind::novikov &&
                        a.right_basis(z) * a.basis_product(x, y) != a.right_basis(y) * a.basis_product(x, z)) {
                        return violated(labels({x, y, z}), "(xy)z = (xz)y");
                    }
                }
            }
        }
        return Report::pass();
    case IdentityKind::flexible:
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (!associator(a, x, y, x).is_zero()) {
                    return violated(labels({x, y, x}), "(xy)x = x(yx)");
                }
                for (std::size_t z = 0; z < n; ++z) {
                    if (!(associator(a, x, y, z) + associator(a, z, y, x)).is_zero()) {
                        return violated(labels({x, y, z}), "(x,y,z) + (z,y,x) = 0");
                    }
                }
            }
        }
        return Report::pass();
    case IdentityKind::commutative:
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = x + 1; y < n; ++y) {
                if (a.basis_product(x, y) != a.basis_product(y, x)) {
                    return violated(labels({x, y}), "xy = yx");
                }
            }
        }
        return Report::pass();
    case IdentityKind::third_power_associative:
        return check_third_power_symbolic(a);
    case IdentityKind::lie:
        for (std::size_t x = 0; x < n; ++x) {
            if (!a.basis_product(x, x).is_zero()) {
                return violated(labels({x, x}), "xx = 0");
            }
            for (std::size_t y = 0; y < n; ++y) {
                if (!(a.basis_product(x, y) + a.basis_product(y, x)).is_zero()) {
                    return violated(labels({x, y}), "xy = -yx");
                }
                for (std::size_t z = 0; z < n; ++z) {
                    Vector jac = a.right_basis(z) * a.basis_product(x, y) +
                                 a.right_basis(x) * a.basis_product(y, z) +
                                 a.right_basis(y) * a.basis_product(z, x);
                    if (!jac.is_zero()) {
                        return violated(labels({x, y, z}), "Jacobi identity");
                    }
                }
            }
        }
        return Report::pass();
    }
    return Report::pass();
}

Report check_third_power_associative_exhaustive(const Algebra& a, std::uint64_t cap) {
    const Field f = a.field();
    const std::uint64_t q = f.order();
    const std::size_t n = a.dim();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / q) {
            throw CapExceededError("q^n exceeds the enumeration cap");
        }
        total *= q;
    }
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vector x(f, n);
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = f.element(rest % q);
            rest /= q;
        }
        Vector xx = a.multiply(x, x);
        if (a.multiply(xx, x) != a.multiply(x, xx)) {
            return Report::fail({}, "(xx)x != x(xx) at x = " + x.to_string());
        }
    }
    return Report::pass("third-power associative on every element");
}

// ---------------------------------------------------------------------------
// Builders

Algebra build_In(Field field, std::size_t n) {
    if (n == 0) {
        throw Error("I_n needs n >= 1");
    }
    const std::size_t last = n - 1;
    std::vector<StructureConstant> t;
    t.push_back({last, last, last, field.from_integer(2)});
    for (std::size_t j = 0; j < last; ++j) {
        t.push_back({last, j, j, field.one()});
        t.push_back({j, j, last, field.one()});
    }
    return Algebra(field, n, std::move(t));
}

std::optional<std::size_t> burde_dimension(const Algebra& a) {
    if (a == build_In(a.field(), a.dim())) {
        return a.dim();
    }
    return std::nullopt;
}

Algebra build_example1(Field field, std::size_t n, const Vector& a) {
    if (a.size() != n) {
        throw Error("example 1: vector length must equal n");
    }
    if (a.is_zero()) {
        throw Error("example 1: the distinguished vector a must be nonzero");
    }
    // e_i o e_j = delta_ij a + a_i e_j
    std::vector<StructureConstant> t;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            t.push_back({i, i, k, a[k]});
        }
        for (std::size_t j = 0; j < n; ++j) {
            t.push_back({i, j, j, a[i]});
        }
    }
    return Algebra(field, n, std::move(t));
}

std::size_t UpperTriangular::index(std::size_t n, std::size_t i, std::size_t j) {
    // rows 0..i-1 contribute n, n-1, ..., n-i+1 units
    return i * n - i * (i - 1) / 2 + (j - i);
}

UpperTriangular build_Un_circ(Field field, std::size_t n) {
    if (n == 0) {
        throw Error("U_n needs n >= 1");
    }
    if (field.characteristic() == 2) {
        throw Error("tau needs 1/2: characteristic 2 is not supported");
    }
    const Scalar half = field.from_integer(2).inverse();
    auto unit = [&](std::size_t i, std::size_t j) {
        Matrix m(field, n, n);
        m(i, j) = field.one();
        return m;
    };
    auto tau = [&](const Matrix& m) {
        Matrix out(field, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                out(i, j) = i == j ? m(i, i) * half : m(i, j);
            }
        }
        return out;
    };
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            units.emplace_back(i, j);
        }
    }
    const std::size_t dim = units.size();
    std::vector<StructureConstant> t;
    for (std::size_t p = 0; p < dim; ++p) {
        const Matrix x = unit(units[p].first, units[p].second);
        for (std::size_t q = 0; q < dim; ++q) {
            const Matrix y = unit(units[q].first, units[q].second);
            const Matrix prod = x * y + tau(x * y.transpose() + y * x.transpose());
            for (std::size_t r = 0; r < dim; ++r) {
                const Scalar& c = prod(units[r].first, units[r].second);
                if (!c.is_zero()) {
                    t.push_back({p, q, r, c});
                }
            }
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    if (!prod(i, j).is_zero()) {
                        throw Error("U_n product left the upper-triangular matrices");
                    }
                }
            }
        }
    }
    UpperTriangular out{Algebra(field, dim, std::move(t)), {}};
    for (std::size_t j = 0; j < n; ++j) {
        out.first_row.push_back(UpperTriangular::index(n, 0, j));
    }
    return out;
}

Algebra extract_subalgebra(const Algebra& a, std::span<const std::size_t> indices) {
    std::vector<std::size_t> position(a.dim(), a.dim());
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= a.dim() || position[indices[k]] != a.dim()) {
            throw Error("extract_subalgebra: invalid or repeated basis index");
        }
        position[indices[k]] = k;
    }
    std::vector<StructureConstant> t;
    for (const auto& e : a.table()) {
        const bool in_i = position[e.i] != a.dim();
        const bool in_j = position[e.j] != a.dim();
        if (!in_i || !in_j) {
            continue;
        }
        if (position[e.k] == a.dim()) {
            throw Error("extract_subalgebra: product e_" + std::to_string(e.i + 1) + " e_" +
                        std::to_string(e.j + 1) + " leaves the span");
        }
        t.push_back({position[e.i], position[e.j], position[e.k], e.c});
    }
    return Algebra(a.field(), indices.size(), std::move(t));
}

Algebra permute_basis(const Algebra& a, std::span<const std::size_t> perm) {
    if (perm.size() != a.dim()) {
        throw Error("permute_basis: permutation has the wrong length");
    }
    std::vector<bool> seen(a.dim(), false);
    for (auto p : perm) {
        if (p >= a.dim() || seen[p]) {
            throw Error("permute_basis: not a permutation");
        }
        seen[p] = true;
    }
    std::vector<StructureConstant> t;
    for (const auto& e : a.table()) {
        t.push_back({perm[e.i], perm[e.j], perm[e.k], e.c});
    }
    return Algebra(a.field(), a.dim(), std::move(t));
}

Algebra build_I_infinity_truncation(Field field, std::size_t m) {
    std::vector<StructureConstant> t;
    t.push_back({0, 0, 0, field.from_integer(2)});
    for (std::size_t j = 1; j <= m; ++j) {
        t.push_back({0, j, j, field.one()});
        t.push_back({j, j, 0, field.one()});
    }
    return Algebra(field, m + 1, std::move(t));
}

Algebra plus_algebra(const Algebra& a) {
    if (a.field().characteristic() == 2) {
        throw Error("plus algebra needs 1/2: characteristic 2 is not supported");
    }
    const Scalar half = a.field().from_integer(2).inverse();
    std::vector<StructureConstant> t;
    for (const auto& e : a.table()) {
        t.push_back({e.i, e.j, e.k, e.c * half});
        t.push_back({e.j, e.i, e.k, e.c * half});
    }
    return Algebra(a.field(), a.dim(), std::move(t));
}

Algebra minus_algebra(const Algebra& a) {
    std::vector<StructureConstant> t;
    for (const auto& e : a.table()) {
        t.push_back({e.i, e.j, e.k, e.c});
        t.push_back({e.j, e.i, e.k, -e.c});
    }
    return Algebra(a.field(), a.dim(), std::move(t));
}

Algebra unital_extension(const Algebra& a) {
    const std::size_t u = a.dim();
    std::vector<StructureConstant> t(a.table().begin(), a.table().end());
    const Scalar one = a.field().one();
    for (std::size_t i = 0; i < u; ++i) {
        t.push_back({u, i, i, one});
        t.push_back({i, u, i, one});
    }
    t.push_back({u, u, u, one});
    return Algebra(a.field(), u + 1, std::move(t));
}

// ---------------------------------------------------------------------------
// Ideals and simplicity

bool is_ideal(const Algebra& a, const Subspace& w) {
    for (const auto& v : w.basis_vectors()) {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (!member(w, a.left_basis(i) * v) || !member(w, a.right_basis(i) * v)) {
                return false;
            }
        }
    }
    return true;
}

bool is_subalgebra(const Algebra& a, const Subspace& w) {
    const auto vs = w.basis_vectors();
    for (const auto& x : vs) {
        for (const auto& y : vs) {
            if (!member(w, a.multiply(x, y))) {
                return false;
            }
        }
    }
    return true;
}

Ideal::Ideal(std::shared_ptr<const Algebra> algebra, Subspace space)
    : algebra_(std::move(algebra)), space_(std::move(space)) {
    if (space_.ambient_dim() != algebra_->dim()) {
        throw Error("ideal: ambient dimension mismatch");
    }
    if (!is_ideal(*algebra_, space_)) {
        throw Error("subspace is not a two-sided ideal");
    }
}

namespace {

Subspace closure_space(const Algebra& a, const Subspace& seed) {
    Subspace w = seed;
    while (true) {
        std::vector<Vector> gens = w.basis_vectors();
        const std::size_t before = gens.size();
        for (std::size_t g = 0; g < before; ++g) {
            for (std::size_t i = 0; i < a.dim(); ++i) {
                gens.push_back(a.left_basis(i) * gens[g]);
                gens.push_back(a.right_basis(i) * gens[g]);
            }
        }
        Subspace next = Subspace::span(a.field(), a.dim(), gens);
        if (next.dim() == w.dim()) {
            return next;
        }
        w = std::move(next);
    }
}

} // namespace

Ideal ideal_closure(const Algebra& a, const Subspace& seed) {
    if (seed.ambient_dim() != a.dim()) {
        throw Error("ideal_closure: seed ambient dimension mismatch");
    }
    return Ideal(std::make_shared<const Algebra>(a), closure_space(a, seed));
}

SimplicityResult is_simple_finite(const Algebra& a, std::uint64_t cap, unsigned workers) {
    const Field f = a.field();
    const std::uint64_t q = f.order();
    const std::size_t n = a.dim();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / q) {
            throw CapExceededError("q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                                   " exceeds the simplicity cap " + std::to_string(cap));
        }
        total *= q;
    }
    if (a.has_zero_product()) {
        SimplicityResult r{Report::fail({}, "the product is identically zero"), std::nullopt};
        if (n > 1) {
            r.witness_ideal = Subspace::span(f, n, {a.basis(0)});
        }
        return r;
    }
    // Projective points: first nonzero coordinate equal to one. Point number
    // t enumerates pivots in order, then the trailing coordinates base q.
    std::vector<std::uint64_t> offsets{0};
    std::uint64_t per_pivot = total / q;
    for (std::size_t p = 0; p < n; ++p) {
        offsets.push_back(offsets.back() + per_pivot);
        per_pivot /= q;
    }
    const std::uint64_t points = offsets.back();
    auto point = [&](std::uint64_t t) {
        std::size_t pivot = 0;
        while (t >= offsets[pivot + 1]) {
            ++pivot;
        }
        std::uint64_t rest = t - offsets[pivot];
        Vector x(f, n);
        x[pivot] = f.one();
        for (std::size_t c = n; c-- > pivot + 1;) {
            x[c] = f.element(rest % q);
            rest /= q;
        }
        return x;
    };
    auto chunks = map_chunks(points, workers, [&](std::uint64_t begin, std::uint64_t end) {
        std::optional<Subspace> found;
        for (std::uint64_t t = begin; t < end && !found; ++t) {
            Subspace c = closure_space(a, Subspace::span(f, n, {point(t)}));
            if (c.dim() < n) {
                found = std::move(c);
            }
        }
        return found;
    });
    for (auto& c : chunks) {
        if (c) {
            std::string msg = "proper ideal " + c->to_string();
            return {Report::fail({}, msg), std::move(c)};
        }
    }
    return {Report::pass("simple: every one of " + std::to_string(points) +
                         " projective points generates the algebra"),
            std::nullopt};
}

} // namespace prelie
