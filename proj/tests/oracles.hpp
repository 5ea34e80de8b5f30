#pragma once

// Independent reference computations for the tests. Everything here works on
// plain integers mod p and the closed-form product of I_n,
//   (v + a e_n)(u + b e_n) = a u + ((v, u) + 2ab) e_n,
// and never touches the library's structure-constant machinery.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using Vec = std::vector<long>;
// Row-major n x n; column j is the image of e_j.
using Mat = std::vector<long>;

inline long md(long x, long p) {
    x %= p;
    return x < 0 ? x + p : x;
}

inline Vec product_In(const Vec& x, const Vec& y, long p) {
    const std::size_t n = x.size();
    const long a = x[n - 1];
    const long b = y[n - 1];
    Vec out(n, 0);
    long dot = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        out[k] = md(a * y[k], p);
        dot += x[k] * y[k];
    }
    out[n - 1] = md(dot + 2 * a * b, p);
    return out;
}

inline Vec column(const Mat& m, std::size_t n, std::size_t j) {
    Vec v(n);
    for (std::size_t r = 0; r < n; ++r) {
        v[r] = m[r * n + j];
    }
    return v;
}

inline Vec apply(const Mat& m, const Vec& x, long p) {
    const std::size_t n = x.size();
    Vec out(n, 0);
    for (std::size_t r = 0; r < n; ++r) {
        long s = 0;
        for (std::size_t c = 0; c < n; ++c) {
            s += m[r * n + c] * x[c];
        }
        out[r] = md(s, p);
    }
    return out;
}

inline Vec unit(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

inline Vec add(Vec x, const Vec& y, long p, long scale = 1) {
    for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] = md(x[k] + scale * y[k], p);
    }
    return x;
}

/// Candidate t -> matrix, entry (r, c) = digit r*n + c in base p.
inline Mat decode(std::uint64_t t, std::size_t n, long p) {
    Mat m(n * n);
    for (auto& e : m) {
        e = static_cast<long>(t % static_cast<std::uint64_t>(p));
        t /= static_cast<std::uint64_t>(p);
    }
    return m;
}

inline bool is_rb(const Mat& m, std::size_t n, long lambda, long p) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ri = column(m, n, i);
            const Vec rj = column(m, n, j);
            const Vec ei = unit(n, i);
            const Vec ej = unit(n, j);
            Vec inner = add(product_In(ri, ej, p), product_In(ei, rj, p), p);
            inner = add(inner, product_In(ei, ej, p), p, lambda);
            if (product_In(ri, rj, p) != apply(m, inner, p)) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_hom(const Mat& m, std::size_t n, long p) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vec lhs = apply(m, product_In(unit(n, i), unit(n, j), p), p);
            if (lhs != product_In(column(m, n, i), column(m, n, j), p)) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_der(const Mat& m, std::size_t n, long p) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vec lhs = apply(m, product_In(unit(n, i), unit(n, j), p), p);
            const Vec rhs = add(product_In(column(m, n, i), unit(n, j), p), product_In(unit(n, i), column(m, n, j), p), p);
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

inline long det_mod(Mat m, std::size_t n, long p) {
    long det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv * n + c] == 0) {
            ++piv;
        }
        if (piv == n) {
            return 0;
        }
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(m[piv * n + k], m[c * n + k]);
            }
            det = md(-det, p);
        }
        long inv = 1;
        for (long t = 1; t < p; ++t) {
            if (md(t * m[c * n + c], p) == 1) {
                inv = t;
            }
        }
        det = md(det * m[c * n + c], p);
        for (std::size_t r = c + 1; r < n; ++r) {
            const long f = md(m[r * n + c] * inv, p);
            for (std::size_t k = 0; k < n; ++k) {
                m[r * n + k] = md(m[r * n + k] - f * m[c * n + k], p);
            }
        }
    }
    return det;
}

/// Q Q^T = E for a k x k matrix mod p.
inline bool is_orthogonal(const Mat& q, std::size_t k, long p) {
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            long s = 0;
            for (std::size_t t = 0; t < k; ++t) {
                s += q[r * k + t] * q[c * k + t];
            }
            if (md(s, p) != (r == c ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

inline std::uint64_t power(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

/// Number of k x k orthogonal matrices mod p, by exhaustion.
inline std::size_t orthogonal_count(std::size_t k, long p) {
    std::size_t count = 0;
    const auto total = power(static_cast<std::uint64_t>(p), static_cast<unsigned>(k * k));
    for (std::uint64_t t = 0; t < total; ++t) {
        if (is_orthogonal(decode(t, k, p), k, p)) {
            ++count;
        }
    }
    return count;
}

/// Indices (in the library's candidate order) of block(Q, 1), Q orthogonal.
inline std::vector<std::uint64_t> embedded_orthogonal_indices(std::size_t n, long p) {
    const std::size_t k = n - 1;
    std::vector<std::uint64_t> out;
    const auto total = power(static_cast<std::uint64_t>(p), static_cast<unsigned>(k * k));
    for (std::uint64_t t = 0; t < total; ++t) {
        const Mat q = decode(t, k, p);
        if (!is_orthogonal(q, k, p)) {
            continue;
        }
        Mat m(n * n, 0);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) {
                m[r * n + c] = q[r * k + c];
            }
        }
        m[n * n - 1] = 1;
        std::uint64_t idx = 0;
        for (std::size_t e = n * n; e-- > 0;) {
            idx = idx * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(m[e]);
        }
        out.push_back(idx);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Indices of every RB operator of weight lambda on I_n mod p.
inline std::vector<std::uint64_t> rb_indices(std::size_t n, long lambda, long p) {
    std::vector<std::uint64_t> out;
    const auto total = power(static_cast<std::uint64_t>(p), static_cast<unsigned>(n * n));
    for (std::uint64_t t = 0; t < total; ++t) {
        if (is_rb(decode(t, n, p), n, lambda, p)) {
            out.push_back(t);
        }
    }
    return out;
}

} // namespace oracle
