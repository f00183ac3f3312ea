#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace stf {

// Small dense complex matrix with capacity 6x6. Extended-precision scalars:
// group elements are short products of roots of unity and quadrature sums
// feed moment checks at 1e-6 absolute, so the extra mantissa bits matter.
using cplx = std::complex<long double>;

struct CMat {
    int n = 0;
    std::array<cplx, 36> a{};

    CMat() = default;
    explicit CMat(int dim) : n(dim) {}

    cplx& at(int i, int j) { return a[(size_t)(i * n + j)]; }
    const cplx& at(int i, int j) const { return a[(size_t)(i * n + j)]; }

    static CMat ident(int dim) {
        CMat m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }
};

inline CMat mul(const CMat& x, const CMat& y) {
    CMat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            cplx v = x.at(i, k);
            if (v == cplx{}) continue;
            for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

inline CMat adjoint(const CMat& x) { // inverse, for unitary x
    CMat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r.at(i, j) = std::conj(x.at(j, i));
    return r;
}

inline CMat transpose(const CMat& x) {
    CMat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r.at(i, j) = x.at(j, i);
    return r;
}

inline cplx trace(const CMat& x) {
    cplx t = 0;
    for (int i = 0; i < x.n; ++i) t += x.at(i, i);
    return t;
}

inline double max_abs_diff(const CMat& x, const CMat& y) {
    long double m = 0;
    for (int i = 0; i < x.n * x.n; ++i) {
        long double d = std::abs(x.a[(size_t)i] - y.a[(size_t)i]);
        if (d > m) m = d;
    }
    return (double)m;
}

} // namespace stf
