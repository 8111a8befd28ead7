#include "paramres/linalg.hpp"

#include "paramres/errors.hpp"

#include <algorithm>
#include <cmath>

namespace paramres::linalg {

namespace {

using Complex = std::complex<double>;

double conj_of(double x) { return x; }
Complex conj_of(const Complex &x) { return std::conj(x); }

double abs_of(double x) { return std::abs(x); }
double abs_of(const Complex &x) { return std::abs(x); }

// Column-pivoted Householder QR with a truncated solve: directions whose
// pivot falls below rank_rtol times the leading pivot get coefficient zero,
// so near-rank-deficient systems still produce the best-conditioned fit.
// Throws IllConditionedError only when the matrix has no usable column.
template <typename T>
std::vector<T> householder_lstsq(std::vector<T> a, std::size_t m,
                                 std::size_t n, std::vector<T> b,
                                 double rank_rtol) {
    if (m < n || n == 0)
        throw ValidationError("lstsq: need m >= n >= 1");
    if (a.size() != m * n || b.size() != m)
        throw ValidationError("lstsq: shape mismatch");

    std::vector<std::size_t> perm(n);
    for (std::size_t j = 0; j < n; ++j)
        perm[j] = j;

    std::vector<T> v(m);
    std::vector<double> r_diag(n, 0.0);
    std::size_t rank = n;
    for (std::size_t k = 0; k < n; ++k) {
        // pivot on the largest remaining column
        std::size_t best = k;
        double best_norm = -1.0;
        for (std::size_t j = k; j < n; ++j) {
            double norm2 = 0.0;
            for (std::size_t i = k; i < m; ++i)
                norm2 += abs_of(a[i * n + j]) * abs_of(a[i * n + j]);
            if (norm2 > best_norm) {
                best_norm = norm2;
                best = j;
            }
        }
        if (best != k) {
            for (std::size_t i = 0; i < m; ++i)
                std::swap(a[i * n + k], a[i * n + best]);
            std::swap(perm[k], perm[best]);
        }
        const double norm = std::sqrt(std::max(0.0, best_norm));
        r_diag[k] = norm;
        if (k == 0 && norm == 0.0)
            throw IllConditionedError("lstsq: zero matrix");
        if (norm < rank_rtol * r_diag[0]) {
            rank = k;
            break;
        }

        // beta = -exp(j arg(a_kk)) * norm keeps v[k] away from cancellation
        T akk = a[k * n + k];
        T phase = abs_of(akk) == 0.0 ? T(1) : akk / T(abs_of(akk));
        T beta = -phase * T(norm);

        double vnorm2 = 0.0;
        for (std::size_t i = k; i < m; ++i) {
            v[i] = a[i * n + k];
            if (i == k)
                v[i] -= beta;
            vnorm2 += abs_of(v[i]) * abs_of(v[i]);
        }
        if (vnorm2 == 0.0)
            continue;

        auto reflect = [&](T *col, std::size_t stride) {
            T dot = T(0);
            for (std::size_t i = k; i < m; ++i)
                dot += conj_of(v[i]) * col[i * stride];
            dot *= T(2.0 / vnorm2);
            for (std::size_t i = k; i < m; ++i)
                col[i * stride] -= dot * v[i];
        };
        for (std::size_t j = k; j < n; ++j)
            reflect(&a[j], n);
        reflect(b.data(), 1);
        a[k * n + k] = beta;
    }

    std::vector<T> x_pivoted(n, T(0));
    for (std::size_t k = rank; k-- > 0;) {
        T s = b[k];
        for (std::size_t j = k + 1; j < rank; ++j)
            s -= a[k * n + j] * x_pivoted[j];
        x_pivoted[k] = s / a[k * n + k];
    }
    std::vector<T> x(n);
    for (std::size_t j = 0; j < n; ++j)
        x[perm[j]] = x_pivoted[j];
    return x;
}

Complex horner(const std::vector<Complex> &monic, const Complex &z) {
    Complex p(1.0, 0.0);
    for (const Complex &c : monic)
        p = p * z + c;
    return p;
}

} // namespace

std::vector<double> lstsq(std::vector<double> a, std::size_t m, std::size_t n,
                          std::vector<double> b, double rank_rtol) {
    return householder_lstsq(std::move(a), m, n, std::move(b), rank_rtol);
}

std::vector<Complex> lstsq(std::vector<Complex> a, std::size_t m,
                           std::size_t n, std::vector<Complex> b,
                           double rank_rtol) {
    return householder_lstsq(std::move(a), m, n, std::move(b), rank_rtol);
}

std::vector<Complex> polynomial_roots(const std::vector<double> &monic_coeffs) {
    const std::size_t deg = monic_coeffs.size();
    std::vector<Complex> c(monic_coeffs.begin(), monic_coeffs.end());
    std::vector<Complex> z(deg);
    if (deg == 0)
        return z;
    if (deg == 1) {
        z[0] = -c[0];
        return z;
    }

    const Complex seed(0.4, 0.9); // standard non-real, non-unit starting ray
    z[0] = seed;
    for (std::size_t i = 1; i < deg; ++i)
        z[i] = z[i - 1] * seed;

    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < deg; ++i) {
            Complex denom(1.0, 0.0);
            for (std::size_t k = 0; k < deg; ++k)
                if (k != i)
                    denom *= z[i] - z[k];
            if (std::abs(denom) == 0.0)
                continue;
            const Complex step = horner(c, z[i]) / denom;
            z[i] -= step;
            worst = std::max(worst,
                             std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (worst < 1e-14)
            break;
    }
    return z;
}

} // namespace paramres::linalg
