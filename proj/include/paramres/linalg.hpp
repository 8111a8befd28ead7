#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace paramres::linalg {

/// Solve min ||A x - b||_2 by column-pivoted Householder QR (A row-major,
/// m x n, m >= n). Pivot directions below rank_rtol times the leading pivot
/// are truncated (their coefficients are zero), so near-rank-deficient
/// systems still solve; an all-zero matrix throws IllConditionedError.
std::vector<double> lstsq(std::vector<double> a, std::size_t m, std::size_t n,
                          std::vector<double> b, double rank_rtol = 1e-10);

/// Complex variant of the same solver.
std::vector<std::complex<double>>
lstsq(std::vector<std::complex<double>> a, std::size_t m, std::size_t n,
      std::vector<std::complex<double>> b, double rank_rtol = 1e-10);

/// All roots of the monic polynomial z^n + c[0] z^(n-1) + ... + c[n-1]
/// by Durand-Kerner iteration. Deterministic; intended for the small,
/// near-unit-circle polynomials of linear prediction.
std::vector<std::complex<double>>
polynomial_roots(const std::vector<double> &monic_coeffs);

} // namespace paramres::linalg
