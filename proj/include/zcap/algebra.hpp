#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace zcap {

/// Integer polynomial, lowest degree first. The zero polynomial has no
/// coefficients; otherwise the highest coefficient is nonzero.
class IntPoly
{
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<std::int64_t> coeffs);

    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim();

    std::vector<std::int64_t> coeffs_;
};

/// Exact product of integer polynomials. Throws std::overflow_error.
IntPoly multiply(const IntPoly& a, const IntPoly& b);

/// Quotient and remainder of a by a monic divisor.
struct PolyDivision
{
    IntPoly quotient;
    IntPoly remainder;
};
PolyDivision divide_monic(const IntPoly& a, const IntPoly& monic_divisor);

/// The M-th cyclotomic polynomial, by dividing x^M - 1 by the cyclotomic
/// polynomials of every proper divisor of M. Results are cached.
IntPoly cyclotomic_poly(int modulus);

/// Sum of M-th roots of unity with integer multiplicities:
/// value = sum_k coeffs[k] * exp(2*pi*i*k/M).
///
/// Every aperiodic correlation value of sequences over Z_q lives in this
/// ring, so "is this correlation exactly zero" is decided structurally
/// instead of by comparing doubles.
class CycSum
{
public:
    explicit CycSum(int modulus);
    CycSum(int modulus, std::vector<std::int64_t> coeffs);

    int modulus() const noexcept { return static_cast<int>(coeffs_.size()); }
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }

    /// Adds weight * xi_M^exponent; the exponent is reduced mod M.
    CycSum& accumulate(std::int64_t exponent, std::int64_t weight = 1);
    CycSum& operator+=(const CycSum& other);
    /// Complex conjugate: xi^k -> xi^{-k}.
    CycSum conjugate() const;

    friend bool operator==(const CycSum&, const CycSum&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

CycSum operator+(CycSum lhs, const CycSum& rhs);

/// Functional form of CycSum::accumulate.
CycSum cyc_accumulate(CycSum sum, std::int64_t exponent, std::int64_t weight);

/// True iff the represented value equals the rational integer n, decided by
/// exact divisibility of (sum - n) by the M-th cyclotomic polynomial.
bool cyc_is_integer(const CycSum& sum, std::int64_t n);

inline bool cyc_is_zero(const CycSum& sum) { return cyc_is_integer(sum, 0); }

/// Floating-point value, for export only.
std::complex<double> cyc_eval(const CycSum& sum);

} // namespace zcap
