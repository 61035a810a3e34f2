#include "zcap/algebra.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace zcap {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in cyclotomic arithmetic");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in cyclotomic arithmetic");
    return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    auto r = a % m;
    return r < 0 ? r + m : r;
}

// Row k holds x^k mod Phi_M, padded to deg Phi_M coefficients.
struct ReductionTable
{
    int degree = 0;
    std::vector<std::vector<std::int64_t>> rows;
};

const ReductionTable& reduction_table(int modulus)
{
    static std::mutex mutex;
    static std::map<int, ReductionTable> cache;

    std::lock_guard lock(mutex);
    if (auto it = cache.find(modulus); it != cache.end())
        return it->second;

    const IntPoly phi = cyclotomic_poly(modulus);
    ReductionTable table;
    table.degree = phi.degree();
    table.rows.reserve(modulus);
    for (int k = 0; k < modulus; ++k) {
        std::vector<std::int64_t> mono(k + 1, 0);
        mono[k] = 1;
        auto rem = divide_monic(IntPoly(std::move(mono)), phi).remainder.coeffs();
        rem.resize(table.degree, 0);
        table.rows.push_back(std::move(rem));
    }
    return cache.emplace(modulus, std::move(table)).first->second;
}

} // namespace

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<std::int64_t> out(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(x[i], y[j]));
    return IntPoly(std::move(out));
}

PolyDivision divide_monic(const IntPoly& a, const IntPoly& monic_divisor)
{
    if (monic_divisor.is_zero() || monic_divisor.coeffs().back() != 1)
        throw std::invalid_argument("divide_monic: divisor must be monic");

    const auto& d = monic_divisor.coeffs();
    const int dd = monic_divisor.degree();
    std::vector<std::int64_t> rem = a.coeffs();
    if (a.degree() < dd)
        return {IntPoly{}, a};

    std::vector<std::int64_t> quot(a.degree() - dd + 1, 0);
    for (int k = a.degree(); k >= dd; --k) {
        const std::int64_t lead = rem[k];
        if (lead == 0)
            continue;
        quot[k - dd] = lead;
        for (int j = 0; j <= dd; ++j)
            rem[k - dd + j] = checked_add(rem[k - dd + j], -checked_mul(lead, d[j]));
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly cyclotomic_poly(int modulus)
{
    if (modulus < 1)
        throw std::invalid_argument("cyclotomic_poly: modulus must be positive");

    static std::mutex mutex;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(modulus); it != cache.end())
            return it->second;
    }

    IntPoly divisor_product({1});
    for (int d = 1; d < modulus; ++d)
        if (modulus % d == 0)
            divisor_product = multiply(divisor_product, cyclotomic_poly(d));

    std::vector<std::int64_t> xm1(modulus + 1, 0);
    xm1[0] = -1;
    xm1[modulus] = 1;
    auto [quot, rem] = divide_monic(IntPoly(std::move(xm1)), divisor_product);
    if (!rem.is_zero())
        throw std::logic_error("cyclotomic_poly: inexact division");

    std::lock_guard lock(mutex);
    return cache.emplace(modulus, std::move(quot)).first->second;
}

CycSum::CycSum(int modulus)
{
    if (modulus < 1)
        throw std::invalid_argument("CycSum: modulus must be positive");
    coeffs_.assign(modulus, 0);
}

CycSum::CycSum(int modulus, std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs))
{
    if (modulus < 1)
        throw std::invalid_argument("CycSum: modulus must be positive");
    if (static_cast<int>(coeffs_.size()) != modulus)
        throw std::invalid_argument("CycSum: coefficient count must equal the modulus");
}

CycSum& CycSum::accumulate(std::int64_t exponent, std::int64_t weight)
{
    auto& c = coeffs_[mod_floor(exponent, modulus())];
    c = checked_add(c, weight);
    return *this;
}

CycSum& CycSum::operator+=(const CycSum& other)
{
    if (other.modulus() != modulus())
        throw std::invalid_argument("CycSum: modulus mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
    return *this;
}

CycSum CycSum::conjugate() const
{
    const int m = modulus();
    std::vector<std::int64_t> out(m, 0);
    for (int k = 0; k < m; ++k)
        out[(m - k) % m] = coeffs_[k];
    return CycSum(m, std::move(out));
}

CycSum operator+(CycSum lhs, const CycSum& rhs)
{
    lhs += rhs;
    return lhs;
}

CycSum cyc_accumulate(CycSum sum, std::int64_t exponent, std::int64_t weight)
{
    sum.accumulate(exponent, weight);
    return sum;
}

bool cyc_is_integer(const CycSum& sum, std::int64_t n)
{
    const auto& table = reduction_table(sum.modulus());
    std::vector<std::int64_t> residue(table.degree, 0);
    const auto& c = sum.coeffs();
    for (int k = 0; k < sum.modulus(); ++k) {
        const std::int64_t w = k == 0 ? checked_add(c[0], -n) : c[k];
        if (w == 0)
            continue;
        const auto& row = table.rows[k];
        for (int j = 0; j < table.degree; ++j)
            if (row[j] != 0)
                residue[j] = checked_add(residue[j], checked_mul(w, row[j]));
    }
    for (auto r : residue)
        if (r != 0)
            return false;
    return true;
}

std::complex<double> cyc_eval(const CycSum& sum)
{
    const int m = sum.modulus();
    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < m; ++k) {
        if (sum.coeffs()[k] == 0)
            continue;
        const double angle = 2.0 * std::numbers::pi * k / m;
        acc += static_cast<double>(sum.coeffs()[k]) * std::polar(1.0, angle);
    }
    return acc;
}

} // namespace zcap
