#include "zcap/arrays.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>

namespace zcap {

namespace {

void require_same_shape(const RootArray& a, const RootArray& b, const char* what)
{
    if (a.modulus != b.modulus)
        throw std::invalid_argument(std::string(what) + ": modulus mismatch");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

} // namespace

RootArray::RootArray(int m, ExponentMatrix e) : modulus(m), exponents(std::move(e))
{
    if (modulus < 1)
        throw std::invalid_argument("RootArray: modulus must be positive");
    if (exponents.rows() < 1 || exponents.cols() < 1)
        throw std::invalid_argument("RootArray: dimensions must be at least 1x1");
    if ((exponents.array() < 0).any() || (exponents.array() >= modulus).any())
        throw std::invalid_argument("RootArray: exponent outside [0, M)");
}

RootArray lift(const Zq2DArray& a, int modulus)
{
    if (modulus < 1 || modulus % a.q != 0)
        throw std::invalid_argument("lift: modulus " + std::to_string(modulus) + " is not a multiple of q = " +
                                    std::to_string(a.q));
    return RootArray(modulus, a.values * (modulus / a.q));
}

RootArray lift(const Zq2DArray& a) { return lift(a, a.q); }

RootArray lift(const RootArray& a, int modulus)
{
    if (modulus < 1 || modulus % a.modulus != 0)
        throw std::invalid_argument("lift: modulus " + std::to_string(modulus) + " is not a multiple of " +
                                    std::to_string(a.modulus));
    return RootArray(modulus, a.exponents * (modulus / a.modulus));
}

RootArray as_row(const RootVector& v)
{
    return RootArray(v.modulus, v.exponents.transpose());
}

Ratio Ratio::of(std::int64_t num, std::int64_t den)
{
    if (den <= 0)
        throw std::invalid_argument("Ratio: denominator must be positive");
    const std::int64_t g = std::gcd(num, den);
    return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

CycSum accf2d(const RootArray& c, const RootArray& d, long long u1, long long u2)
{
    require_same_shape(c, d, "accf2d");
    const long long rows = c.rows();
    const long long cols = c.cols();
    CycSum sum(c.modulus);
    if (u1 >= rows || u1 <= -rows || u2 >= cols || u2 <= -cols)
        return sum;
    const long long i0 = std::max(0LL, -u1), i1 = std::min(rows, rows - u1);
    const long long g0 = std::max(0LL, -u2), g1 = std::min(cols, cols - u2);
    for (long long i = i0; i < i1; ++i)
        for (long long g = g0; g < g1; ++g)
            sum.accumulate(c.exponents(i + u1, g + u2) - d.exponents(i, g));
    return sum;
}

CycSum aacf2d_sum(const RootArray& s, const RootArray& t, long long u1, long long u2)
{
    require_same_shape(s, t, "aacf2d_sum");
    return aacf2d(s, u1, u2) + aacf2d(t, u1, u2);
}

ZcapCertificate zcap_check(const RootArray& s, const RootArray& t, int z1, int z2)
{
    require_same_shape(s, t, "zcap_check");
    if (z1 < 1 || z1 > s.rows() || z2 < 1 || z2 > s.cols())
        throw std::invalid_argument("zcap_check: zone (" + std::to_string(z1) + ", " + std::to_string(z2) +
                                    ") outside the array dimensions");
    ZcapCertificate cert;
    cert.rows = s.rows();
    cert.cols = s.cols();
    cert.z1 = z1;
    cert.z2 = z2;
    cert.peak = 2 * static_cast<std::int64_t>(s.rows() * s.cols());

    cert.verified = cyc_is_integer(aacf2d_sum(s, t, 0, 0), cert.peak);
    for (int u2 = 1; cert.verified && u2 < z2; ++u2)
        cert.verified = cyc_is_zero(aacf2d_sum(s, t, 0, u2));
    for (int u1 = 1; cert.verified && u1 < z1; ++u1)
        for (int u2 = -(z2 - 1); cert.verified && u2 < z2; ++u2)
            cert.verified = cyc_is_zero(aacf2d_sum(s, t, u1, u2));
    return cert;
}

ZczFrontier max_zcz_rect(const RootArray& s, const RootArray& t)
{
    require_same_shape(s, t, "max_zcz_rect");
    const int rows = static_cast<int>(s.rows());
    const int cols = static_cast<int>(s.cols());
    const std::int64_t peak = 2 * static_cast<std::int64_t>(rows) * cols;
    if (!cyc_is_integer(aacf2d_sum(s, t, 0, 0), peak))
        throw std::logic_error("max_zcz_rect: zero-shift sum is not 2*L1*L2");

    // widest[k]: largest Z2 admissible when the zone includes row shift |u1| = k.
    // By conjugate symmetry row shift -k behaves like k with u2 negated.
    std::vector<int> widest(rows, cols);
    for (int u1 = 0; u1 < rows; ++u1) {
        for (int a = u1 == 0 ? 1 : 0; a < cols; ++a) {
            const bool bad = !cyc_is_zero(aacf2d_sum(s, t, u1, a)) ||
                             (u1 > 0 && a > 0 && !cyc_is_zero(aacf2d_sum(s, t, u1, -a)));
            if (bad) {
                widest[u1] = a;
                break;
            }
        }
        if (widest[u1] == 0)
            break;
    }

    ZczFrontier frontier;
    std::vector<int> limit(rows + 1, cols);
    for (int z1 = 1; z1 <= rows; ++z1)
        limit[z1] = std::min(z1 == 1 ? cols : limit[z1 - 1], widest[z1 - 1]);
    for (int z1 = 1; z1 <= rows; ++z1) {
        const int w = limit[z1];
        if (w < 1)
            break;
        if (z1 == rows || limit[z1 + 1] < w)
            frontier.rectangles.emplace_back(z1, w);
    }
    for (const auto& [z1, z2] : frontier.rectangles) {
        const Ratio r = Ratio::of(std::int64_t{z1} * z2, std::int64_t{rows} * cols);
        if (frontier.best_rectangle.first == 0 || r > frontier.best_ratio) {
            frontier.best_ratio = r;
            frontier.best_rectangle = {z1, z2};
        }
    }
    return frontier;
}

namespace {

double magnitude(const CycSum& sum)
{
    if (cyc_is_zero(sum))
        return 0.0;
    const std::complex<double> value = cyc_eval(sum);
    const double nearest = std::round(value.real());
    if (cyc_is_integer(sum, static_cast<std::int64_t>(nearest)))
        return std::abs(nearest);
    return std::abs(value);
}

} // namespace

Eigen::MatrixXd surface(const RootArray& s, const RootArray& t)
{
    require_same_shape(s, t, "surface");
    const long long rows = s.rows();
    const long long cols = s.cols();
    Eigen::MatrixXd grid(2 * rows - 1, 2 * cols - 1);
    for (long long u1 = -(rows - 1); u1 < rows; ++u1)
        for (long long u2 = -(cols - 1); u2 < cols; ++u2)
            grid(u1 + rows - 1, u2 + cols - 1) = magnitude(aacf2d_sum(s, t, u1, u2));
    return grid;
}

void write_surface_csv(std::ostream& out, const RootArray& s, const RootArray& t)
{
    const Eigen::MatrixXd grid = surface(s, t);
    const long long rows = s.rows();
    const long long cols = s.cols();
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::defaultfloat << std::setprecision(15);
    out << "u1,u2,magnitude\n";
    for (long long u1 = -(rows - 1); u1 < rows; ++u1)
        for (long long u2 = -(cols - 1); u2 < cols; ++u2)
            out << u1 << ',' << u2 << ',' << grid(u1 + rows - 1, u2 + cols - 1) << '\n';
    out.flags(flags);
    out.precision(precision);
}

} // namespace zcap
