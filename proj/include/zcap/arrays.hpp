#pragma once

#include "zcap/sequences.hpp"

#include <iosfwd>
#include <vector>

namespace zcap {

/// Unimodular L1 x L2 array: entry (i, g) is xi_M^{exponents(i, g)}.
struct RootArray
{
    int modulus = 2;
    ExponentMatrix exponents;

    RootArray() = default;
    RootArray(int modulus, ExponentMatrix exponents);

    Eigen::Index rows() const noexcept { return exponents.rows(); }
    Eigen::Index cols() const noexcept { return exponents.cols(); }
    friend bool operator==(const RootArray& a, const RootArray& b)
    {
        return a.modulus == b.modulus && a.exponents == b.exponents;
    }
};

using RootArrayPair = std::pair<RootArray, RootArray>;

RootArray lift(const Zq2DArray& a, int modulus);
RootArray lift(const Zq2DArray& a);
RootArray lift(const RootArray& a, int modulus);
/// The sequence as a single-row array.
RootArray as_row(const RootVector& v);

/// Exact reduced fraction.
struct Ratio
{
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Ratio of(std::int64_t num, std::int64_t den);
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend auto operator<=>(const Ratio& a, const Ratio& b)
    {
        return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
    }
};

/// 2-D aperiodic cross-correlation sum C_{i+u1,g+u2} D*_{i,g} over all
/// in-range index pairs; zero when |u1| >= L1 or |u2| >= L2.
CycSum accf2d(const RootArray& c, const RootArray& d, long long u1, long long u2);
inline CycSum aacf2d(const RootArray& c, long long u1, long long u2) { return accf2d(c, c, u1, u2); }
CycSum aacf2d_sum(const RootArray& s, const RootArray& t, long long u1, long long u2);

struct ZcapCertificate
{
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    int z1 = 0;
    int z2 = 0;
    std::int64_t peak = 0;
    bool verified = false;

    Ratio zcz_ratio() const { return Ratio::of(std::int64_t{z1} * z2, static_cast<std::int64_t>(rows * cols)); }
};

/// Checks the ((L1,L2),(Z1,Z2))-ZCAP property exactly. Uses conjugate symmetry
/// to scan only half of the rectangle.
ZcapCertificate zcap_check(const RootArray& s, const RootArray& t, int z1, int z2);

struct ZczFrontier
{
    /// Maximal rectangles, Z1 ascending (so Z2 descending); none dominates another.
    std::vector<std::pair<int, int>> rectangles;
    Ratio best_ratio;
    std::pair<int, int> best_rectangle{0, 0};
};

ZczFrontier max_zcz_rect(const RootArray& s, const RootArray& t);

/// |rho(S;u1,u2) + rho(T;u1,u2)| on the (2L1-1) x (2L2-1) shift grid; entry
/// (u1 + L1 - 1, u2 + L2 - 1). Exactly-zero cells are 0.0.
Eigen::MatrixXd surface(const RootArray& s, const RootArray& t);

/// CSV with header "u1,u2,magnitude", shifts in lexicographic order.
void write_surface_csv(std::ostream& out, const RootArray& s, const RootArray& t);

/// Floating evaluation xi_M^{e}, for oracles and plotting.
template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> to_complex(const RootArray& a)
{
    const Scalar two_pi = Scalar(2) * std::acos(Scalar(-1));
    return a.exponents.unaryExpr([&](int e) { return std::polar(Scalar(1), two_pi * e / a.modulus); });
}

template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1> to_complex(const RootVector& a)
{
    const Scalar two_pi = Scalar(2) * std::acos(Scalar(-1));
    return a.exponents.unaryExpr([&](int e) { return std::polar(Scalar(1), two_pi * e / a.modulus); });
}

} // namespace zcap
