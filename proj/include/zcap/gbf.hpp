#pragma once

#include "zcap/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace zcap {

/// Sequence over Z_q.
struct ZqVector
{
    int q = 2;
    ExponentVector values;

    ZqVector() = default;
    ZqVector(int q, ExponentVector values);
    ZqVector(int q, std::initializer_list<int> values);

    Eigen::Index size() const noexcept { return values.size(); }
    friend bool operator==(const ZqVector& a, const ZqVector& b) { return a.q == b.q && a.values == b.values; }
};

/// Row-major L1 x L2 array over Z_q.
struct Zq2DArray
{
    int q = 2;
    ExponentMatrix values;

    Zq2DArray() = default;
    Zq2DArray(int q, ExponentMatrix values);

    Eigen::Index rows() const noexcept { return values.rows(); }
    Eigen::Index cols() const noexcept { return values.cols(); }
    friend bool operator==(const Zq2DArray& a, const Zq2DArray& b) { return a.q == b.q && a.values == b.values; }
};

/// Generalized Boolean function Z_2^{n+m} -> Z_q in algebraic normal form.
///
/// Variables are x_1..x_n followed by y_1..y_m. A 1-D function is simply one
/// with m = 0 (or n = 0); its associated sequence reads the variables in that
/// order, most significant first. A monomial is a bitmask: bit s-1 for x_s,
/// bit n+l-1 for y_l. Coefficients are kept in [1, q); zero terms are dropped.
class Gbf
{
public:
    using Monomial = std::uint64_t;
    static constexpr int kMaxVariables = 62;

    Gbf(int q, int n, int m = 0);

    /// Function whose value at index i (most-significant-first bit order over
    /// all n+m variables) is values[i] mod q; len(values) must be 2^(n+m).
    static Gbf from_truth_table(int q, int n, int m, std::span<const int> values);

    int q() const noexcept { return q_; }
    int x_count() const noexcept { return n_; }
    int y_count() const noexcept { return m_; }
    int variable_count() const noexcept { return n_ + m_; }
    const std::map<Monomial, int>& terms() const noexcept { return terms_; }

    Monomial x(int s) const;
    Monomial y(int l) const;

    Gbf& add_term(Monomial monomial, long long coeff);
    Gbf& add_constant(long long coeff) { return add_term(0, coeff); }

    Gbf& operator+=(const Gbf& other);
    Gbf& operator*=(long long scalar);
    friend Gbf operator+(Gbf a, const Gbf& b) { return a += b; }
    friend Gbf operator*(Gbf a, long long s) { return a *= s; }
    friend Gbf operator*(long long s, Gbf a) { return a *= s; }
    /// Product in the Boolean ring (x^2 = x), coefficients mod q.
    friend Gbf operator*(const Gbf& a, const Gbf& b);

    /// Value at the assignment whose set variables are the bits of `point`
    /// (same bit layout as monomials).
    int evaluate_bits(std::uint64_t point) const noexcept;

    friend bool operator==(const Gbf&, const Gbf&) = default;

private:
    void require_compatible(const Gbf& other) const;

    int q_;
    int n_;
    int m_;
    std::map<Monomial, int> terms_;
};

/// Parses "2*x1*x2 + x1*y1 + 3". Terms are '+'- or '-'-separated; a term is
/// a '*'-separated product of integers and variables from {x1..xn, y1..ym}.
/// Coefficients are reduced mod q. Throws ParseError naming the bad token.
Gbf parse_anf(std::string_view text, int q, int n, int m);

/// Renders f in the grammar accepted by parse_anf.
std::string to_anf(const Gbf& f);

/// Value at a named assignment, e.g. {{"x1",1},{"y3",0}}. Every variable
/// must be assigned.
int evaluate(const Gbf& f, const std::map<std::string, int>& point);

/// Truncated associated sequence (f_0..f_{L-1}) over all n+m variables.
ZqVector gbf_to_sequence(const Gbf& f, std::int64_t length);

/// Truncated associated array: rows from x-bits, columns from y-bits.
Zq2DArray gbf2d_to_array(const Gbf& f, std::int64_t rows, std::int64_t cols);

enum class GdjCompanion { first, last };

/// Quadratic-chain function (q/2) sum x_pi(l) x_pi(l+1) + sum v_l x_l + v_0
/// over x_1..x_m. `v` holds v_0..v_m.
Gbf gdj_function(int q, int m, std::span<const int> pi, std::span<const int> v);

/// Golay complementary pair (f, f + (q/2) x_pi(1)) of length 2^m, or with
/// x_pi(m) when companion == last.
std::pair<ZqVector, ZqVector> gdj_pair(int q, int m, std::span<const int> pi, std::span<const int> v,
                                       GdjCompanion companion = GdjCompanion::first);

} // namespace zcap
