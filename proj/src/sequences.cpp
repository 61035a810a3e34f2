#include "zcap/sequences.hpp"

#include <numeric>

namespace zcap {

namespace {

void require_same_shape(const RootVector& a, const RootVector& b, const char* what)
{
    if (a.modulus != b.modulus)
        throw std::invalid_argument(std::string(what) + ": modulus mismatch");
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(what) + ": length mismatch");
}

RootVector even_modulus(const RootVector& a)
{
    return a.modulus % 2 == 0 ? a : lift(a, 2 * a.modulus);
}

} // namespace

RootVector::RootVector(int m, ExponentVector e) : modulus(m), exponents(std::move(e))
{
    if (modulus < 1)
        throw std::invalid_argument("RootVector: modulus must be positive");
    if (exponents.size() < 1)
        throw std::invalid_argument("RootVector: length must be at least 1");
    for (Eigen::Index k = 0; k < exponents.size(); ++k)
        if (exponents(k) < 0 || exponents(k) >= modulus)
            throw std::invalid_argument("RootVector: exponent outside [0, M)");
}

RootVector::RootVector(int m, std::initializer_list<int> e) :
    RootVector(m, ExponentVector(Eigen::Map<const ExponentVector>(e.begin(), static_cast<Eigen::Index>(e.size()))))
{
}

RootVector lift(const ZqVector& v, int modulus)
{
    if (modulus < 1 || modulus % v.q != 0)
        throw std::invalid_argument("lift: modulus " + std::to_string(modulus) + " is not a multiple of q = " +
                                    std::to_string(v.q));
    return RootVector(modulus, v.values * (modulus / v.q));
}

RootVector lift(const ZqVector& v) { return lift(v, v.q); }

RootVector lift(const RootVector& v, int modulus)
{
    if (modulus < 1 || modulus % v.modulus != 0)
        throw std::invalid_argument("lift: modulus " + std::to_string(modulus) + " is not a multiple of " +
                                    std::to_string(v.modulus));
    return RootVector(modulus, v.exponents * (modulus / v.modulus));
}

CycSum accf(const RootVector& a, const RootVector& b, long long shift)
{
    require_same_shape(a, b, "accf");
    const long long len = a.size();
    CycSum sum(a.modulus);
    if (shift >= len || shift <= -len)
        return sum;
    if (shift >= 0) {
        for (long long i = 0; i + shift < len; ++i)
            sum.accumulate(a.exponents(i + shift) - b.exponents(i));
    } else {
        for (long long i = 0; i < len + shift; ++i)
            sum.accumulate(a.exponents(i) - b.exponents(i - shift));
    }
    return sum;
}

CycSum aacf_sum(const RootVector& a, const RootVector& b, long long shift)
{
    require_same_shape(a, b, "aacf_sum");
    return aacf(a, shift) + aacf(b, shift);
}

RootVector transform(const RootVector& a, Transform kind)
{
    switch (kind) {
    case Transform::reverse:
        return RootVector(a.modulus, a.exponents.reverse());
    case Transform::conjugate:
        return RootVector(a.modulus, a.exponents.unaryExpr([m = a.modulus](int e) { return mod(-e, m); }));
    case Transform::negate: {
        const RootVector even = even_modulus(a);
        const int m = even.modulus;
        return RootVector(m, even.exponents.unaryExpr([m](int e) { return (e + m / 2) % m; }));
    }
    case Transform::reverse_conjugate:
        return transform(transform(a, Transform::reverse), Transform::conjugate);
    }
    throw std::invalid_argument("transform: unknown kind");
}

ZcpCertificate max_zcz(const RootVector& a, const RootVector& b)
{
    require_same_shape(a, b, "max_zcz");
    ZcpCertificate cert;
    cert.length = static_cast<int>(a.size());
    cert.peak = 2 * static_cast<std::int64_t>(a.size());
    // Unimodular entries make the zero-shift sum exactly 2L.
    if (!cyc_is_integer(aacf_sum(a, b, 0), cert.peak))
        throw std::logic_error("max_zcz: zero-shift sum is not 2L");
    cert.width = cert.length;
    for (int u = 1; u < cert.length; ++u) {
        if (!cyc_is_zero(aacf_sum(a, b, u))) {
            cert.width = u;
            break;
        }
    }
    cert.verified = true;
    return cert;
}

ZcpCertificate zcp_check(const RootVector& a, const RootVector& b, int claimed_width)
{
    if (claimed_width < 1 || claimed_width > a.size())
        throw std::invalid_argument("zcp_check: claimed width outside [1, L]");
    ZcpCertificate cert = max_zcz(a, b);
    cert.claimed = claimed_width;
    cert.verified = cert.width >= claimed_width;
    return cert;
}

RootVectorPair mate_of(const RootVector& c, const RootVector& d)
{
    require_same_shape(c, d, "mate_of");
    RootVector first = transform(d, Transform::reverse_conjugate);
    RootVector second = transform(transform(c, Transform::reverse_conjugate), Transform::negate);
    if (first.modulus != second.modulus)
        first = lift(first, second.modulus);
    return {std::move(first), std::move(second)};
}

bool mate_check(const RootVectorPair& pair, const RootVectorPair& mate, int width)
{
    const auto& [a, b] = pair;
    const auto& [a1, b1] = mate;
    require_same_shape(a, b, "mate_check");
    require_same_shape(a1, b1, "mate_check");
    require_same_shape(a, a1, "mate_check");
    if (width < 1 || width > a.size())
        throw std::invalid_argument("mate_check: width outside [1, L]");
    for (int u = -(width - 1); u < width; ++u)
        if (!cyc_is_zero(accf(a, a1, u) + accf(b, b1, u)))
            return false;
    return true;
}

const std::array<Lemma4Block, 14>& lemma4_pattern()
{
    using enum Lemma4Block;
    // Block classes {0,2,3,5,7}, {1,10,11}, {4,12}, {6,8,9,13}.
    static constexpr std::array<Lemma4Block, 14> pattern{
        a, c, a, a, minus_a, a, minus_c, a, minus_c, minus_c, c, c, minus_a, minus_c};
    return pattern;
}

RootVectorPair concatenate_blocks(const RootVector& a, const RootVector& b, std::span<const Lemma4Block> layout)
{
    require_same_shape(a, b, "concatenate_blocks");
    const RootVector ea = even_modulus(a);
    const RootVector eb = even_modulus(b);
    const auto [c, d] = mate_of(ea, eb);
    const RootVector na = transform(ea, Transform::negate);
    const RootVector nb = transform(eb, Transform::negate);
    const RootVector nc = transform(c, Transform::negate);
    const RootVector nd = transform(d, Transform::negate);

    const Eigen::Index len = a.size();
    const auto count = static_cast<Eigen::Index>(layout.size());
    ExponentVector s(len * count);
    ExponentVector t(len * count);
    for (Eigen::Index k = 0; k < count; ++k) {
        const RootVector* top = nullptr;
        const RootVector* bottom = nullptr;
        switch (layout[k]) {
        case Lemma4Block::a: top = &ea; bottom = &eb; break;
        case Lemma4Block::minus_a: top = &na; bottom = &nb; break;
        case Lemma4Block::c: top = &c; bottom = &d; break;
        case Lemma4Block::minus_c: top = &nc; bottom = &nd; break;
        }
        s.segment(k * len, len) = top->exponents;
        t.segment(k * len, len) = bottom->exponents;
    }
    return {RootVector(ea.modulus, std::move(s)), RootVector(ea.modulus, std::move(t))};
}

RootVectorPair lemma4_extend(const RootVector& a, const RootVector& b)
{
    if (!max_zcz(a, b).is_gcp())
        throw std::invalid_argument("lemma4_extend: input pair is not a Golay complementary pair");
    return concatenate_blocks(a, b, lemma4_pattern());
}

} // namespace zcap
