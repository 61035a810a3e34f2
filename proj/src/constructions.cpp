#include "zcap/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace zcap {

namespace {

int resolve_width(const RootVector& x, const RootVector& y, std::optional<int> claimed, bool check, const char* which)
{
    if (!claimed)
        return max_zcz(x, y).width;
    if (*claimed < 1 || *claimed > x.size())
        throw std::invalid_argument(std::string(which) + ": claimed width outside [1, L]");
    if (check && !zcp_check(x, y, *claimed).verified)
        throw std::invalid_argument(std::string(which) + ": input pair is not a ZCP of width " +
                                    std::to_string(*claimed));
    return *claimed;
}

void require_pair(const RootVector& x, const RootVector& y, const char* what)
{
    if (x.modulus != y.modulus || x.size() != y.size())
        throw std::invalid_argument(std::string(what) + ": pair members differ in modulus or length");
}

std::vector<int> or_zeros(const std::vector<int>& values, std::size_t count, const char* what)
{
    if (values.empty())
        return std::vector<int>(count, 0);
    if (values.size() != count)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(count) + " values");
    return values;
}

} // namespace

RootArrayPair theorem1_combine(const RootVector& a, const RootVector& b, const RootVector& c, const RootVector& d,
                               const CombineOptions& options)
{
    if (a.modulus != 2 || b.modulus != 2)
        throw std::invalid_argument("theorem1_combine: (A, B) must be binary (modulus 2)");
    require_pair(a, b, "theorem1_combine");
    require_pair(c, d, "theorem1_combine");

    const int z1 = resolve_width(a, b, options.z1, options.check_inputs, "theorem1_combine (A, B)");
    const int z2 = resolve_width(c, d, options.z2, options.check_inputs, "theorem1_combine (C, D)");

    const int modulus = std::lcm(2, c.modulus);
    const int half = modulus / 2;
    const RootVector cl = lift(c, modulus);
    const RootVector dl = lift(d, modulus);
    const Eigen::Index rows = a.size();
    const Eigen::Index cols = c.size();

    ExponentMatrix s(rows, cols);
    ExponentMatrix t(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const int sign = half * a.exponents(i);
        const bool agree = a.exponents(i) == b.exponents(i);
        for (Eigen::Index g = 0; g < cols; ++g) {
            const Eigen::Index r = cols - 1 - g;
            s(i, g) = agree ? mod(sign + cl.exponents(g), modulus) : mod(sign - dl.exponents(r), modulus);
            t(i, g) = agree ? mod(sign + dl.exponents(g), modulus) : mod(sign + half - cl.exponents(r), modulus);
        }
    }
    RootArrayPair out{RootArray(modulus, std::move(s)), RootArray(modulus, std::move(t))};
    if (options.verify && !zcap_check(out.first, out.second, z1, z2).verified)
        throw VerificationError("theorem1_combine: output is not a ZCAP with zone (" + std::to_string(z1) + ", " +
                                std::to_string(z2) + ")");
    return out;
}

std::pair<Zq2DArray, Zq2DArray> corollary1_combine(const ZqVector& a, const ZqVector& b, const ZqVector& c,
                                                   const ZqVector& d, const CombineOptions& options)
{
    if (a.q != 2 || b.q != 2)
        throw std::invalid_argument("corollary1_combine: (a, b) must be binary");
    if (c.q != d.q)
        throw std::invalid_argument("corollary1_combine: (c, d) differ in q");
    require_even_modulus(c.q, "corollary1_combine");
    if (a.size() != b.size() || c.size() != d.size())
        throw std::invalid_argument("corollary1_combine: pair members differ in length");

    const RootVector la = lift(a), lb = lift(b), lc = lift(c), ld = lift(d);
    const int z1 = resolve_width(la, lb, options.z1, options.check_inputs, "corollary1_combine (a, b)");
    const int z2 = resolve_width(lc, ld, options.z2, options.check_inputs, "corollary1_combine (c, d)");

    const int q = c.q;
    const int half = q / 2;
    const Eigen::Index rows = a.size();
    const Eigen::Index cols = c.size();
    ExponentMatrix s(rows, cols);
    ExponentMatrix t(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const int flip = a.values(i) ^ b.values(i);
        for (Eigen::Index g = 0; g < cols; ++g) {
            const Eigen::Index r = cols - 1 - g;
            s(i, g) = mod(c.values(g) - (d.values(r) + c.values(g)) * flip + half * a.values(i), q);
            t(i, g) = mod(d.values(g) - (c.values(r) + d.values(g) + half) * flip + half * a.values(i), q);
        }
    }
    std::pair<Zq2DArray, Zq2DArray> out{Zq2DArray(q, std::move(s)), Zq2DArray(q, std::move(t))};
    if (options.verify && !zcap_check(lift(out.first), lift(out.second), z1, z2).verified)
        throw VerificationError("corollary1_combine: output is not a ZCAP with zone (" + std::to_string(z1) + ", " +
                                std::to_string(z2) + ")");
    return out;
}

namespace {

void validate(const Lemma5Params& p, bool need_pi1)
{
    require_even_modulus(p.q, "lemma5");
    if (p.n < 1)
        throw std::invalid_argument("lemma5: n must be at least 1");
    if (p.m < 2 || p.m > 30)
        throw std::invalid_argument("lemma5: m must be in [2, 30]");
    if (!(0 <= p.v_exp && p.v_exp < p.t_prime && p.t_prime < p.m))
        throw std::invalid_argument("lemma5: need 0 <= v < t' < m");
    if (need_pi1)
        require_permutation(p.pi1, p.m, "lemma5 pi1");
    require_permutation(p.pi2, p.n, "lemma5 pi2");
    for (int bit : or_zeros(p.p, p.m + 1, "lemma5 p"))
        if (bit != 0 && bit != 1)
            throw std::invalid_argument("lemma5: p_k must be 0 or 1");
    for (int bit : or_zeros(p.d, p.m - 1 - p.t_prime, "lemma5 d"))
        if (bit != 0 && bit != 1)
            throw std::invalid_argument("lemma5: d_alpha must be 0 or 1");
    or_zeros(p.v, p.n + 1, "lemma5 v");
}

} // namespace

std::int64_t lemma5_length(const Lemma5Params& params)
{
    const auto d = or_zeros(params.d, params.m - 1 - params.t_prime, "lemma5 d");
    std::int64_t length = (std::int64_t{1} << (params.m - 1)) + (std::int64_t{1} << params.v_exp);
    for (int alpha = params.t_prime + 1; alpha <= params.m - 1; ++alpha)
        length += d[alpha - params.t_prime - 1] * (std::int64_t{1} << (alpha - 1));
    return length;
}

int lemma5_width(const Lemma5Params& params)
{
    return (1 << (params.t_prime - 1)) + (1 << params.v_exp);
}

std::pair<ZqVector, ZqVector> lemma5_base_pair(const Lemma5Params& params)
{
    validate(params, true);
    const auto p = or_zeros(params.p, params.m + 1, "lemma5 p");
    Gbf a(2, params.m);
    for (int k = 0; k + 1 < params.t_prime; ++k)
        a.add_term(a.x(params.pi1[k]) | a.x(params.pi1[k + 1]), 1);
    for (int k = 1; k <= params.m; ++k)
        a.add_term(a.x(k), p[k]);
    a.add_constant(p[0]);
    Gbf b = a;
    b.add_term(b.x(params.pi1.front()), 1);
    const std::int64_t length = lemma5_length(params);
    return {gbf_to_sequence(a, length), gbf_to_sequence(b, length)};
}

std::optional<Permutation> lemma5_find_pi1(const Lemma5Params& params)
{
    if (params.m > 7)
        throw std::invalid_argument("lemma5_find_pi1: search limited to m <= 7; pass pi1 explicitly");
    Lemma5Params trial = params;
    trial.pi1 = identity_permutation(params.m);
    const int width = lemma5_width(params);
    do {
        const auto [a, b] = lemma5_base_pair(trial);
        if (max_zcz(lift(a), lift(b)).width >= width)
            return trial.pi1;
    } while (std::next_permutation(trial.pi1.begin(), trial.pi1.end()));
    return std::nullopt;
}

std::pair<Zq2DArray, Zq2DArray> lemma5_construct(const Lemma5Params& params)
{
    validate(params, true);
    const auto [a, b] = lemma5_base_pair(params);
    const int width = lemma5_width(params);
    if (params.verify && max_zcz(lift(a), lift(b)).width < width)
        throw VerificationError("lemma5_construct: base pair is not a (" + std::to_string(a.size()) + ", " +
                                std::to_string(width) + ")-ZCP for this pi1");

    const auto v = or_zeros(params.v, params.n + 1, "lemma5 v");
    const auto [c, d] = gdj_pair(params.q, params.n, params.pi2, v);

    CombineOptions options;
    options.z1 = width;
    options.z2 = static_cast<int>(c.size());
    options.check_inputs = false;
    options.verify = false;
    const auto [s, t] = corollary1_combine(a, b, c, d, options);

    std::pair<Zq2DArray, Zq2DArray> out{Zq2DArray(s.q, s.values.transpose()), Zq2DArray(t.q, t.values.transpose())};
    if (params.verify &&
        !zcap_check(lift(out.first), lift(out.second), static_cast<int>(c.size()), width).verified)
        throw VerificationError("lemma5_construct: output misses its claimed zone");
    return out;
}

std::pair<ZqVector, ZqVector> lemma6_base()
{
    static const Gbf a = parse_anf("x1 + x2 + x1*x2 + x1*x3 + x2*x4 + x1*x2*x4", 2, 4, 0);
    static const Gbf b =
        parse_anf("x2 + x4 + x1*x3 + x2*x3 + x3*x4 + x1*x4 + x1*x2*x3 + x1*x2*x4 + x1*x3*x4", 2, 4, 0);
    return {gbf_to_sequence(a, 14), gbf_to_sequence(b, 14)};
}

namespace {

void validate(const Theorem2Params& p)
{
    require_even_modulus(p.q, "theorem2");
    if (p.m < 1 || p.m > 20)
        throw std::invalid_argument("theorem2: m must be in [1, 20]");
    if (p.n < 0 || p.n > p.m)
        throw std::invalid_argument("theorem2: need 0 <= n <= m");
    require_permutation(p.pi, p.m, "theorem2 pi");
    or_zeros(p.v, p.m + 1, "theorem2 v");
}

} // namespace

Gbf theorem2_function(const Theorem2Params& params)
{
    validate(params);
    const int q = params.q;
    const int half = q / 2;
    const int m = params.m;
    const auto v = or_zeros(params.v, m + 1, "theorem2 v");

    Gbf f(q, 4, m);
    for (int l = 0; l + 1 < m; ++l)
        f.add_term(f.y(params.pi[l]) | f.y(params.pi[l + 1]), half);
    for (int l = 1; l <= m; ++l)
        f.add_term(f.y(l), v[l]);
    f.add_constant(v[0]);

    // (q/2)(x1 + x2 + x1x2 + x1x3 + x2x4 + x1x2x4); only its parity matters.
    const Gbf x_part = parse_anf("x1 + x2 + x1*x2 + x1*x3 + x2*x4 + x1*x2*x4", 2, 4, 0);
    for (const auto& [mono, c] : x_part.terms())
        f.add_term(mono, half * c);

    // The multiplier below is q-ary, so the selector is the 0/1 value of its
    // Boolean polynomial, re-expressed over Z_q.
    const Gbf parity =
        parse_anf("x1 + x4 + x1*x2 + x2*x3 + x2*x4 + x3*x4 + x1*x4 + x1*x2*x3 + x1*x3*x4", 2, 4, 0);
    std::vector<int> table(16);
    for (int i = 0; i < 16; ++i)
        table[i] = gbf_to_sequence(parity, 16).values(i);
    Gbf selector(q, 4, m);
    const Gbf lifted = Gbf::from_truth_table(q, 4, 0, table);
    for (const auto& [mono, c] : lifted.terms())
        selector.add_term(mono, c);

    // (q/2)m + (q/2)y_pi(m) - sum v_l - 2 v_0
    Gbf multiplier(q, 4, m);
    multiplier.add_constant(static_cast<long long>(half) * m - std::accumulate(v.begin() + 1, v.end(), 0LL) -
                            2LL * v[0]);
    multiplier.add_term(multiplier.y(params.pi.back()), half);

    f += multiplier * selector;
    return f;
}

std::pair<Zq2DArray, Zq2DArray> theorem2_direct(const Theorem2Params& params)
{
    const Gbf f = theorem2_function(params);
    Gbf g = f;
    g.add_term(g.y(params.pi.front()), params.q / 2);

    const int m = params.m;
    const Eigen::Index rows = 14 * (Eigen::Index{1} << params.n);
    const Eigen::Index cols = Eigen::Index{1} << (m - params.n);
    // Variables run x1..x4, y1..ym, so row-major reshaping puts the x-block and
    // y1..yn on rows and y_{n+1}..y_m on columns.
    auto as_array = [&](const Gbf& h) {
        const ZqVector seq = gbf_to_sequence(h, 14 * (std::int64_t{1} << m));
        return Zq2DArray(params.q, Eigen::Map<const ExponentMatrix>(seq.values.data(), rows, cols));
    };
    std::pair<Zq2DArray, Zq2DArray> out{as_array(f), as_array(g)};

    const int z1 = 12 * (1 << params.n);
    if (params.verify &&
        !zcap_check(lift(out.first), lift(out.second), z1, static_cast<int>(cols)).verified)
        throw VerificationError("theorem2_direct: output is not a ZCAP with zone (" + std::to_string(z1) + ", " +
                                std::to_string(cols) + ")");
    return out;
}

} // namespace zcap
