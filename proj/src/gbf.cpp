#include "zcap/gbf.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace zcap {

namespace {

void require_entries(int q, const int* data, Eigen::Index count, const char* what)
{
    if (q < 1)
        throw std::invalid_argument(std::string(what) + ": modulus must be positive");
    for (Eigen::Index k = 0; k < count; ++k)
        if (data[k] < 0 || data[k] >= q)
            throw std::invalid_argument(std::string(what) + ": entry " + std::to_string(data[k]) + " outside [0, " +
                                        std::to_string(q) + ")");
}

// Assignment mask (monomial bit layout) for index i over `count` variables,
// variable 0 being the most significant bit of i.
std::uint64_t index_to_point(std::uint64_t i, int count)
{
    std::uint64_t point = 0;
    for (int k = 0; k < count; ++k)
        if ((i >> (count - 1 - k)) & 1u)
            point |= std::uint64_t{1} << k;
    return point;
}

} // namespace

ZqVector::ZqVector(int q, ExponentVector v) : q(q), values(std::move(v))
{
    require_entries(q, values.data(), values.size(), "ZqVector");
    if (values.size() < 1)
        throw std::invalid_argument("ZqVector: length must be at least 1");
}

ZqVector::ZqVector(int q, std::initializer_list<int> v) :
    ZqVector(q, ExponentVector(Eigen::Map<const ExponentVector>(v.begin(), static_cast<Eigen::Index>(v.size()))))
{
}

Zq2DArray::Zq2DArray(int q, ExponentMatrix v) : q(q), values(std::move(v))
{
    require_entries(q, values.data(), values.size(), "Zq2DArray");
    if (values.rows() < 1 || values.cols() < 1)
        throw std::invalid_argument("Zq2DArray: dimensions must be at least 1x1");
}

Gbf::Gbf(int q, int n, int m) : q_(q), n_(n), m_(m)
{
    require_even_modulus(q, "Gbf");
    if (n < 0 || m < 0 || n + m > kMaxVariables)
        throw std::invalid_argument("Gbf: variable counts out of range");
}

Gbf Gbf::from_truth_table(int q, int n, int m, std::span<const int> values)
{
    Gbf f(q, n, m);
    const int count = n + m;
    if (count > 24)
        throw std::invalid_argument("Gbf::from_truth_table: too many variables");
    const std::size_t size = std::size_t{1} << count;
    if (values.size() != size)
        throw std::invalid_argument("Gbf::from_truth_table: expected 2^(n+m) values");

    // Moebius transform over Z_q on point-indexed values.
    std::vector<int> a(size);
    for (std::size_t i = 0; i < size; ++i)
        a[index_to_point(i, count)] = mod(values[i], q);
    for (int k = 0; k < count; ++k) {
        const std::size_t bit = std::size_t{1} << k;
        for (std::size_t s = 0; s < size; ++s)
            if (s & bit)
                a[s] = mod(a[s] - a[s ^ bit], q);
    }
    for (std::size_t s = 0; s < size; ++s)
        if (a[s] != 0)
            f.terms_.emplace(s, a[s]);
    return f;
}

Gbf::Monomial Gbf::x(int s) const
{
    if (s < 1 || s > n_)
        throw std::out_of_range("Gbf::x: variable index out of range");
    return Monomial{1} << (s - 1);
}

Gbf::Monomial Gbf::y(int l) const
{
    if (l < 1 || l > m_)
        throw std::out_of_range("Gbf::y: variable index out of range");
    return Monomial{1} << (n_ + l - 1);
}

Gbf& Gbf::add_term(Monomial monomial, long long coeff)
{
    if (variable_count() < 64 && (monomial >> variable_count()) != 0)
        throw std::out_of_range("Gbf::add_term: monomial uses unknown variables");
    const int c = mod(coeff, q_);
    if (c == 0)
        return *this;
    auto [it, inserted] = terms_.emplace(monomial, c);
    if (!inserted) {
        it->second = mod(it->second + c, q_);
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

void Gbf::require_compatible(const Gbf& other) const
{
    if (other.q_ != q_ || other.n_ != n_ || other.m_ != m_)
        throw std::invalid_argument("Gbf: operands differ in modulus or variables");
}

Gbf& Gbf::operator+=(const Gbf& other)
{
    require_compatible(other);
    for (const auto& [mono, c] : other.terms_)
        add_term(mono, c);
    return *this;
}

Gbf& Gbf::operator*=(long long scalar)
{
    std::map<Monomial, int> scaled;
    for (const auto& [mono, c] : terms_)
        if (const int v = mod(static_cast<long long>(c) * mod(scalar, q_), q_); v != 0)
            scaled.emplace(mono, v);
    terms_ = std::move(scaled);
    return *this;
}

Gbf operator*(const Gbf& a, const Gbf& b)
{
    a.require_compatible(b);
    Gbf out(a.q_, a.n_, a.m_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma | mb, static_cast<long long>(ca) * cb);
    return out;
}

int Gbf::evaluate_bits(std::uint64_t point) const noexcept
{
    long long acc = 0;
    for (const auto& [mono, c] : terms_)
        if ((mono & point) == mono)
            acc += c;
    return mod(acc, q_);
}

Gbf parse_anf(std::string_view text, int q, int n, int m)
{
    if (q < 2 || q % 2 != 0)
        throw ParseError("parse_anf: q must be even and >= 2, got " + std::to_string(q));
    Gbf f(q, n, m);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto bad = [&](std::size_t at) -> ParseError {
        std::size_t end = at;
        while (end < text.size() && std::isalnum(static_cast<unsigned char>(text[end])))
            ++end;
        if (end == at)
            end = std::min(at + 1, text.size());
        const std::string token = at < text.size() ? std::string(text.substr(at, end - at)) : "<end of input>";
        return ParseError("parse_anf: unexpected token '" + token + "' at offset " + std::to_string(at));
    };

    // factor := integer | ('x'|'y') digits
    auto parse_factor = [&](long long& coeff, Gbf::Monomial& mono) {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= text.size())
            throw bad(start);
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = (value * 10 + (text[pos] - '0')) % q;
                ++pos;
            }
            coeff = (coeff * value) % q;
            return;
        }
        if (c == 'x' || c == 'y') {
            ++pos;
            const std::size_t digits = pos;
            long long index = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                index = index * 10 + (text[pos] - '0');
                if (index > Gbf::kMaxVariables)
                    throw bad(start);
                ++pos;
            }
            if (pos == digits || (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))))
                throw bad(start);
            const int limit = c == 'x' ? n : m;
            if (index < 1 || index > limit)
                throw ParseError("parse_anf: unknown variable '" + std::string(text.substr(start, pos - start)) + "'");
            mono |= c == 'x' ? f.x(static_cast<int>(index)) : f.y(static_cast<int>(index));
            return;
        }
        throw bad(start);
    };

    int sign = 1;
    skip_ws();
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    while (true) {
        long long coeff = 1;
        Gbf::Monomial mono = 0;
        parse_factor(coeff, mono);
        skip_ws();
        while (pos < text.size() && text[pos] == '*') {
            ++pos;
            parse_factor(coeff, mono);
            skip_ws();
        }
        f.add_term(mono, sign * coeff);
        if (pos >= text.size())
            break;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            continue;
        }
        throw bad(pos);
    }
    return f;
}

std::string to_anf(const Gbf& f)
{
    std::vector<std::pair<Gbf::Monomial, int>> terms(f.terms().begin(), f.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int da = std::popcount(a.first);
        const int db = std::popcount(b.first);
        return da != db ? da > db : a.first < b.first;
    });
    if (terms.empty())
        return "0";

    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        if (!first)
            out << " + ";
        first = false;
        std::vector<std::string> factors;
        if (c != 1 || mono == 0)
            factors.push_back(std::to_string(c));
        for (int k = 0; k < f.variable_count(); ++k)
            if ((mono >> k) & 1u)
                factors.push_back(k < f.x_count() ? "x" + std::to_string(k + 1)
                                                  : "y" + std::to_string(k - f.x_count() + 1));
        for (std::size_t j = 0; j < factors.size(); ++j)
            out << (j ? "*" : "") << factors[j];
    }
    return out.str();
}

int evaluate(const Gbf& f, const std::map<std::string, int>& point)
{
    std::uint64_t bits = 0;
    auto lookup = [&](const std::string& name, int k) {
        const auto it = point.find(name);
        if (it == point.end())
            throw std::invalid_argument("evaluate: missing assignment for " + name);
        if (it->second != 0 && it->second != 1)
            throw std::invalid_argument("evaluate: " + name + " must be 0 or 1");
        if (it->second)
            bits |= std::uint64_t{1} << k;
    };
    for (int s = 1; s <= f.x_count(); ++s)
        lookup("x" + std::to_string(s), s - 1);
    for (int l = 1; l <= f.y_count(); ++l)
        lookup("y" + std::to_string(l), f.x_count() + l - 1);
    return f.evaluate_bits(bits);
}

ZqVector gbf_to_sequence(const Gbf& f, std::int64_t length)
{
    const int count = f.variable_count();
    if (count > 30)
        throw std::invalid_argument("gbf_to_sequence: too many variables for a materialized sequence");
    const std::int64_t full = std::int64_t{1} << count;
    if (length < 1 || length > full)
        throw std::invalid_argument("gbf_to_sequence: length " + std::to_string(length) + " outside [1, " +
                                    std::to_string(full) + "]");
    ExponentVector values(length);
    for (std::int64_t i = 0; i < length; ++i)
        values(i) = f.evaluate_bits(index_to_point(static_cast<std::uint64_t>(i), count));
    return ZqVector(f.q(), std::move(values));
}

Zq2DArray gbf2d_to_array(const Gbf& f, std::int64_t rows, std::int64_t cols)
{
    const int n = f.x_count();
    const int m = f.y_count();
    if (n > 30 || m > 30)
        throw std::invalid_argument("gbf2d_to_array: too many variables for a materialized array");
    if (rows < 1 || rows > (std::int64_t{1} << n))
        throw std::invalid_argument("gbf2d_to_array: row count " + std::to_string(rows) + " outside [1, 2^n]");
    if (cols < 1 || cols > (std::int64_t{1} << m))
        throw std::invalid_argument("gbf2d_to_array: column count " + std::to_string(cols) + " outside [1, 2^m]");

    ExponentMatrix values(rows, cols);
    for (std::int64_t i = 0; i < rows; ++i) {
        const std::uint64_t xbits = index_to_point(static_cast<std::uint64_t>(i), n);
        for (std::int64_t g = 0; g < cols; ++g)
            values(i, g) = f.evaluate_bits(xbits | (index_to_point(static_cast<std::uint64_t>(g), m) << n));
    }
    return Zq2DArray(f.q(), std::move(values));
}

Gbf gdj_function(int q, int m, std::span<const int> pi, std::span<const int> v)
{
    require_even_modulus(q, "gdj_function");
    if (m < 1)
        throw std::invalid_argument("gdj_function: m must be at least 1");
    require_permutation(pi, m, "gdj_function");
    if (static_cast<int>(v.size()) != m + 1)
        throw std::invalid_argument("gdj_function: expected v_0..v_m (" + std::to_string(m + 1) + " values)");

    Gbf f(q, m, 0);
    for (int l = 0; l + 1 < m; ++l)
        f.add_term(f.x(pi[l]) | f.x(pi[l + 1]), q / 2);
    for (int l = 1; l <= m; ++l)
        f.add_term(f.x(l), v[l]);
    f.add_constant(v[0]);
    return f;
}

std::pair<ZqVector, ZqVector> gdj_pair(int q, int m, std::span<const int> pi, std::span<const int> v,
                                       GdjCompanion companion)
{
    const Gbf f = gdj_function(q, m, pi, v);
    Gbf g = f;
    g.add_term(g.x(companion == GdjCompanion::first ? pi.front() : pi.back()), q / 2);
    const std::int64_t length = std::int64_t{1} << m;
    return {gbf_to_sequence(f, length), gbf_to_sequence(g, length)};
}

} // namespace zcap
