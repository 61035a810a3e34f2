#include "zcap/gbf.hpp"
#include "zcap/sequences.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace zcap;

namespace {

ExponentVector vec(std::initializer_list<int> v)
{
    return Eigen::Map<const ExponentVector>(v.begin(), static_cast<Eigen::Index>(v.size()));
}

} // namespace

TEST_CASE("parse_anf: two-dimensional function")
{
    const Gbf f = parse_anf("x1*x2 + x1*y1 + y3", 2, 2, 3);
    REQUIRE(f.terms().size() == 3);
    CHECK(f.terms().at(f.x(1) | f.x(2)) == 1);
    CHECK(f.terms().at(f.x(1) | f.y(1)) == 1);
    CHECK(f.terms().at(f.y(3)) == 1);
}

TEST_CASE("parse_anf: zero and coefficient reduction")
{
    CHECK(parse_anf("0", 4, 0, 2).terms().empty());
    const Gbf f = parse_anf("2*x1*x2 + x1 + 3 + 1", 4, 2, 0);
    CHECK(f.terms().size() == 2);
    CHECK(f.terms().at(f.x(1) | f.x(2)) == 2);
    CHECK(f.terms().at(f.x(1)) == 1);
    CHECK_FALSE(f.terms().contains(0));
}

TEST_CASE("parse_anf: subtraction, whitespace, idempotent variables, repeated terms")
{
    const Gbf f = parse_anf("  - x1 +x2*x2*3 - 1 + x2 ", 8, 2, 0);
    CHECK(f.terms().at(f.x(1)) == 7);
    CHECK(f.terms().at(f.x(2)) == 4);
    CHECK(f.terms().at(0) == 7);
}

TEST_CASE("parse_anf: errors name the offending token")
{
    auto message = [](auto&& fn) {
        try {
            fn();
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("<no error>");
    };
    CHECK(message([] { parse_anf("x1 + z2", 2, 2, 0); }).find("z2") != std::string::npos);
    CHECK(message([] { parse_anf("x3", 2, 2, 0); }).find("x3") != std::string::npos);
    CHECK(message([] { parse_anf("y1", 2, 2, 0); }).find("y1") != std::string::npos);
    CHECK(message([] { parse_anf("x1 +", 2, 2, 0); }).find("end of input") != std::string::npos);
    CHECK(message([] { parse_anf("x1 x2", 2, 2, 0); }).find("x2") != std::string::npos);
    CHECK(message([] { parse_anf("x1", 3, 2, 0); }).find("3") != std::string::npos);
    CHECK_THROWS_AS(parse_anf("x", 2, 2, 0), ParseError);
    CHECK_THROWS_AS(parse_anf("", 2, 2, 0), ParseError);
    CHECK_THROWS_AS(parse_anf("x1x2", 2, 2, 0), ParseError);
}

TEST_CASE("to_anf round-trips through parse_anf")
{
    for (const char* text : {"x1*x2 + x1*y1 + y3", "0", "3*x1*x2*y2 + 2*y1 + 1"}) {
        const Gbf f = parse_anf(text, 4, 2, 3);
        CHECK(parse_anf(to_anf(f), 4, 2, 3) == f);
    }
}

TEST_CASE("evaluate at named points")
{
    const Gbf f = parse_anf("x1*x2 + x1*y1 + y3", 2, 2, 3);
    CHECK(evaluate(f, {{"x1", 1}, {"x2", 1}, {"y1", 0}, {"y2", 0}, {"y3", 1}}) == 0);
    const Gbf g = parse_anf("2*x1*x2 + x1", 4, 2, 0);
    CHECK(evaluate(g, {{"x1", 1}, {"x2", 1}}) == 3);
    CHECK(evaluate(Gbf(4, 2, 0), {{"x1", 1}, {"x2", 0}}) == 0);
    CHECK_THROWS_AS(evaluate(g, {{"x1", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(g, {{"x1", 1}, {"x2", 2}}), std::invalid_argument);
}

TEST_CASE("associated sequences")
{
    CHECK(gbf_to_sequence(parse_anf("2*x1*x2 + x1", 4, 2, 0), 4).values == vec({0, 0, 1, 3}));
    CHECK(gbf_to_sequence(Gbf(4, 2, 0), 4).values == vec({0, 0, 0, 0}));
    CHECK(gbf_to_sequence(parse_anf("x1", 2, 2, 0), 3).values == vec({0, 0, 1}));
    CHECK_THROWS_AS(gbf_to_sequence(Gbf(2, 2, 0), 0), std::invalid_argument);
    CHECK_THROWS_AS(gbf_to_sequence(Gbf(2, 2, 0), 5), std::invalid_argument);
}

TEST_CASE("associated arrays")
{
    const Gbf f = parse_anf("x1*x2 + x1*y1 + y3", 2, 2, 3);
    ExponentMatrix expected(4, 8);
    expected << 0, 1, 0, 1, 0, 1, 0, 1, //
        0, 1, 0, 1, 0, 1, 0, 1,         //
        0, 1, 0, 1, 1, 0, 1, 0,         //
        1, 0, 1, 0, 0, 1, 0, 1;
    CHECK(gbf2d_to_array(f, 4, 8).values == expected);
    CHECK(gbf2d_to_array(f, 3, 5).values == expected.topLeftCorner(3, 5));
    CHECK(gbf2d_to_array(Gbf(2, 2, 3), 4, 8).values.isZero());

    const Zq2DArray y3 = gbf2d_to_array(parse_anf("y3", 2, 2, 3), 4, 8);
    for (Eigen::Index i = 0; i < 4; ++i)
        CHECK(y3.values.row(i) == vec({0, 1, 0, 1, 0, 1, 0, 1}).transpose());
    CHECK_THROWS_AS(gbf2d_to_array(f, 5, 8), std::invalid_argument);
    CHECK_THROWS_AS(gbf2d_to_array(f, 4, 0), std::invalid_argument);
}

TEST_CASE("flattening the full array gives the sequence over x then y")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 3);
        Gbf f(8, n, m);
        for (int t = 0; t < 6; ++t)
            f.add_term(rng() % (1u << (n + m)), rng() % 8);
        const Zq2DArray a = gbf2d_to_array(f, 1 << n, 1 << m);
        const ZqVector s = gbf_to_sequence(f, std::int64_t{1} << (n + m));
        CHECK(Eigen::Map<const ExponentVector>(a.values.data(), a.values.size()) == s.values);
    }
}

TEST_CASE("adding (q/2) x_k adds (q/2) times bit k of the index")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int q = 2 << (trial % 3);
        const int m = 2 + static_cast<int>(rng() % 4);
        Gbf f(q, m, 0);
        for (int t = 0; t < 5; ++t)
            f.add_term(rng() % (1u << m), rng() % q);
        const int k = 1 + static_cast<int>(rng() % m);
        const std::int64_t length = 1 + static_cast<std::int64_t>(rng() % (1u << m));
        Gbf g = f;
        g.add_term(g.x(k), q / 2);
        const ZqVector a = gbf_to_sequence(f, length);
        const ZqVector b = gbf_to_sequence(g, length);
        for (Eigen::Index i = 0; i < length; ++i)
            CHECK(b.values(i) == (a.values(i) + (q / 2) * ((i >> (m - k)) & 1)) % q);
    }
}

TEST_CASE("truth tables invert evaluation")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> table(32);
        for (auto& x : table)
            x = static_cast<int>(rng() % 4);
        const Gbf f = Gbf::from_truth_table(4, 2, 3, table);
        const ZqVector s = gbf_to_sequence(f, 32);
        CHECK(std::equal(table.begin(), table.end(), s.values.data()));
    }
}

TEST_CASE("Boolean ring product")
{
    const Gbf a = parse_anf("x1 + 1", 4, 2, 0);
    const Gbf b = parse_anf("x1 + x2", 4, 2, 0);
    // (x1 + 1)(x1 + x2) = x1 + x1x2 + x1 + x2 = 2x1 + x1x2 + x2
    CHECK(a * b == parse_anf("2*x1 + x1*x2 + x2", 4, 2, 0));
    CHECK_THROWS_AS(a * parse_anf("x1", 2, 2, 0), std::invalid_argument);
}

TEST_CASE("value types reject out-of-range entries")
{
    CHECK_THROWS_AS(ZqVector(4, {0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(ZqVector(4, {-1}), std::invalid_argument);
    CHECK_THROWS_AS(ZqVector(4, ExponentVector()), std::invalid_argument);
    CHECK_THROWS_AS(Gbf(3, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Gbf(2, 40, 30), std::invalid_argument);
    CHECK_THROWS_AS(Gbf(2, 2, 0).x(3), std::out_of_range);
}

TEST_CASE("GDJ pairs: fixed instances")
{
    const Permutation id2{1, 2};
    const std::vector<int> v{0, 1, 0};
    const auto [a, b] = gdj_pair(4, 2, id2, v);
    CHECK(a.values == vec({0, 0, 1, 3}));
    CHECK(b.values == vec({0, 0, 3, 1}));

    const auto [c, d] = gdj_pair(2, 1, Permutation{1}, std::vector<int>{0, 0});
    CHECK(c.values == vec({0, 0}));
    CHECK(d.values == vec({0, 1}));

    const auto [e, f] = gdj_pair(2, 3, Permutation{1, 2, 3}, std::vector<int>{0, 0, 0, 0});
    CHECK(e.values == vec({0, 0, 0, 1, 0, 0, 1, 0}));
    const auto E = oracle::unimodular(e.values.transpose(), 2);
    const auto F = oracle::unimodular(f.values.transpose(), 2);
    CHECK(oracle::zcz_width(E, F) == 8);
}

TEST_CASE("GDJ pairs: errors")
{
    CHECK_THROWS_AS(gdj_pair(3, 2, Permutation{1, 2}, std::vector<int>{0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(gdj_pair(2, 2, Permutation{1, 1}, std::vector<int>{0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(gdj_pair(2, 2, Permutation{1, 2}, std::vector<int>{0, 0}), std::invalid_argument);
}

TEST_CASE("GDJ pairs are Golay complementary for every permutation")
{
    std::mt19937 rng(2024);
    for (int q : {2, 4, 8})
        for (int m = 1; m <= 6; ++m) {
            Permutation pi = identity_permutation(m);
            do {
                for (int trial = 0; trial < 50; ++trial) {
                    std::vector<int> v(m + 1);
                    for (auto& x : v)
                        x = static_cast<int>(rng() % q);
                    const auto companion = trial % 2 ? GdjCompanion::last : GdjCompanion::first;
                    const auto [a, b] = gdj_pair(q, m, pi, v, companion);
                    const ZcpCertificate cert = max_zcz(lift(a), lift(b));
                    if (!cert.is_gcp()) {
                        FAIL("not a GCP: q=" << q << " m=" << m);
                    }
                }
            } while (std::next_permutation(pi.begin(), pi.end()));
        }
}
