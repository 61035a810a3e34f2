#include "zcap/cli.hpp"
#include "zcap/sequence_file.hpp"

#include "doctest.h"
#include "fixtures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace zcap;
namespace fs = std::filesystem;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<SequenceFile> documents(const std::string& text)
{
    std::istringstream in(text);
    return read_sequence_stream(in);
}

nlohmann::json report(const Run& r) { return nlohmann::json::parse(r.out); }

struct TempDir
{
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("zcap-cli-" + std::to_string(::getpid())))
    {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const
    {
        const fs::path p = path / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

} // namespace

TEST_CASE("gen gdj")
{
    const Run r = run({"gen", "gdj", "--q", "4", "--m", "2", "--pi", "1,2", "--v", "0,1,0"});
    REQUIRE(r.code == kExitOk);
    const auto docs = documents(r.out);
    REQUIRE(docs.size() == 2);
    CHECK(std::get<ZqVector>(docs[0].data) == ZqVector(4, {0, 0, 1, 3}));
    CHECK(std::get<ZqVector>(docs[1].data) == ZqVector(4, {0, 0, 3, 1}));

    const auto defaults = documents(run({"gen", "gdj", "--q", "2", "--m", "1"}).out);
    CHECK(std::get<ZqVector>(defaults[0].data) == ZqVector(2, {0, 0}));
    CHECK(std::get<ZqVector>(defaults[1].data) == ZqVector(2, {0, 1}));

    const auto last = documents(run({"gen", "gdj", "--q", "2", "--m", "2", "--companion", "last"}).out);
    CHECK(std::get<ZqVector>(last[1].data) == ZqVector(2, {0, 1, 0, 0}));
}

TEST_CASE("gen output is byte-stable")
{
    const std::vector<std::string> args{"gen", "theorem2", "--q", "4", "--m", "3", "--n", "1", "--pi", "3,1,2",
                                        "--v", "1,2,3,0"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("gen theorem2 reproduces the 14 x 4 pair")
{
    const Run r = run({"gen", "theorem2", "--q", "2", "--m", "2", "--n", "0", "--pi", "1,2", "--v", "0,0,0"});
    REQUIRE(r.code == kExitOk);
    const auto docs = documents(r.out);
    CHECK(std::get<Zq2DArray>(docs[0].data).values.transpose() == fixtures::example4_f_transposed());
    CHECK(std::get<Zq2DArray>(docs[1].data).values.transpose() == fixtures::example4_t_transposed());
}

TEST_CASE("gen anf")
{
    const Run r = run({"gen", "anf", "--anf", "x1*x2 + x1*y1 + y3", "--q", "2", "--n", "2", "--m", "3", "--companion",
                       "y1"});
    REQUIRE(r.code == kExitOk);
    CHECK(std::get<Zq2DArray>(documents(r.out)[0].data).values == fixtures::example1());

    const Run seq = run({"gen", "anf", "--anf", "2*x1*x2 + x1", "--q", "4", "--n", "2", "--m", "0", "--companion",
                         "x1"});
    REQUIRE(seq.code == kExitOk);
    CHECK(std::get<ZqVector>(documents(seq.out)[0].data) == ZqVector(4, {0, 0, 1, 3}));

    CHECK(run({"gen", "anf", "--anf", "x1 + z", "--q", "2", "--n", "1", "--m", "0", "--companion", "x1"}).code ==
          kExitUsage);
    CHECK(run({"gen", "anf", "--anf", "x1", "--q", "2", "--n", "1", "--m", "0", "--companion", "x1*x1 + 1"}).code ==
          kExitUsage);
}

TEST_CASE("generated pairs verify at their claimed parameters")
{
    struct Case
    {
        std::vector<std::string> gen;
        std::vector<std::string> claim;
    };
    const std::vector<Case> cases{
        {{"gen", "gdj", "--q", "8", "--m", "3", "--pi", "2,3,1", "--v", "1,2,3,4"}, {"--z", "8"}},
        {{"gen", "lemma6"}, {"--z", "12"}},
        {{"gen", "theorem2", "--q", "2", "--m", "2", "--n", "1"}, {"--z1", "24", "--z2", "2"}},
        {{"gen", "theorem2", "--q", "4", "--m", "3", "--n", "3"}, {"--z1", "96", "--z2", "1"}},
        {{"gen", "lemma5", "--q", "2", "--n", "1", "--m", "3", "--tprime", "2", "--pi1", "2,3,1"},
         {"--z1", "2", "--z2", "3"}},
        {{"gen", "lemma5", "--q", "4", "--n", "2", "--m", "4", "--tprime", "2", "--d", "1"}, {"--z1", "4", "--z2", "3"}},
    };
    for (const auto& c : cases) {
        INFO(c.gen[1]);
        const Run g = run(c.gen);
        REQUIRE(g.code == kExitOk);
        std::vector<std::string> verify{"verify"};
        verify.insert(verify.end(), c.claim.begin(), c.claim.end());
        const Run v = run(verify, g.out);
        CHECK(v.code == kExitOk);
        CHECK(report(v)["verified"] == true);
    }
}

TEST_CASE("lemma4 reads a GCP on stdin")
{
    const Run gcp = run({"gen", "gdj", "--q", "4", "--m", "2", "--v", "0,1,0"});
    const Run ext = run({"gen", "lemma4"}, gcp.out);
    REQUIRE(ext.code == kExitOk);
    const auto docs = documents(ext.out);
    CHECK(std::get<ZqVector>(docs[0].data).size() == 56);
    CHECK(run({"verify", "--z", "48"}, ext.out).code == kExitOk);
    CHECK(run({"gen", "lemma4"}, run({"gen", "lemma6"}).out).code == kExitUsage);
}

TEST_CASE("combiners read files")
{
    TempDir dir;
    const std::string a = dir.write("a.json", R"({"q":2,"values":[1,0,1,1,0,1,0,0,0,1,0,0]})");
    const std::string b = dir.write("b.json", R"({"q":2,"values":[1,0,0,0,0,1,1,1,0,1,1,1]})");
    const std::string c = dir.write("c.json", R"({"q":4,"values":[0,0,1,3]})");
    const std::string d = dir.write("d.json", R"({"q":4,"values":[0,0,3,1]})");

    const Run cor = run({"gen", "corollary1", a, b, c, d, "--z1", "8", "--z2", "4"});
    REQUIRE(cor.code == kExitOk);
    CHECK(std::get<Zq2DArray>(documents(cor.out)[0].data).values.transpose() == fixtures::example3_s_transposed());

    const Run th1 = run({"gen", "theorem1", a, b, c, d});
    REQUIRE(th1.code == kExitOk);
    const auto docs = documents(th1.out);
    CHECK(std::get<RootArray>(docs[0].data).exponents.transpose() == fixtures::example2_s_transposed());

    // A false width claim is rejected up front, or surfaces as a failed self-check under --force.
    CHECK(run({"gen", "theorem1", a, b, c, d, "--z1", "12"}).code == kExitUsage);
    CHECK(run({"gen", "theorem1", a, b, c, d, "--z1", "12", "--force"}).code == kExitFalsified);
    CHECK(run({"gen", "theorem1", a, b, c, d, "--z1", "12", "--force", "--no-verify"}).code == kExitOk);

    const std::string first = (dir.path / "s.json").string();
    const std::string second = (dir.path / "t.json").string();
    REQUIRE(run({"gen", "--out", first, second, "corollary1", a, b, c, d}).code == kExitOk);
    const Run ok = run({"verify", first, second, "--z1", "8", "--z2", "4"});
    CHECK(ok.code == kExitOk);
    const nlohmann::json rep = report(ok);
    CHECK(rep["peak"] == 96);
    CHECK(rep["claimed"]["z1"] == 8);
    bool inside = false;
    for (const auto& rect : rep["frontier"])
        inside = inside || (rect[0].get<int>() >= 8 && rect[1].get<int>() >= 4);
    CHECK(inside);

    const Run full = run({"verify", first, second, "--z1", "12", "--z2", "4"});
    CHECK(full.code == (report(full)["verified"] == true ? kExitOk : kExitFalsified));
    CHECK(full.code == kExitFalsified);

    CHECK(run({"gen", "corollary1", a, b, c}).code == kExitUsage);
    CHECK(run({"gen", "corollary1", a, b, c, (dir.path / "missing.json").string()}).code == kExitUsage);
}

TEST_CASE("verify report and exit codes")
{
    const std::string pair = run({"gen", "lemma6"}).out;
    const Run good = run({"verify", "--z", "12"}, pair);
    CHECK(good.code == kExitOk);
    const nlohmann::json rep = report(good);
    CHECK(rep["max_z"] == 12);
    CHECK(rep["zcz_ratio"] == "6/7");
    CHECK(rep["peak"] == 28);
    CHECK(run({"verify", "--z", "13"}, pair).code == kExitFalsified);
    CHECK(run({"verify", "--max"}, pair).code == kExitOk);
    CHECK(run({"verify"}, pair).code == kExitUsage);
    CHECK(run({"verify", "--z1", "1", "--z2", "1"}, pair).code == kExitUsage);
    CHECK(run({"verify", "--z", "15"}, pair).code == kExitUsage);
    CHECK(run({"verify", "--z", "2"}, "{\"q\":2,\"values\":[0,1]}\n").code == kExitUsage);
    CHECK(run({"verify", "--z", "2"}, "{\"q\":2,\"values\":[0,1]}\n{\"q\":4,\"values\":[0,1]}\n").code == kExitUsage);
    CHECK(run({"verify", "--z", "1"}, "garbage\n{\"q\":2,\"values\":[0,1]}\n").code == kExitUsage);

    const std::string unit = "{\"q\":2,\"rows\":1,\"cols\":1,\"values\":[[0]]}\n"
                             "{\"q\":2,\"rows\":1,\"cols\":1,\"values\":[[1]]}\n";
    CHECK(run({"verify", "--z1", "1", "--z2", "1"}, unit).code == kExitOk);
}

TEST_CASE("surface export")
{
    const std::string unit = "{\"q\":2,\"rows\":1,\"cols\":1,\"values\":[[0]]}\n"
                             "{\"q\":2,\"rows\":1,\"cols\":1,\"values\":[[1]]}\n";
    const Run r = run({"surface"}, unit);
    CHECK(r.code == kExitOk);
    CHECK(r.out == "u1,u2,magnitude\n0,0,2\n");

    TempDir dir;
    const std::string s = dir.write("s.json", dump(SequenceFile{RootArray(4, fixtures::example2_s_transposed().transpose()), std::nullopt}));
    const std::string t = dir.write("t.json", dump(SequenceFile{RootArray(4, fixtures::example2_t_transposed().transpose()), std::nullopt}));
    const std::string csv = (dir.path / "surface.csv").string();
    REQUIRE(run({"surface", s, t, "--out", csv}).code == kExitOk);
    std::ifstream in(csv);
    std::string line;
    bool centre = false;
    while (std::getline(in, line))
        centre = centre || line == "0,0,96";
    CHECK(centre);
    CHECK(run({"surface", s, (dir.path / "nope.json").string()}).code == kExitUsage);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"gen", "gdj", "--q", "4"}).code == kExitUsage);
    CHECK(run({"gen", "gdj", "--q", "3", "--m", "2"}).code == kExitUsage);
    CHECK(run({"gen", "gdj", "--q", "2", "--m", "2", "--pi", "1,1"}).code == kExitUsage);
    CHECK(run({"gen", "gdj", "--q", "2", "--m", "2", "--pi", "a,b"}).code == kExitUsage);
    CHECK(run({"gen", "theorem2", "--q", "2", "--m", "2", "--n", "3"}).code == kExitUsage);
    CHECK(run({"gen", "lemma5", "--q", "2", "--n", "1", "--m", "3", "--tprime", "3"}).code == kExitUsage);
    const Run help = run({"--help"});
    CHECK(help.code == kExitOk);
    CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("lemma5 with a permutation that misses the zone fails self-verification")
{
    CHECK(run({"gen", "lemma5", "--q", "2", "--n", "1", "--m", "3", "--tprime", "2", "--pi1", "1,2,3"}).code ==
          kExitFalsified);
}
