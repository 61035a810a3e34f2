#include "zcap/cli.hpp"

#include "zcap/constructions.hpp"
#include "zcap/sequence_file.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace zcap {

using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

SequenceFile read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_sequence_file(buffer.str());
}

// Two documents either from two paths or, when none are given, from the
// newline-delimited stream on stdin.
std::vector<SequenceFile> read_inputs(const std::vector<std::string>& paths, std::size_t expected, std::istream& in)
{
    std::vector<SequenceFile> files;
    if (paths.empty()) {
        files = read_sequence_stream(in);
    } else {
        for (const auto& path : paths)
            files.push_back(path == "-" ? read_sequence_stream(in).at(0) : read_file(path));
    }
    if (files.size() != expected)
        throw UsageError("expected " + std::to_string(expected) + " input documents, got " +
                         std::to_string(files.size()));
    return files;
}

struct Emitter
{
    std::vector<std::string> out_paths;
    std::ostream& out;

    void emit(const SequenceFile& first, const SequenceFile& second) const
    {
        if (out_paths.empty()) {
            out << dump(first) << '\n' << dump(second) << '\n';
            return;
        }
        const SequenceFile* docs[] = {&first, &second};
        for (std::size_t k = 0; k < 2; ++k) {
            std::ofstream file(out_paths[k]);
            if (!file)
                throw UsageError("cannot write " + out_paths[k]);
            file << dump(*docs[k]) << '\n';
        }
    }
};

SequenceFile labelled(auto data, std::string label)
{
    return SequenceFile{std::move(data), std::move(label)};
}

void require_same_modulus(const RootVector& a, const RootVector& b)
{
    if (a.modulus != b.modulus || a.size() != b.size())
        throw UsageError("inputs differ in modulus or length");
}

void require_same_modulus(const RootArray& a, const RootArray& b)
{
    if (a.modulus != b.modulus || a.rows() != b.rows() || a.cols() != b.cols())
        throw UsageError("inputs differ in modulus or dimensions");
}

std::string ratio_text(const Ratio& r) { return std::to_string(r.num) + "/" + std::to_string(r.den); }

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Construct and verify Z-complementary pairs and array pairs", "zcap"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a sequence or array pair");
    gen->require_subcommand(1);
    gen->fallthrough();
    std::vector<std::string> out_paths;
    bool no_verify = false;
    gen->add_option("-o,--out", out_paths, "Write the two documents to FIRST SECOND")->expected(2);
    gen->add_flag("--no-verify", no_verify, "Skip self-verification");

    int q = 2, m = 1, n = 0;
    std::vector<int> pi, v;
    std::string companion = "first";
    auto* gdj = gen->add_subcommand("gdj", "Golay-Davis-Jedwab complementary pair");
    gdj->add_option("--q", q)->required();
    gdj->add_option("--m", m)->required();
    gdj->add_option("--pi", pi, "1-based permutation, e.g. 2,1,3")->delimiter(',');
    gdj->add_option("--v", v, "v_0..v_m")->delimiter(',');
    gdj->add_option("--companion", companion)->check(CLI::IsMember({"first", "last"}));

    std::string anf_text, anf_var;
    std::int64_t rows = 0, cols = 0;
    auto* anf = gen->add_subcommand("anf", "Pair (f, f + (q/2) VAR) from a generalized Boolean function");
    anf->add_option("--anf", anf_text, "Algebraic normal form, e.g. \"x1*x2 + y1\"")->required();
    anf->add_option("--q", q)->required();
    anf->add_option("--n", n, "x-variable count")->required();
    anf->add_option("--m", m, "y-variable count")->required();
    anf->add_option("--companion", anf_var, "Variable added with weight q/2, e.g. y1")->required();
    anf->add_option("--rows", rows, "Truncate to this many rows (2-D) or entries (1-D)");
    anf->add_option("--cols", cols, "Truncate to this many columns");

    std::vector<std::string> inputs;
    auto* lemma4 = gen->add_subcommand("lemma4", "Extend a GCP of length L to a (14L, 12L)-ZCP");
    lemma4->add_option("inputs", inputs, "A B (default: two documents on stdin)")->expected(0, 2);

    auto* lemma6 = gen->add_subcommand("lemma6", "Binary (14, 12)-ZCP");

    std::optional<int> z1_claim, z2_claim;
    bool force = false;
    auto* theorem1 = gen->add_subcommand("theorem1", "ZCAP from a binary ZCP and a ZCP");
    theorem1->add_option("inputs", inputs, "A B C D")->expected(4)->required();
    theorem1->add_option("--z1", z1_claim, "Claimed ZCZ width of (A, B)");
    theorem1->add_option("--z2", z2_claim, "Claimed ZCZ width of (C, D)");
    theorem1->add_flag("--force", force, "Do not check the claimed input widths");

    auto* corollary1 = gen->add_subcommand("corollary1", "q-ary ZCAP from a binary ZCP and a q-ary ZCP");
    corollary1->add_option("inputs", inputs, "a b c d")->expected(4)->required();
    corollary1->add_option("--z1", z1_claim, "Claimed ZCZ width of (a, b)");
    corollary1->add_option("--z2", z2_claim, "Claimed ZCZ width of (c, d)");
    corollary1->add_flag("--force", force, "Do not check the claimed input widths");

    int t_prime = 2, v_exp = 0;
    std::vector<int> pi1, pi2, p_bits, d_bits;
    auto* lemma5 = gen->add_subcommand("lemma5", "q-ary ZCAP from a truncated binary ZCP and a GDJ pair");
    lemma5->add_option("--q", q)->required();
    lemma5->add_option("--n", n)->required();
    lemma5->add_option("--m", m)->required();
    lemma5->add_option("--tprime", t_prime)->required();
    lemma5->add_option("--vexp", v_exp, "Exponent v in the length formula");
    lemma5->add_option("--pi1", pi1, "Permutation of {1..m}; searched when omitted")->delimiter(',');
    lemma5->add_option("--pi2", pi2, "Permutation of {1..n}")->delimiter(',');
    lemma5->add_option("--p", p_bits, "p_0..p_m")->delimiter(',');
    lemma5->add_option("--v", v, "v_0..v_n")->delimiter(',');
    lemma5->add_option("--d", d_bits, "d_{t'+1}..d_{m-1}")->delimiter(',');

    auto* theorem2 = gen->add_subcommand("theorem2", "Direct ZCAP with zcz ratio 6/7");
    theorem2->add_option("--q", q)->required();
    theorem2->add_option("--m", m)->required();
    theorem2->add_option("--n", n)->required();
    theorem2->add_option("--pi", pi)->delimiter(',');
    theorem2->add_option("--v", v)->delimiter(',');

    // verify
    auto* verify = app.add_subcommand("verify", "Verify a claimed ZCZ of a pair");
    std::vector<std::string> verify_inputs;
    std::optional<int> z_claim;
    bool want_max = false;
    verify->add_option("inputs", verify_inputs, "FIRST SECOND (default: two documents on stdin)")->expected(0, 2);
    verify->add_option("--z", z_claim, "Claimed ZCZ width of a sequence pair");
    verify->add_option("--z1", z1_claim, "Claimed zone rows");
    verify->add_option("--z2", z2_claim, "Claimed zone columns");
    verify->add_flag("--max", want_max, "Only measure the maximal zone");

    // surface
    auto* surface_cmd = app.add_subcommand("surface", "Export |rho(S;u1,u2) + rho(T;u1,u2)| as CSV");
    std::vector<std::string> surface_inputs;
    std::string csv_path;
    surface_cmd->add_option("inputs", surface_inputs, "FIRST SECOND (default: stdin)")->expected(0, 2);
    surface_cmd->add_option("-o,--out", csv_path, "CSV path (default: stdout)");

    std::vector<const char*> argv{"zcap"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "zcap: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            const Emitter emitter{out_paths, out};
            const bool self_verify = !no_verify;
            CombineOptions combine;
            combine.z1 = z1_claim;
            combine.z2 = z2_claim;
            combine.check_inputs = !force;
            combine.verify = self_verify;

            if (gdj->parsed()) {
                if (pi.empty())
                    pi = identity_permutation(m);
                if (v.empty())
                    v.assign(m + 1, 0);
                auto [a, b] = gdj_pair(q, m, pi, v, companion == "last" ? GdjCompanion::last : GdjCompanion::first);
                if (self_verify && !max_zcz(lift(a), lift(b)).is_gcp())
                    throw VerificationError("gdj: output is not a Golay complementary pair");
                emitter.emit(labelled(std::move(a), "gdj:a"), labelled(std::move(b), "gdj:b"));
            } else if (anf->parsed()) {
                Gbf f = parse_anf(anf_text, q, n, m);
                Gbf g = f;
                const Gbf var = parse_anf(anf_var, q, n, m);
                if (var.terms().size() != 1 || std::popcount(var.terms().begin()->first) != 1 ||
                    var.terms().begin()->second != 1)
                    throw UsageError("--companion must name a single variable");
                g.add_term(var.terms().begin()->first, q / 2);
                if (n == 0 || m == 0) {
                    const std::int64_t len = rows > 0 ? rows : (std::int64_t{1} << (n + m));
                    emitter.emit(labelled(gbf_to_sequence(f, len), "anf:f"), labelled(gbf_to_sequence(g, len), "anf:g"));
                } else {
                    const std::int64_t r = rows > 0 ? rows : (std::int64_t{1} << n);
                    const std::int64_t c = cols > 0 ? cols : (std::int64_t{1} << m);
                    emitter.emit(labelled(gbf2d_to_array(f, r, c), "anf:f"), labelled(gbf2d_to_array(g, r, c), "anf:g"));
                }
            } else if (lemma4->parsed()) {
                const auto files = read_inputs(inputs, 2, in);
                const RootVector a = files[0].as_root_vector();
                const RootVector b = files[1].as_root_vector();
                require_same_modulus(a, b);
                auto [s, t] = lemma4_extend(a, b);
                if (self_verify && !zcp_check(s, t, static_cast<int>(12 * a.size())).verified)
                    throw VerificationError("lemma4: output is not a (14L, 12L)-ZCP");
                const bool zq_inputs = std::holds_alternative<ZqVector>(files[0].data);
                if (zq_inputs && s.modulus == std::get<ZqVector>(files[0].data).q)
                    emitter.emit(labelled(ZqVector(s.modulus, s.exponents), "lemma4:s"),
                                 labelled(ZqVector(t.modulus, t.exponents), "lemma4:t"));
                else
                    emitter.emit(labelled(std::move(s), "lemma4:s"), labelled(std::move(t), "lemma4:t"));
            } else if (lemma6->parsed()) {
                auto [a, b] = lemma6_base();
                if (self_verify && !zcp_check(lift(a), lift(b), 12).verified)
                    throw VerificationError("lemma6: output is not a (14, 12)-ZCP");
                emitter.emit(labelled(std::move(a), "lemma6:a"), labelled(std::move(b), "lemma6:b"));
            } else if (theorem1->parsed()) {
                const auto files = read_inputs(inputs, 4, in);
                auto [s, t] = theorem1_combine(files[0].as_root_vector(), files[1].as_root_vector(),
                                               files[2].as_root_vector(), files[3].as_root_vector(), combine);
                emitter.emit(labelled(std::move(s), "theorem1:S"), labelled(std::move(t), "theorem1:T"));
            } else if (corollary1->parsed()) {
                const auto files = read_inputs(inputs, 4, in);
                std::vector<ZqVector> zq;
                for (const auto& f : files) {
                    if (!std::holds_alternative<ZqVector>(f.data))
                        throw UsageError("corollary1 inputs must be 1-D {\"q\", \"values\"} documents");
                    zq.push_back(std::get<ZqVector>(f.data));
                }
                auto [s, t] = corollary1_combine(zq[0], zq[1], zq[2], zq[3], combine);
                emitter.emit(labelled(std::move(s), "corollary1:s"), labelled(std::move(t), "corollary1:t"));
            } else if (lemma5->parsed()) {
                Lemma5Params params;
                params.q = q;
                params.n = n;
                params.m = m;
                params.t_prime = t_prime;
                params.v_exp = v_exp;
                params.pi2 = pi2.empty() ? identity_permutation(n) : pi2;
                params.p = p_bits;
                params.v = v;
                params.d = d_bits;
                params.verify = self_verify;
                if (pi1.empty()) {
                    auto found = lemma5_find_pi1(params);
                    if (!found)
                        throw VerificationError("lemma5: no permutation pi1 reaches the claimed width");
                    pi1 = *found;
                }
                params.pi1 = pi1;
                auto [s, t] = lemma5_construct(params);
                emitter.emit(labelled(std::move(s), "lemma5:s"), labelled(std::move(t), "lemma5:t"));
            } else if (theorem2->parsed()) {
                Theorem2Params params;
                params.q = q;
                params.m = m;
                params.n = n;
                params.pi = pi.empty() ? identity_permutation(m) : pi;
                params.v = v;
                params.verify = self_verify;
                auto [s, t] = theorem2_direct(params);
                emitter.emit(labelled(std::move(s), "theorem2:s"), labelled(std::move(t), "theorem2:t"));
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            const auto files = read_inputs(verify_inputs, 2, in);
            if (files[0].is_1d() != files[1].is_1d())
                throw UsageError("cannot compare a sequence with an array");
            json report;
            report["inputs"] = verify_inputs.empty() ? json::array({"<stdin>", "<stdin>"}) : json(verify_inputs);
            bool verdict = false;

            if (files[0].is_1d()) {
                if (z1_claim || z2_claim)
                    throw UsageError("sequence pairs take --z, not --z1/--z2");
                if (!z_claim && !want_max)
                    throw UsageError("give --z or --max");
                const RootVector a = files[0].as_root_vector();
                const RootVector b = files[1].as_root_vector();
                require_same_modulus(a, b);
                const ZcpCertificate cert = max_zcz(a, b);
                report["kind"] = "zcp";
                report["length"] = cert.length;
                report["max_z"] = cert.width;
                report["frontier"] = json::array({json::array({cert.width})});
                report["peak"] = cert.peak;
                report["zcz_ratio"] = ratio_text(Ratio::of(cert.width, cert.length));
                if (z_claim) {
                    if (*z_claim < 1 || *z_claim > cert.length)
                        throw UsageError("--z outside [1, L]");
                    verdict = zcp_check(a, b, *z_claim).verified;
                    report["claimed"] = {{"z", *z_claim}};
                    report["verified"] = verdict;
                }
            } else {
                if (z_claim)
                    throw UsageError("array pairs take --z1/--z2, not --z");
                if (!(z1_claim && z2_claim) && !want_max)
                    throw UsageError("give --z1 and --z2, or --max");
                const RootArray s = files[0].as_root_array();
                const RootArray t = files[1].as_root_array();
                require_same_modulus(s, t);
                const ZczFrontier frontier = max_zcz_rect(s, t);
                report["kind"] = "zcap";
                report["rows"] = s.rows();
                report["cols"] = s.cols();
                report["peak"] = 2 * static_cast<std::int64_t>(s.rows() * s.cols());
                json rects = json::array();
                for (const auto& [a, b] : frontier.rectangles)
                    rects.push_back({a, b});
                report["frontier"] = rects;
                report["best_rectangle"] = {frontier.best_rectangle.first, frontier.best_rectangle.second};
                report["zcz_ratio"] = ratio_text(frontier.best_ratio);
                report["zcz_ratio_value"] = frontier.best_ratio.value();
                if (z1_claim && z2_claim) {
                    if (*z1_claim < 1 || *z1_claim > s.rows() || *z2_claim < 1 || *z2_claim > s.cols())
                        throw UsageError("--z1/--z2 outside the array dimensions");
                    verdict = zcap_check(s, t, *z1_claim, *z2_claim).verified;
                    report["claimed"] = {{"z1", *z1_claim}, {"z2", *z2_claim}};
                    report["verified"] = verdict;
                }
            }
            out << report.dump() << '\n';
            if (report.contains("verified"))
                return verdict ? kExitOk : kExitFalsified;
            return kExitOk;
        }

        if (surface_cmd->parsed()) {
            const auto files = read_inputs(surface_inputs, 2, in);
            const RootArray s = files[0].as_root_array();
            const RootArray t = files[1].as_root_array();
            require_same_modulus(s, t);
            if (csv_path.empty()) {
                write_surface_csv(out, s, t);
            } else {
                std::ofstream file(csv_path);
                if (!file)
                    throw UsageError("cannot write " + csv_path);
                write_surface_csv(file, s, t);
            }
            return kExitOk;
        }
    } catch (const VerificationError& e) {
        err << "zcap: verification failed: " << e.what() << '\n';
        return kExitFalsified;
    } catch (const std::invalid_argument& e) {
        err << "zcap: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "zcap: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace zcap
