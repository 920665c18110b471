#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "curveh1/corpus.hpp"
#include "curveh1/parse.hpp"
#include "curveh1/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitMismatch = 3;

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

int emit_error(const std::exception& e, bool json) {
    if (json) {
        curveh1::Json doc{{"error", {{"message", e.what()}}}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace curveh1;

    CLI::App app{"exact invariants of affine plane curves: both sides of the identity\n"
                 "dim H1(C) = dim H_1(C) + sum mu'(C,x), and fiber families"};
    app.require_subcommand(1);

    std::string file;
    bool with_oracle = false;
    long degree_bound = 24;
    bool json = false;
    long seed = 1;
    std::string corpus_dir = "corpus";

    auto* invariants = app.add_subcommand("invariants", "both sides of the identity for a curve");
    invariants->add_option("file", file, "curve spec file")->required();
    invariants->add_flag("--oracle", with_oracle, "also run the truncated-cohomology oracle");
    invariants->add_option("--degree-bound", degree_bound, "oracle degree bound (default 24)");
    invariants->add_flag("--json", json, "emit a JSON report");

    auto* oracle_cmd = app.add_subcommand("oracle", "truncated cohomology of the coordinate ring");
    oracle_cmd->add_option("file", file, "curve spec file")->required();
    oracle_cmd->add_option("--degree-bound", degree_bound, "degree bound (default 24)");
    oracle_cmd->add_flag("--json", json, "emit a JSON report");

    auto* family_cmd = app.add_subcommand("family", "fibers, generic value and semicontinuity");
    family_cmd->add_option("file", file, "family spec file")->required();
    family_cmd->add_option("--seed", seed, "seed for generic fiber sampling");
    family_cmd->add_flag("--json", json, "emit a JSON report");

    auto* section6 = app.add_subcommand("example-section6",
                                        "built-in quotient-surface family with a failing verdict");
    section6->add_flag("--json", json, "emit a JSON report");

    auto* corpus_cmd = app.add_subcommand("corpus", "run the bundled golden corpus");
    corpus_cmd->add_option("dir", corpus_dir, "corpus directory (default ./corpus)");
    corpus_cmd->add_option("--seed", seed, "seed for family sampling");
    corpus_cmd->add_flag("--json", json, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (invariants->parsed()) {
            ParsedInput in = parse_curve_spec(read_file(file));
            H1Report rep = in.is_monomial()
                               ? monomial_h1(in.monomial_gens, with_oracle, degree_bound)
                               : h1_dimension(to_curve_spec(in), with_oracle, degree_bound);
            if (json)
                std::cout << to_json(rep).dump(2) << "\n";
            else
                std::cout << render_text(rep);
            if (rep.verdict && *rep.verdict != Verdict::Agree) return kExitMismatch;
            return kExitOk;
        }

        if (oracle_cmd->parsed()) {
            ParsedInput in = parse_curve_spec(read_file(file));
            OracleResult res;
            if (in.is_monomial()) {
                auto pres = monomial_curve_presentation(in.monomial_gens);
                res = truncated_h1(pres, std::max(degree_bound, graded_certificate_bound(pres)));
            } else {
                CurveSpec spec = to_curve_spec(in);
                auto pres = make_presentation(spec.ring, {spec.product}, spec.weights);
                long bound = degree_bound;
                if (pres.graded) bound = std::max(bound, graded_certificate_bound(pres));
                res = truncated_h1(pres, bound);
            }
            if (json)
                std::cout << to_json(res).dump(2) << "\n";
            else
                std::cout << render_text(res);
            return kExitOk;
        }

        if (family_cmd->parsed()) {
            ParsedInput in = parse_curve_spec(read_file(file));
            FamilyReport rep = family_scan(to_family_spec(in), seed);
            if (json)
                std::cout << to_json(rep).dump(2) << "\n";
            else
                std::cout << render_text(rep);
            return kExitOk;
        }

        if (section6->parsed()) {
            FamilyReport rep = family_scan(section6_family(), seed);
            bool expected = rep.h_f == 0 && !rep.lci && rep.semicontinuity.size() == 1 &&
                            !rep.semicontinuity[0].holds && rep.fibers.size() >= 1 &&
                            rep.fibers[0].h1 && *rep.fibers[0].h1 == 2;
            if (json)
                std::cout << to_json(rep).dump(2) << "\n";
            else
                std::cout << render_text(rep);
            return expected ? kExitOk : kExitMismatch;
        }

        if (corpus_cmd->parsed()) {
            CorpusResult res = run_corpus(corpus_dir, seed);
            if (json) {
                Json entries = Json::array();
                for (const auto& e : res.entries)
                    entries.push_back(Json{{"name", e.name}, {"ok", e.ok}, {"detail", e.detail}});
                std::cout << Json{{"entries", entries}, {"ok", res.all_ok}}.dump(2) << "\n";
            } else {
                for (const auto& e : res.entries)
                    std::cout << (e.ok ? "OK      " : "MISMATCH") << "  " << e.name << "  "
                              << e.detail << "\n";
                std::cout << (res.all_ok ? "corpus: all entries verified\n"
                                         : "corpus: verification mismatches\n");
            }
            return res.all_ok ? kExitOk : kExitMismatch;
        }
    } catch (const std::exception& e) {
        return emit_error(e, json);
    }
    return kExitUsage;
}
