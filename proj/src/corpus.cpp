#include "curveh1/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include "curveh1/parse.hpp"
#include "curveh1/report.hpp"

namespace curveh1 {

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream is(p);
    if (!is) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

CorpusOutcome run_curve_entry(const std::filesystem::path& path) {
    CorpusOutcome out;
    out.name = path.filename().string();
    std::ostringstream detail;
    try {
        ParsedInput in = parse_curve_spec(read_file(path));
        H1Report rep;
        if (in.is_monomial()) {
            rep = monomial_h1(in.monomial_gens, true, 24);
            auto sg = semigroup_data(in.monomial_gens);
            if (!rep.singularities.empty() && rep.singularities[0].delta != sg.delta())
                throw std::logic_error("delta does not match the semigroup gap count");
            if (in.monomial_gens.size() == 2) {
                // plane cross-check: the curve is y^p - x^q up to coordinates
                auto ring = make_ring({"x", "y"});
                QPoly plane = QPoly::variable(ring, 1).pow(
                                  static_cast<unsigned>(sg.generators[0])) -
                              QPoly::variable(ring, 0).pow(
                                  static_cast<unsigned>(sg.generators[1]));
                auto plane_rep = h1_dimension(make_curve_spec({plane}), false);
                if (plane_rep.h1_formula != rep.h1_formula)
                    throw std::logic_error("plane model disagrees with toric model");
            }
        } else {
            CurveSpec spec = to_curve_spec(in);
            rep = h1_dimension(spec, true, 24);

            long orbit_mu = 0;
            for (const auto& s : rep.singularities) orbit_mu += s.point.orbit_size() * s.mu;
            if (orbit_mu != total_milnor_on_curve(spec.product))
                throw std::logic_error("orbit sum of mu disagrees with the global computation");
            if (rep.topology.b0 - rep.topology.b1 != rep.topology.chi)
                throw std::logic_error("b0 - b1 != chi");
            is_disjoint_lines(spec);  // runs the structural cross-check
        }
        if (!rep.h1_oracle || !rep.h1_oracle->stabilized)
            throw std::logic_error("oracle did not stabilize");
        if (*rep.verdict != Verdict::Agree) throw std::logic_error("identity verdict: disagree");
        detail << "h1=" << rep.h1_formula << " b1=" << rep.topology.b1
               << " sum_mu'=" << rep.sum_mu_prime << " oracle=" << rep.h1_oracle->value
               << " verdict=agree";
        out.ok = true;
    } catch (const std::exception& e) {
        detail << "error: " << e.what();
        out.ok = false;
    }
    out.detail = detail.str();
    return out;
}

CorpusOutcome run_family_entry(const std::filesystem::path& path, long seed) {
    CorpusOutcome out;
    out.name = path.filename().string();
    std::ostringstream detail;
    try {
        ParsedInput in = parse_curve_spec(read_file(path));
        FamilySpec fam = to_family_spec(in);
        FamilyReport rep = family_scan(fam, seed);
        bool all_hold = true;
        for (const auto& v : rep.semicontinuity) {
            if (!v.holds && rep.lci)
                throw std::logic_error("semicontinuity fails on an lci family");
            all_hold = all_hold && v.holds;
        }
        if (!rep.lci && all_hold && !rep.semicontinuity.empty())
            detail << "note: non-lci family with all verdicts holding; ";
        detail << "h_f=" << rep.h_f << " special=" << rep.special.rational_values.size()
               << " fibers=[";
        for (const auto& f : rep.fibers) {
            detail << rational_to_string(f.y) << ":";
            if (f.h1)
                detail << *f.h1;
            else
                detail << "skip";
            detail << " ";
        }
        detail << "]";
        for (const auto& v : rep.semicontinuity)
            detail << " " << rational_to_string(v.y) << (v.holds ? ":holds" : ":fails");
        out.ok = true;
    } catch (const std::exception& e) {
        detail << "error: " << e.what();
        out.ok = false;
    }
    out.detail = detail.str();
    return out;
}

}  // namespace

CorpusResult run_corpus(const std::string& dir, long seed) {
    namespace fs = std::filesystem;
    std::vector<fs::path> curves, families;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        auto ext = entry.path().extension().string();
        if (ext == ".curve") curves.push_back(entry.path());
        if (ext == ".family") families.push_back(entry.path());
    }
    std::sort(curves.begin(), curves.end());
    std::sort(families.begin(), families.end());
    if (curves.empty() && families.empty())
        throw std::runtime_error("no corpus files found under " + dir);

    std::vector<std::future<CorpusOutcome>> jobs;
    for (const auto& p : curves)
        jobs.push_back(std::async(std::launch::async, run_curve_entry, p));
    for (const auto& p : families)
        jobs.push_back(std::async(std::launch::async, run_family_entry, p, seed));

    CorpusResult result;
    for (auto& j : jobs) {
        result.entries.push_back(j.get());
        result.all_ok = result.all_ok && result.entries.back().ok;
    }
    return result;
}

}  // namespace curveh1
