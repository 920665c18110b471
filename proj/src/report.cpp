#include "curveh1/report.hpp"

#include <sstream>

#include "curveh1/polyops.hpp"

namespace curveh1 {

namespace {

Json rational_json(const Rational& r) { return rational_to_string(r); }

Json coeffs_json(const UniPoly<Rational>& c) {
    Json a = Json::array();
    for (const auto& x : c) a.push_back(rational_to_string(x));
    return a;
}

UniPoly<Rational> coeffs_from_json(const Json& j) {
    UniPoly<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_string(x.get<std::string>()));
    return c;
}

Json nfe_json(const NFE& v) {
    if (v.is_rational()) return rational_json(v.rational_value());
    return coeffs_json(v.coeffs());
}

NFE nfe_from_json(const Json& j, const NumberFieldPtr& field) {
    if (j.is_string()) return NFE(rational_from_string(j.get<std::string>()));
    return NFE(field, coeffs_from_json(j));
}

Json field_json(const NumberFieldPtr& f) {
    if (!f) return nullptr;
    return Json{{"minpoly", coeffs_json(f->minpoly)}, {"symbol", f->symbol}};
}

NumberFieldPtr field_from_json(const Json& j) {
    if (j.is_null()) return nullptr;
    return make_number_field(coeffs_from_json(j.at("minpoly")), j.at("symbol").get<std::string>());
}

}  // namespace

Json to_json(const OracleResult& r) {
    Json per = Json::array();
    for (auto& [d, inc] : r.per_degree) per.push_back(Json::array({d, inc}));
    return Json{{"degree_bound", r.degree_bound},
                {"per_degree", per},
                {"value", r.value},
                {"stabilized", r.stabilized},
                {"stabilization_window", r.stabilization_window}};
}

OracleResult oracle_from_json(const Json& j) {
    OracleResult r;
    r.degree_bound = j.at("degree_bound").get<long>();
    for (const auto& e : j.at("per_degree"))
        r.per_degree.emplace_back(e.at(0).get<long>(), e.at(1).get<long>());
    r.value = j.at("value").get<long>();
    r.stabilized = j.at("stabilized").get<bool>();
    r.stabilization_window = j.at("stabilization_window").get<long>();
    return r;
}

Json to_json(const AlgebraicPoint& p) {
    return Json{{"field", field_json(p.field)}, {"x", nfe_json(p.x)}, {"y", nfe_json(p.y)}};
}

AlgebraicPoint point_from_json(const Json& j) {
    AlgebraicPoint p;
    p.field = field_from_json(j.at("field"));
    p.x = nfe_from_json(j.at("x"), p.field);
    p.y = nfe_from_json(j.at("y"), p.field);
    return p;
}

Json to_json(const SingularityRecord& r) {
    return Json{{"point", to_json(r.point)}, {"orbit_size", r.point.orbit_size()},
                {"mu", r.mu},               {"branches", r.branches},
                {"delta", r.delta},         {"mu_prime", r.mu_prime}};
}

SingularityRecord singularity_from_json(const Json& j) {
    SingularityRecord r;
    r.point = point_from_json(j.at("point"));
    r.mu = j.at("mu").get<long>();
    r.branches = j.at("branches").get<long>();
    r.delta = j.at("delta").get<long>();
    r.mu_prime = j.at("mu_prime").get<long>();
    return r;
}

Json to_json(const TopologyReport& t) {
    Json comps = Json::array();
    for (const auto& c : t.components)
        comps.push_back(Json{{"degree", c.degree}, {"genus", c.genus}, {"punctures", c.punctures}});
    Json inc = Json::array();
    for (const auto& p : t.incidence)
        inc.push_back(Json{{"point", to_json(p.point)},
                           {"branches", p.total_branches},
                           {"components", p.components}});
    Json inf = Json::array();
    for (const auto& p : t.infinity) {
        Json counts = Json::array();
        for (auto& [comp, b] : p.branch_counts) counts.push_back(Json::array({comp, b}));
        inf.push_back(Json{{"at_y_axis", p.at_y_axis},
                           {"field", field_json(p.field)},
                           {"c", nfe_json(p.c)},
                           {"orbit_size", p.orbit_size},
                           {"branch_counts", counts}});
    }
    return Json{{"b0", t.b0},           {"b1", t.b1},       {"chi", t.chi},
                {"components", comps},  {"incidence", inc}, {"infinity", inf}};
}

TopologyReport topology_from_json(const Json& j) {
    TopologyReport t;
    t.b0 = j.at("b0").get<long>();
    t.b1 = j.at("b1").get<long>();
    t.chi = j.at("chi").get<long>();
    for (const auto& c : j.at("components")) {
        ComponentData cd;
        cd.degree = c.at("degree").get<long>();
        cd.genus = c.at("genus").get<long>();
        cd.punctures = c.at("punctures").get<long>();
        t.components.push_back(cd);
    }
    for (const auto& p : j.at("incidence")) {
        IncidencePoint ip;
        ip.point = point_from_json(p.at("point"));
        ip.total_branches = p.at("branches").get<long>();
        ip.components = p.at("components").get<std::vector<int>>();
        t.incidence.push_back(std::move(ip));
    }
    for (const auto& p : j.at("infinity")) {
        InfinityPoint ip;
        ip.at_y_axis = p.at("at_y_axis").get<bool>();
        ip.field = field_from_json(p.at("field"));
        ip.c = nfe_from_json(p.at("c"), ip.field);
        ip.orbit_size = p.at("orbit_size").get<long>();
        for (const auto& e : p.at("branch_counts"))
            ip.branch_counts[e.at(0).get<int>()] = e.at(1).get<long>();
        t.infinity.push_back(std::move(ip));
    }
    return t;
}

Json to_json(const H1Report& r) {
    Json j = to_json(r.topology);
    Json sing = Json::array();
    for (const auto& s : r.singularities) sing.push_back(to_json(s));
    j["singularities"] = sing;
    j["sum_mu_prime"] = r.sum_mu_prime;
    j["h1_formula"] = r.h1_formula;
    j["h1_oracle"] = r.h1_oracle ? to_json(*r.h1_oracle) : Json(nullptr);
    if (r.verdict) j["verdict"] = verdict_name(*r.verdict);
    return j;
}

H1Report h1_from_json(const Json& j) {
    H1Report r;
    r.topology = topology_from_json(j);
    for (const auto& s : j.at("singularities")) r.singularities.push_back(singularity_from_json(s));
    r.sum_mu_prime = j.at("sum_mu_prime").get<long>();
    r.h1_formula = j.at("h1_formula").get<long>();
    if (!j.at("h1_oracle").is_null()) r.h1_oracle = oracle_from_json(j.at("h1_oracle"));
    if (j.contains("verdict")) {
        std::string v = j.at("verdict").get<std::string>();
        r.verdict = v == "agree"    ? Verdict::Agree
                    : v == "disagree" ? Verdict::Disagree
                                      : Verdict::OracleUnstable;
    }
    return r;
}

Json to_json(const FiberRecord& r) {
    return Json{{"y", rational_json(r.y)},
                {"reduced", r.reduced},
                {"finite_singular", r.finite_singular},
                {"h1", r.h1 ? Json(*r.h1) : Json(nullptr)},
                {"generic_sample", r.generic_sample}};
}

FiberRecord fiber_from_json(const Json& j) {
    FiberRecord r;
    r.y = rational_from_string(j.at("y").get<std::string>());
    r.reduced = j.at("reduced").get<bool>();
    r.finite_singular = j.at("finite_singular").get<bool>();
    if (!j.at("h1").is_null()) r.h1 = j.at("h1").get<long>();
    r.generic_sample = j.at("generic_sample").get<bool>();
    return r;
}

Json to_json(const FamilyReport& r) {
    Json specials = Json::array();
    for (const auto& v : r.special.rational_values) specials.push_back(rational_json(v));
    Json irr = Json::array();
    for (const auto& f : r.special.irrational_factors) irr.push_back(coeffs_json(to_univariate(f, 0)));
    Json fibers = Json::array();
    for (const auto& f : r.fibers) fibers.push_back(to_json(f));
    Json semi = Json::array();
    for (const auto& v : r.semicontinuity)
        semi.push_back(Json{{"y", rational_json(v.y)}, {"verdict", v.holds ? "holds" : "fails"}});
    return Json{{"h_f", r.h_f},
                {"special_values", specials},
                {"irrational_special", irr},
                {"fibers", fibers},
                {"semicontinuity", semi},
                {"lci", r.lci}};
}

FamilyReport family_from_json(const Json& j) {
    FamilyReport r;
    r.h_f = j.at("h_f").get<long>();
    for (const auto& v : j.at("special_values"))
        r.special.rational_values.push_back(rational_from_string(v.get<std::string>()));
    auto tring = make_ring({"t"});
    for (const auto& f : j.at("irrational_special"))
        r.special.irrational_factors.push_back(from_univariate(coeffs_from_json(f), tring, 0));
    for (const auto& f : j.at("fibers")) r.fibers.push_back(fiber_from_json(f));
    for (const auto& v : j.at("semicontinuity")) {
        SemiVerdict sv;
        sv.y = rational_from_string(v.at("y").get<std::string>());
        sv.holds = v.at("verdict").get<std::string>() == "holds";
        r.semicontinuity.push_back(sv);
    }
    r.lci = j.at("lci").get<bool>();
    return r;
}

// field-wise equality, matching the serialized content

bool operator==(const AlgebraicPoint& a, const AlgebraicPoint& b) {
    if ((a.field == nullptr) != (b.field == nullptr)) return false;
    if (a.field && !(a.field->minpoly == b.field->minpoly && a.field->symbol == b.field->symbol))
        return false;
    return a.x.coeffs() == b.x.coeffs() && a.y.coeffs() == b.y.coeffs();
}

bool operator==(const SingularityRecord& a, const SingularityRecord& b) {
    return a.point == b.point && a.mu == b.mu && a.branches == b.branches && a.delta == b.delta &&
           a.mu_prime == b.mu_prime;
}

bool operator==(const TopologyReport& a, const TopologyReport& b) {
    return to_json(a) == to_json(b);
}

bool operator==(const H1Report& a, const H1Report& b) { return to_json(a) == to_json(b); }

bool operator==(const FiberRecord& a, const FiberRecord& b) { return to_json(a) == to_json(b); }

bool operator==(const FamilyReport& a, const FamilyReport& b) { return to_json(a) == to_json(b); }

std::string render_text(const OracleResult& r) {
    std::ostringstream os;
    os << "truncated cohomology: value " << r.value << " (degree bound " << r.degree_bound
       << ", " << (r.stabilized ? (r.certified ? "certified" : "window-stabilized") : "NOT stabilized")
       << ")\n  increments:";
    for (auto& [d, inc] : r.per_degree)
        if (inc) os << " " << d << ":" << inc;
    os << "\n";
    return os.str();
}

std::string render_text(const H1Report& r) {
    std::ostringstream os;
    os << "topology: b0 = " << r.topology.b0 << ", b1 = " << r.topology.b1
       << ", chi = " << r.topology.chi << "\n";
    for (const auto& c : r.topology.components)
        os << "  component: degree " << c.degree << ", genus " << c.genus << ", places at infinity "
           << c.punctures << "\n";
    if (r.singularities.empty()) {
        os << "singularities: none\n";
    } else {
        os << "singularities:\n";
        for (const auto& s : r.singularities)
            os << "  " << s.point.to_string() << ": mu = " << s.mu << ", branches = " << s.branches
               << ", delta = " << s.delta << ", mu' = " << s.mu_prime
               << (s.point.orbit_size() > 1
                       ? " (orbit of " + std::to_string(s.point.orbit_size()) + ")"
                       : "")
               << "\n";
    }
    os << "sum of mu' = " << r.sum_mu_prime << "\n";
    os << "h1 = b1 + sum mu' = " << r.h1_formula << "\n";
    if (r.h1_oracle) {
        os << render_text(*r.h1_oracle);
        os << "verdict: " << verdict_name(*r.verdict) << "\n";
    }
    return os.str();
}

std::string render_text(const FamilyReport& r) {
    std::ostringstream os;
    os << "generic fiber h1 = " << r.h_f << (r.lci ? "  (lci family)" : "  (not lci)") << "\n";
    os << "special values:";
    if (r.special.rational_values.empty() && r.special.irrational_factors.empty()) os << " none";
    for (const auto& v : r.special.rational_values) os << " " << rational_to_string(v);
    for (const auto& f : r.special.irrational_factors)
        os << " {root of " << f.to_string() << "}";
    os << "\n";
    for (const auto& f : r.fibers) {
        os << "  fiber at " << rational_to_string(f.y) << ": ";
        if (f.h1)
            os << "h1 = " << *f.h1;
        else
            os << "skipped (non-reduced)";
        if (!f.finite_singular) os << " [fiber meets Sing(f) in a curve]";
        if (f.generic_sample) os << " [generic sample]";
        os << "\n";
    }
    for (const auto& v : r.semicontinuity)
        os << "semicontinuity at " << rational_to_string(v.y) << ": h1 <= h_f "
           << (v.holds ? "holds" : "fails") << "\n";
    return os.str();
}

}  // namespace curveh1
