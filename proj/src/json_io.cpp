#include "singpack/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace singpack {

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw std::invalid_argument("expected rational string or integer, got " + j.dump());
}

} // namespace

LatticeModel manifold_from_json(const Json& j) {
    LatticeModel m;
    if (j.contains("basis"))
        m.basis_names = j.at("basis").get<std::vector<std::string>>();
    m.intersection = j.at("intersection").get<std::vector<IntVec>>();
    m.rank = static_cast<int>(m.intersection.size());
    for (const auto& o : j.at("omega")) m.omega.push_back(rational_from_json(o));
    if (j.contains("curves")) {
        for (const auto& c : j.at("curves")) {
            m.curves.push_back({c.at("name").get<std::string>(),
                                c.at("class").get<IntVec>()});
        }
    }
    m.validate();
    return m;
}

LatticeModel load_manifold(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open manifold file: " + path);
    Json j = Json::parse(in);
    return manifold_from_json(j);
}

Json to_json(const RationalVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

Json to_json(const BarycentricDecomposition& d) {
    Json j;
    j["grid_denominator"] = d.grid_denominator;
    j["vertices"] = Json::array();
    for (const auto& v : d.vertices) j["vertices"].push_back(to_json(v));
    j["weights"] = to_json(d.weights);
    j["max_deviation"] = d.max_deviation.str();
    return j;
}

Json to_json(const PolarizationSketch& s) {
    Json j;
    j["classes"] = s.classes;
    j["weights"] = to_json(s.weights);
    j["clearing_factors"] = s.clearing_factors;
    return j;
}

Json to_json(const PackingReport& r) {
    Json j;
    j["ellipsoids"] = Json::array();
    for (const auto& e : r.ellipsoids) {
        j["ellipsoids"].push_back(Json{{"capacity_base", e.capacity_base.str()},
                                       {"capacity_fiber", e.capacity_fiber.str()},
                                       {"gromov_width", e.gromov_width().str()}});
    }
    j["piece_volumes"] = to_json(r.piece_volumes);
    j["total_volume"] = r.total_volume.str();
    j["manifold_volume"] = r.manifold_volume.str();
    j["residual"] = r.residual.str();
    return j;
}

Json to_json(const GammaCoefficients& g) {
    Json j;
    j["gamma"] = to_json(g.gamma);
    j["shrunk_area"] = to_json(g.shrunk_area);
    return j;
}

Json to_json(const PeriodVerdict& v) {
    Json j;
    j["verdict"] = v.pass ? "PASS" : "FAIL";
    j["note"] = v.note;
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

Json to_json(const Polytope& p) {
    Json verts = Json::array();
    for (const auto& v : p.vertices)
        verts.push_back(Json::array({v[0].str(), v[1].str()}));
    Json j;
    j["vertices"] = verts;
    j["area"] = p.area().str();
    return j;
}

Json to_json(const CubicReport& r) {
    Json j;
    j["mu"] = r.mu.str();
    j["identity"] = "l - mu e = (1/3)(3l - 2e) + (2/3 - mu) e";
    j["identity_holds"] = r.identity_holds;
    j["pieces"] = Json::array();
    for (const auto& p : r.pieces) {
        j["pieces"].push_back(Json{{"name", p.name},
                                   {"capacity_base", p.capacity_base.str()},
                                   {"capacity_fiber", p.capacity_fiber.str()},
                                   {"volume", p.volume.str()}});
    }
    j["total_volume"] = r.total_volume.str();
    j["blowup_polytope"] = to_json(r.blowup_polytope);
    return j;
}

Json to_json(const ClassDecomposition& d) {
    Json parts = Json::array();
    for (size_t i = 0; i < d.parts.size(); ++i) {
        Json p;
        p["class"] = d.parts[i].str();
        p["k"] = d.parts[i].k;
        p["l"] = d.parts[i].l;
        p["genus"] = genus(d.parts[i]);
        p["verdict"] = d.part_verdicts[i] == PartVerdict::AdjunctionFail
                           ? "ADJUNCTION_FAIL"
                           : "OK";
        parts.push_back(std::move(p));
    }
    Json j;
    j["parts"] = std::move(parts);
    j["global_verdict"] =
        d.global_verdict == GlobalVerdict::Genericity ? "GENERICITY"
        : d.survives()                                ? "SURVIVES"
                                                      : "REJECTED";
    return j;
}

} // namespace singpack
