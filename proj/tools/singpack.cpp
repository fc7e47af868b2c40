#include "singpack/json_io.hpp"
#include "singpack/svg.hpp"
#include "singpack/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace singpack;

namespace {

std::uint64_t env_seed() {
    if (const char* s = std::getenv("SINGPACK_SEED")) {
        return std::strtoull(s, nullptr, 10);
    }
    return 0;
}

RationalVec parse_rational_list(const std::string& csv) {
    RationalVec out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(Rational::parse(item));
    return out;
}

std::vector<long> parse_long_list(const std::string& csv) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stol(item));
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

int cmd_decompose(const std::string& manifold_path, long q) {
    LatticeModel m = load_manifold(manifold_path);
    BarycentricDecomposition bary = kuhn_simplex(m.omega, q);
    PolarizationSketch sketch = synthesize_polarization(m, q);

    // report intersections of the synthesized classes (positivity is
    // reported, not guaranteed)
    Json inter = Json::array();
    for (size_t i = 0; i < sketch.classes.size(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < sketch.classes.size(); ++j)
            row.push_back(pairing(sketch.classes[i], sketch.classes[j],
                                  m.intersection)
                              .str());
        inter.push_back(std::move(row));
    }

    Json j;
    j["barycentric"] = to_json(bary);
    j["polarization"] = to_json(sketch);
    j["class_intersections"] = std::move(inter);
    emit(j);
    return 0;
}

int cmd_pack(const std::string& manifold_path, const std::string& weights_csv,
             const std::string& epsilon_str) {
    Polarization p;
    p.model = load_manifold(manifold_path);
    for (const auto& c : p.model.curves) p.classes.push_back(c.cls);
    p.weights = parse_rational_list(weights_csv);
    p.epsilon = Rational::parse(epsilon_str);

    PackingReport r = packing_report(p);
    GammaCoefficients g = gamma_coefficients(p);
    Json j = to_json(r);
    j["gamma"] = to_json(g);
    emit(j);
    return 0;
}

int cmd_flow(const std::string& a, const std::string& gamma, const std::string& A,
             const std::string& delta, const std::string& point_csv, double t) {
    DiscBundleChart c{Rational::parse(a).to_double(),
                      Rational::parse(gamma).to_double(),
                      Rational::parse(A).to_double(),
                      Rational::parse(delta).to_double()};
    RationalVec pt = parse_rational_list(point_csv);
    if (pt.size() != 4)
        throw std::invalid_argument("--point expects P,zeta,R,theta");
    ChartPoint p{pt[0].to_double(), pt[1].to_double(), pt[2].to_double(),
                 pt[3].to_double()};

    auto X = liouville_field(c, p);
    ImagePoint img = phi_map(c, p);
    ImagePoint flowed = flow_closed_form(c, img, t);

    Json j;
    j["chart"] = {{"a", c.a}, {"gamma", c.gamma}, {"A", c.A}, {"delta", c.delta}};
    j["point"] = {p.P, p.zeta, p.R, p.theta};
    j["liouville_velocity"] = {X[0], X[1], X[2], X[3]};
    j["image"] = {img.P, img.zeta, img.R, img.theta};
    j["t"] = t;
    j["flowed"] = {flowed.P, flowed.zeta, flowed.R, flowed.theta};
    if (c.gamma >= 0.0) {
        BasinVerdict v = basin_membership(c, img);
        j["basin"] = {{"inside", v.inside},
                      {"analytic", v.analytic_inside},
                      {"dynamic", v.dynamic_inside},
                      {"boundary_flag", v.boundary_flag}};
    }
    emit(j);
    return 0;
}

int cmd_verify(long samples) {
    const std::uint64_t seed = env_seed();
    Json j;
    bool ok = true;
    auto check = [&](const std::string& name, double value, double tol) {
        bool pass = value <= tol;
        ok = ok && pass;
        j[name] = {{"max_defect", value}, {"tolerance", tol}, {"pass", pass}};
    };

    const double gammas[] = {-1.0, 0.0, 0.5};
    const double as[] = {1.0 / 3.0, 1.0, 2.0};
    double liou = 0, exact = 0, pull = 0, flow = 0;
    for (double g : gammas) {
        for (double a : as) {
            DiscBundleChart c{a, g, 2.0, 0.0};
            liou = std::max(liou, max_liouville_defect(c, static_cast<int>(samples), seed));
            exact = std::max(exact, max_exactness_defect(c, static_cast<int>(samples), seed, 1e-4));
            pull = std::max(pull, max_pullback_defect_grid(c, 10, 1e-5));
            flow = std::max(flow, max_flow_vs_rk4(c, static_cast<int>(samples), seed, 5.0, 1e-3));
        }
    }
    check("liouville_identity", liou, 1e-10);
    check("exactness", exact, 1e-6);
    check("pullback", pull, 1e-8);
    check("flow_closed_form_vs_rk4", flow, 1e-6);

    DiscBundleChart basin_chart{1.0 / 3.0, 0.5, 3.0, 0.1};
    double agree = basin_agreement_fraction(basin_chart, static_cast<int>(samples),
                                            seed, 1e-3);
    j["basin_agreement"] = {{"fraction", agree}, {"pass", agree == 1.0}};
    ok = ok && agree == 1.0;

    double mc = monte_carlo_basin_volume(basin_chart, samples, seed);
    double expected = (basin_chart.A - basin_chart.delta) * basin_chart.a / 2.0;
    double rel = std::fabs(mc - expected) / expected;
    bool mc_binding = samples >= 1'000'000;
    j["basin_volume_mc"] = {{"estimate", mc},
                            {"expected", expected},
                            {"relative_error", rel},
                            {"tolerance", 0.01},
                            {"binding", mc_binding},
                            {"pass", !mc_binding || rel <= 0.01}};
    if (mc_binding) ok = ok && rel <= 0.01;

    ToricField f{Rational(1), Rational(7, 10)};
    double drift = max_separatrix_drift(f, 100, 1e-3, 1.0);
    check("separatrix_drift", drift, 1e-9);
    double cls = classify_agreement_fraction(f, static_cast<int>(samples), seed, 1e-6);
    j["classify_agreement"] = {{"fraction", cls}, {"pass", cls == 1.0}};
    ok = ok && cls == 1.0;

    j["all_pass"] = ok;
    emit(j);
    return ok ? 0 : 1;
}

int cmd_toric_product(const std::string& mu_str, const std::string& svg_path) {
    Rational mu = Rational::parse(mu_str);
    ToricField f{Rational(1), mu};
    auto [b1, b2] = basin_areas(f);
    Polytope rect = rectangle(f.area1, f.area2);

    Json j;
    j["mode"] = "product";
    j["mu"] = mu.str();
    j["rectangle_area"] = rect.area().str();
    j["basin_areas"] = Json::array({b1.str(), b2.str()});
    j["separatrix"] = "R2 = mu R1";
    emit(j);

    if (!svg_path.empty()) {
        Polytope lower{{{Rational(0), Rational(0)},
                        {f.area1, Rational(0)},
                        {f.area1, f.area2}}};
        Polytope upper{{{Rational(0), Rational(0)},
                        {f.area1, f.area2},
                        {Rational(0), f.area2}}};
        write_file(svg_path,
                   polytope_svg(rect, {lower, upper},
                                {{{Rational(0), Rational(0)}, {f.area1, f.area2}}}));
    }
    return 0;
}

int cmd_toric_cubic(const std::string& mu_str, const std::string& svg_path) {
    CubicReport r = cubic_pipeline(Rational::parse(mu_str));
    emit(to_json(r));
    if (!svg_path.empty())
        write_file(svg_path, polytope_svg(r.blowup_polytope));
    return 0;
}

int cmd_toric_polytope(const std::string& kind, const std::string& params_csv,
                       long chop_corner, const std::string& chop_mu,
                       const std::string& svg_path) {
    RationalVec params = parse_rational_list(params_csv);
    Polytope p;
    if (kind == "rectangle") {
        if (params.size() != 2)
            throw std::invalid_argument("rectangle expects --params w,h");
        p = rectangle(params[0], params[1]);
    } else if (kind == "ellipsoid_triangle") {
        if (params.size() != 2)
            throw std::invalid_argument("ellipsoid_triangle expects --params a,b");
        p = ellipsoid_triangle(params[0], params[1]);
    } else {
        throw std::invalid_argument("unknown polytope kind: " + kind);
    }
    if (!chop_mu.empty())
        p = chop(p, static_cast<size_t>(chop_corner), Rational::parse(chop_mu));
    emit(to_json(p));
    if (!svg_path.empty()) write_file(svg_path, polytope_svg(p));
    return 0;
}

int cmd_bubble(const std::string& target_csv, int max_parts, bool filters) {
    std::vector<long> t = parse_long_list(target_csv);
    if (t.empty()) throw std::invalid_argument("--target expects k,l1[,l2...]");
    BlowupClass target{t[0], std::vector<long>(t.begin() + 1, t.end())};

    auto decos = enumerate_decompositions(target, max_parts);
    Json arr = Json::array();
    for (auto& d : decos) {
        if (filters) apply_filters(d);
        arr.push_back(to_json(d));
    }
    Json j;
    j["target"] = target.str();
    j["max_parts"] = max_parts;
    j["count"] = decos.size();
    j["decompositions"] = std::move(arr);
    emit(j);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"singpack: singular polarizations, ellipsoid packings and "
                 "local-model verification for symplectic 4-manifolds"};
    app.require_subcommand(1);

    std::string manifold, weights, epsilon = "0";
    std::string a = "1", gamma = "0", A = "1", delta = "0", point = "0,0,0,0";
    std::string mu = "1/2", svg_path, kind = "rectangle", params = "1,1", chop_mu;
    std::string target = "3,2", mode = "product";
    double t = 0.0;
    long q = 10, samples = 1000, chop_corner = 0;
    int max_parts = 3;
    bool filters = false;

    auto* dec = app.add_subcommand("decompose", "barycentric rational decomposition and polarization synthesis");
    dec->add_option("manifold", manifold, "manifold JSON file")->required();
    dec->add_option("--q", q, "grid denominator (epsilon = 1/q)");

    auto* pack = app.add_subcommand("pack", "exact ellipsoid packing ledger");
    pack->add_option("manifold", manifold, "manifold JSON file")->required();
    pack->add_option("--weights", weights, "comma-separated rational weights a_i")->required();
    pack->add_option("--epsilon", epsilon, "uniform shrinkage (rational)");

    auto* flow = app.add_subcommand("flow", "local-model evaluation at a chart point");
    flow->add_option("--a", a, "fiber weight (rational)");
    flow->add_option("--gamma", gamma, "curvature coefficient (rational)");
    flow->add_option("--A", A, "base disc area (rational)");
    flow->add_option("--delta", delta, "base shrinkage (rational)");
    flow->add_option("--point", point, "chart point P,zeta,R,theta");
    flow->add_option("--t", t, "flow time");

    auto* ver = app.add_subcommand("verify", "run the local-model and toric invariant suites");
    ver->add_option("--samples", samples, "sample count per check");

    auto* tor = app.add_subcommand("toric", "moment-polytope pictures");
    tor->add_option("--mode", mode, "product | cubic | polytope");
    tor->add_option("--mu", mu, "parameter (rational)");
    tor->add_option("--kind", kind, "polytope kind (rectangle | ellipsoid_triangle)");
    tor->add_option("--params", params, "polytope parameters, comma-separated rationals");
    tor->add_option("--chop-corner", chop_corner, "corner index for a Delzant chop");
    tor->add_option("--chop-mu", chop_mu, "chop size (rational)");
    tor->add_option("--svg", svg_path, "write an SVG figure to this path");

    auto* bub = app.add_subcommand("bubble", "enumerate bubbling decompositions");
    bub->add_option("--target", target, "target class k,l1[,l2...]")->required();
    bub->add_option("--max-parts", max_parts, "maximum number of parts");
    bub->add_flag("--filters", filters, "apply adjunction/genericity filters");

    try {
        app.parse(argc, argv);
        if (dec->parsed()) return cmd_decompose(manifold, q);
        if (pack->parsed()) return cmd_pack(manifold, weights, epsilon);
        if (flow->parsed()) return cmd_flow(a, gamma, A, delta, point, t);
        if (ver->parsed()) return cmd_verify(samples);
        if (tor->parsed()) {
            if (mode == "product") return cmd_toric_product(mu, svg_path);
            if (mode == "cubic") return cmd_toric_cubic(mu, svg_path);
            if (mode == "polytope")
                return cmd_toric_polytope(kind, params, chop_corner, chop_mu, svg_path);
            throw std::invalid_argument("unknown toric mode: " + mode);
        }
        if (bub->parsed()) return cmd_bubble(target, max_parts, filters);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const invariant_error& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
