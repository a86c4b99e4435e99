// Command-line front end: exact equivariant Poincare series, hole
// decompositions and normalized Seiberg-Witten invariants of negative
// definite plumbing trees.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "plumbing/polyparts.hpp"
#include "plumbing/semigroups.hpp"

using namespace plumbing;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_digest(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json rvec_json(const RVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

json ivec_json(const IVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

json poly_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["coeff"] = c.str();
        term["exponent"] = rvec_json(e);
        out.push_back(term);
    }
    return out;
}

json form_json(const RationalSeriesForm& form) {
    json out;
    out["offset"] = rvec_json(form.offset);
    json gens = json::array();
    for (const auto& v : form.generators) gens.push_back(ivec_json(v));
    out["generators"] = gens;
    out["strategy"] = form.strategy;
    json terms = json::array();
    for (const auto& t : form.terms) {
        json jt;
        jt["numerator"] = poly_json(t.numerator);
        json dens = json::array();
        for (const auto& d : t.denominators) dens.push_back(ivec_json(d));
        jt["denominators"] = dens;
        terms.push_back(jt);
    }
    out["terms"] = terms;
    return out;
}

struct CommonOpts {
    std::string graph_path;
    std::string class_spec;
    std::string generators = "small";
    std::string lift = "canonical";
    long long degree = 24;
    bool oracle = false;
    std::string format = "json";
};

struct Resolved {
    Model model;
    HClass h;
    ReducedLift lift;
    json manifest;
};

IVec parse_int_vector(const std::string& s) {
    IVec out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(BigInt::from_string(item));
    }
    return out;
}

std::vector<IVec> load_pinned_generators(const std::string& path, int nn) {
    json j = json::parse(read_file(path));
    if (!j.is_array()) throw DomainError("pinned generator file must hold a JSON array of integer arrays");
    std::vector<IVec> out;
    for (const auto& row : j) {
        IVec v;
        for (const auto& x : row) {
            if (x.is_number_integer()) v.push_back(BigInt(x.get<long long>()));
            else v.push_back(BigInt::from_string(x.get<std::string>()));
        }
        out.push_back(std::move(v));
    }
    if (static_cast<int>(out.size()) != nn) throw DomainError("expected one pinned generator per node");
    return out;
}

Resolved resolve(const CommonOpts& opt, const std::string& subcommand) {
    std::string text = read_file(opt.graph_path);
    PlumbingGraph g = parse_plumbing(text);
    Resolved r{build_model(g), {}, {}, json::object()};
    const Model& m = r.model;

    r.h = m.H->zero();
    if (!opt.class_spec.empty()) {
        IVec coords = parse_int_vector(opt.class_spec);
        if (static_cast<int>(coords.size()) != m.g.n())
            throw DomainError("--class expects one E*-coordinate per vertex (" +
                              std::to_string(m.g.n()) + " values)");
        r.h = m.H->class_of(coords);
    }
    if (opt.lift == "canonical") {
        r.lift = canonical_lift(m, r.h);
    } else if (opt.lift.rfind("pinned:", 0) == 0) {
        IVec coords = parse_int_vector(opt.lift.substr(7));
        if (static_cast<int>(coords.size()) != m.g.n())
            throw DomainError("--lift pinned: expects one E*-coordinate per vertex");
        r.lift = reduced_transform(m, coords);
        if (!opt.class_spec.empty() && !(lift_class(m, r.lift) == r.h))
            throw DomainError("pinned lift does not represent the requested class");
        r.h = lift_class(m, r.lift);
    } else {
        throw CLI::ValidationError("--lift", "expected 'canonical' or 'pinned:<vector>'");
    }

    r.manifest["input_digest"] = fnv1a_digest(text);
    r.manifest["subcommand"] = subcommand;
    r.manifest["class"] = r.h.str();
    r.manifest["lift"] = opt.lift;
    r.manifest["generator_strategy"] = opt.generators;
    r.manifest["degree"] = opt.degree;
    r.manifest["version"] = kVersion;
    return r;
}

GeneratorSet resolve_generators(const CommonOpts& opt, const Model& m, const ReducedLift& a) {
    if (opt.generators.rfind("pinned:", 0) == 0) {
        auto vecs = load_pinned_generators(opt.generators.substr(7), m.num_nodes());
        return generators_for_rational_form(m, a, "pinned", vecs);
    }
    if (opt.generators == "proof" || opt.generators == "small")
        return generators_for_rational_form(m, a, opt.generators);
    throw CLI::ValidationError("--generators", "expected 'proof', 'small' or 'pinned:<file>'");
}

void emit(const json& out, const CommonOpts& opt, const std::string& summary) {
    if (opt.format == "text") std::cout << summary;
    else std::cout << out.dump(2) << "\n";
    std::cerr << summary;
}

json classification_json(const Model& m) {
    json out;
    json nodes = json::array();
    for (int n : m.cls.nodes) nodes.push_back(m.g.ids[n]);
    out["nodes"] = nodes;
    json ends = json::array();
    for (int u : m.cls.ends) ends.push_back(m.g.ids[u]);
    out["ends"] = ends;
    out["delta_nN"] = m.cls.delta_nN;
    out["delta_nE"] = m.cls.delta_nE;
    json nhat = json::array();
    for (int n : m.cls.nhat) nhat.push_back(m.g.ids[m.cls.nodes[n]]);
    out["nhat"] = nhat;
    json legs = json::array();
    for (const auto& l : m.legs) {
        json jl;
        jl["node"] = m.g.ids[m.cls.nodes[l.node_pos]];
        jl["end"] = m.g.ids[l.end];
        jl["alpha"] = l.alpha.str();
        jl["omega"] = l.omega.str();
        jl["omega_tilde"] = l.omega_tilde.str();
        legs.push_back(jl);
    }
    out["legs"] = legs;
    json chains = json::array();
    for (const auto& ch : m.chains) {
        const auto& p = m.cls.pairs[ch.pair_index];
        json jc;
        jc["from"] = m.g.ids[m.cls.nodes[p.lo]];
        jc["to"] = m.g.ids[m.cls.nodes[p.hi]];
        jc["alpha"] = ch.alpha.str();
        jc["omega"] = ch.omega_lo_hi.str();
        jc["omega_reverse"] = ch.omega_hi_lo.str();
        jc["tau"] = ch.tau.str();
        chains.push_back(jc);
    }
    out["chains"] = chains;
    return out;
}

int run_validate(const CommonOpts& opt) {
    std::string text = read_file(opt.graph_path);
    PlumbingGraph g = parse_plumbing(text);
    validate_tree(g);
    IntersectionData d = intersection_data(g);
    json out;
    out["manifest"] = {{"input_digest", fnv1a_digest(text)}, {"subcommand", "validate"}, {"version", kVersion}};
    out["valid"] = true;
    out["vertices"] = g.n();
    out["edges"] = g.edges.size();
    out["det"] = d.det_gamma.str();
    json warn = json::array();
    for (const auto& w : minimality_warnings(g)) warn.push_back(w);
    out["warnings"] = warn;
    std::ostringstream sum;
    sum << "valid negative definite plumbing tree: " << g.n() << " vertices, det = " << d.det_gamma.str()
        << ", " << warn.size() << " warning(s)\n";
    for (const auto& w : minimality_warnings(g)) sum << "  warning: " << w << "\n";
    emit(out, opt, sum.str());
    return 0;
}

int run_info(const CommonOpts& opt) {
    Resolved r = resolve(opt, "info");
    const Model& m = r.model;
    json out;
    out["manifest"] = r.manifest;
    out["det"] = m.lat.det_gamma.str();
    out["order_H"] = m.H->order().str();
    json factors = json::array();
    for (const auto& f : m.H->factors()) factors.push_back(f.str());
    out["invariant_factors"] = factors;
    out["classification"] = classification_json(m);
    json e = json::array();
    for (const auto& x : m.orb.e) e.push_back(x.str());
    out["orbifold_euler_numbers"] = e;
    out["canonical_class_e_coords"] = rvec_json(m.K);
    std::ostringstream sum;
    sum << "det = " << m.lat.det_gamma.str() << ", |H| = " << m.H->order().str() << ", invariant factors (";
    for (size_t i = 0; i < m.H->factors().size(); ++i)
        sum << (i ? "," : "") << m.H->factors()[i].str();
    sum << "), " << m.num_nodes() << " node(s)\n";
    emit(out, opt, sum.str());
    return 0;
}

int run_series(const CommonOpts& opt, bool alternative) {
    Resolved r = resolve(opt, alternative ? "series-alternative" : "series");
    const Model& m = r.model;
    RVec cap = uniform_cap(m, opt.degree);
    LaurentPoly z = alternative ? expand_Zh_alternative(m, r.lift, cap) : expand_Zh_direct(m, r.lift, cap);
    json out;
    out["manifest"] = r.manifest;
    out["class"] = r.h.str();
    out["c"] = rvec_json(r.lift.c);
    out["terms"] = poly_json(z);
    std::ostringstream sum;
    sum << "Z_h truncated to degree " << opt.degree << ": " << z.size() << " terms, class " << r.h.str()
        << "\n";
    emit(out, opt, sum.str());
    return 0;
}

int run_rational(const CommonOpts& opt) {
    Resolved r = resolve(opt, "rational");
    const Model& m = r.model;
    GeneratorSet g = resolve_generators(opt, m, r.lift);
    RationalSeriesForm form = rational_form(m, r.lift, g);
    json out;
    out["manifest"] = r.manifest;
    out["class"] = r.h.str();
    out["form"] = form_json(form);
    std::ostringstream sum;
    sum << "rational form of Z_h: " << form.terms.size() << " term(s), strategy " << g.strategy << "\n";
    emit(out, opt, sum.str());
    return 0;
}

int run_holes(const CommonOpts& opt) {
    Resolved r = resolve(opt, "holes");
    const Model& m = r.model;
    GeneratorSet g = resolve_generators(opt, m, r.lift);
    json out;
    out["manifest"] = r.manifest;
    out["class"] = r.h.str();
    json gens = json::array();
    for (const auto& v : g.v) gens.push_back(ivec_json(v));
    out["generators"] = gens;
    auto pts_json = [](const std::vector<IVec>& pts) {
        json a = json::array();
        for (const auto& p : pts) a.push_back(ivec_json(p));
        return a;
    };
    out["box"] = pts_json(box_points(m, g, r.lift));
    const int nn = m.num_nodes();
    json hole_sets = json::array();
    for (long long mask = 0; mask < (1ll << nn); ++mask) {
        std::vector<int> I;
        json inames = json::array();
        for (int n = 0; n < nn; ++n)
            if (mask & (1ll << n)) {
                I.push_back(n);
                inames.push_back(m.g.ids[m.cls.nodes[n]]);
            }
        json entry;
        entry["I"] = inames;
        entry["points"] = pts_json(hole_set(m, g, r.lift, I));
        hole_sets.push_back(entry);
    }
    out["hole_sets"] = hole_sets;
    json graded = json::array();
    std::vector<char> in_nhat(nn, 0);
    for (int n : m.cls.nhat) in_nhat[n] = 1;
    for (const auto& k : khat_range(m, 2)) {
        for (long long mask = 0; mask < (1ll << nn); ++mask) {
            bool ok = true;
            std::vector<int> I;
            json inames = json::array();
            for (int n = 0; n < nn; ++n) {
                if (mask & (1ll << n)) {
                    I.push_back(n);
                    inames.push_back(m.g.ids[m.cls.nodes[n]]);
                } else if (in_nhat[n]) {
                    ok = false;
                }
            }
            if (!ok) continue;
            json entry;
            entry["k"] = ivec_json(k);
            entry["I"] = inames;
            entry["points"] = pts_json(graded_holes(m, g, r.lift, k, I));
            graded.push_back(entry);
        }
    }
    out["graded"] = graded;
    std::ostringstream sum;
    sum << "box: " << out["box"].size() << " point(s); " << hole_sets.size() << " hole set(s); "
        << graded.size() << " graded set(s)\n";
    emit(out, opt, sum.str());
    return 0;
}

int run_polypart(const CommonOpts& opt) {
    Resolved r = resolve(opt, "polypart");
    const Model& m = r.model;
    GeneratorSet g = resolve_generators(opt, m, r.lift);
    SWResult res = assemble_P_h(m, r.lift, g);
    json out;
    out["manifest"] = r.manifest;
    out["class"] = r.h.str();
    out["P"] = poly_json(res.P);
    out["sw_norm"] = res.sw_norm.str();
    std::ostringstream sum;
    sum << "P_h has " << res.P.size() << " term(s); sw_norm = " << res.sw_norm.str_short() << "\n";
    if (opt.oracle) {
        Rational o0 = oracle_sw_counting(m, r.h, 0);
        Rational o1 = oracle_sw_counting(m, r.h, 1);
        out["oracle"] = o0.str();
        out["oracle_second_point"] = o1.str();
        out["difference"] = (res.sw_norm - o0).str();
        sum << "oracle = " << o0.str_short() << ", difference = " << (res.sw_norm - o0).str_short() << "\n";
    }
    emit(out, opt, sum.str());
    return 0;
}

int run_sw(const CommonOpts& opt) {
    CommonOpts local = opt;
    local.class_spec.clear();
    Resolved r = resolve(local, "sw");
    r.manifest["class"] = "all";
    const Model& m = r.model;
    json classes = json::array();
    std::ostringstream sum;
    for (const auto& h : m.H->all_classes()) {
        ReducedLift a = canonical_lift(m, h);
        GeneratorSet g = resolve_generators(opt, m, a);
        SWResult res = assemble_P_h(m, a, g);
        json entry;
        entry["class"] = h.str();
        entry["sw_norm"] = res.sw_norm.str();
        entry["P_terms"] = res.P.size();
        if (opt.oracle) {
            Rational o = oracle_sw_counting(m, h, 0);
            entry["oracle"] = o.str();
            entry["difference"] = (res.sw_norm - o).str();
        }
        classes.push_back(entry);
        sum << "class " << h.str() << ": sw_norm = " << res.sw_norm.str_short();
        if (opt.oracle) sum << " (oracle " << oracle_sw_counting(m, h, 0).str_short() << ")";
        sum << "\n";
    }
    json out;
    out["manifest"] = r.manifest;
    out["classes"] = classes;
    emit(out, opt, sum.str());
    return 0;
}

int run_semigroup(const std::string& seifert, const std::string& pair, const std::string& curve,
                  const CommonOpts& opt) {
    CurveInvariants ci;
    NumericalSemigroup sg;
    json out;
    bool have_curve = false;
    std::string digest;
    if (!seifert.empty()) {
        std::vector<long long> alphas;
        for (const auto& x : parse_int_vector(seifert)) alphas.push_back(x.to_ll());
        sg = seifert_semigroup(alphas);
        SeifertSolution sol = seifert_diophantine(alphas);
        out["b0"] = sol.b0;
        out["omegas"] = sol.omegas;
        out["kind"] = "seifert";
        digest = fnv1a_digest(seifert);
    } else if (!pair.empty()) {
        auto v = parse_int_vector(pair);
        if (v.size() != 2) throw DomainError("--pair expects 'p,a'");
        ci = curve_from_pair(v[0].to_ll(), v[1].to_ll());
        sg = ci.sg;
        have_curve = true;
        out["kind"] = "pair";
        digest = fnv1a_digest(pair);
    } else if (!curve.empty()) {
        std::string text = read_file(curve);
        ci = curve_from_graph(parse_plumbing(text));
        sg = ci.sg;
        have_curve = true;
        out["kind"] = "curve";
        digest = fnv1a_digest(text);
    } else {
        throw CLI::ValidationError("semigroup", "one of --seifert, --pair, --curve is required");
    }
    out["manifest"] = {{"input_digest", digest}, {"subcommand", "semigroup"}, {"version", kVersion}};
    out["min_generators"] = sg.min_generators();
    out["gaps"] = sg.gaps();
    out["genus"] = sg.genus();
    out["frobenius"] = sg.frobenius();
    std::ostringstream sum;
    sum << "semigroup with genus " << sg.genus() << ", Frobenius number " << sg.frobenius()
        << ", minimal generators";
    for (long long g : sg.min_generators()) sum << " " << g;
    sum << "\n";
    if (have_curve) {
        out["delta"] = ci.delta;
        out["alexander"] = ci.alexander;
        sum << "delta = " << ci.delta << ", deg Delta = " << ci.alexander.size() - 1 << "\n";
    }
    emit(out, opt, sum.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant Poincare series and Seiberg-Witten invariants of plumbed 3-manifolds"};
    app.require_subcommand(1);

    CommonOpts opt;
    auto add_common = [&](CLI::App* sub, bool with_class = true) {
        sub->add_option("graph", opt.graph_path, "plumbing graph file (JSON or text format)")->required();
        sub->add_option("--format", opt.format, "output format: json|text")->default_val("json");
        if (with_class) {
            sub->add_option("--class", opt.class_spec,
                            "comma-separated E*-coordinates of any representative of the class");
            sub->add_option("--lift", opt.lift, "canonical | pinned:<comma E*-coordinates>")
                ->default_val("canonical");
            sub->add_option("--generators", opt.generators, "proof | small | pinned:<json file>")
                ->default_val("small");
            sub->add_option("--degree", opt.degree, "per-node exponent cap for expansions")
                ->default_val(24);
        }
    };

    auto* c_validate = app.add_subcommand("validate", "parse and validate a plumbing graph");
    add_common(c_validate, false);
    auto* c_info = app.add_subcommand("info", "graph, lattice and Seifert invariants");
    add_common(c_info, false);
    auto* c_series = app.add_subcommand("series", "truncated expansion of Z_h");
    add_common(c_series);
    bool alt = false;
    c_series->add_flag("--alternative", alt, "use the binomial-sum route");
    auto* c_rational = app.add_subcommand("rational", "closed rational form of Z_h");
    add_common(c_rational);
    auto* c_holes = app.add_subcommand("holes", "box points, hole sets and graded hole sets");
    add_common(c_holes);
    auto* c_polypart = app.add_subcommand("polypart", "polynomial part P_h and sw_norm");
    add_common(c_polypart);
    c_polypart->add_flag("--oracle", opt.oracle, "also run the counting-function oracle");
    auto* c_sw = app.add_subcommand("sw", "sw_norm for every class of H");
    add_common(c_sw);
    c_sw->add_flag("--oracle", opt.oracle, "also run the counting-function oracle");
    auto* c_semigroup = app.add_subcommand("semigroup", "numerical semigroups of section-7 type");
    std::string sg_seifert, sg_pair, sg_curve;
    c_semigroup->add_option("--seifert", sg_seifert, "pairwise coprime multiplicities, e.g. 2,3,5");
    c_semigroup->add_option("--pair", sg_pair, "one linking pair p,a");
    c_semigroup->add_option("--curve", sg_curve, "arrowed plumbing graph file");
    c_semigroup->add_option("--format", opt.format, "output format: json|text")->default_val("json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_validate->parsed()) return run_validate(opt);
        if (c_info->parsed()) return run_info(opt);
        if (c_series->parsed()) return run_series(opt, alt);
        if (c_rational->parsed()) return run_rational(opt);
        if (c_holes->parsed()) return run_holes(opt);
        if (c_polypart->parsed()) return run_polypart(opt);
        if (c_sw->parsed()) return run_sw(opt);
        if (c_semigroup->parsed()) return run_semigroup(sg_seifert, sg_pair, sg_curve, opt);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
