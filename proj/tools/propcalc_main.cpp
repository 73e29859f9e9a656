#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "propcalc/error.hpp"
#include "propcalc/evaluation.hpp"
#include "propcalc/fixtures.hpp"
#include "propcalc/json_io.hpp"
#include "propcalc/lifting.hpp"
#include "propcalc/path_object.hpp"
#include "propcalc/pdiagram.hpp"

namespace {

using namespace propcalc;

// Exit codes: 0 every check passed, 1 a check failed, 2 bad input.
constexpr int kPass = 0;
constexpr int kCheckFail = 1;
constexpr int kInputError = 2;

struct Options {
    std::string out;
    bool canonical = false;
};

struct RunReport {
    Json j = Json::object();
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit RunReport(const std::string& command) {
        j["command"] = command;
        j["inputs"] = Json::object();
    }
    void input(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error(ErrorKind::ParseError, "cannot open file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        // FNV-1a 64-bit content hash, hex.
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char c : ss.str()) h = (h ^ c) * 1099511628211ull;
        std::ostringstream hex;
        hex << std::hex << h;
        j["inputs"][path] = hex.str();
    }
    int finish(const Options& opt, bool passed) {
        j["ok"] = passed;
        if (!opt.canonical) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            j["timing_ms"] = ms;
        }
        std::string text = dump_json(j, opt.canonical);
        if (opt.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(opt.out);
            if (!out) throw Error(ErrorKind::ParseError, "cannot write: " + opt.out);
            out << text;
        }
        return passed ? kPass : kCheckFail;
    }
};

BiarityBound parse_bound(const std::string& s, BiarityBound fallback) {
    if (s.empty()) return fallback;
    BiarityBound b;
    b.total = -1;
    size_t comma = s.find(',');
    try {
        b.A = std::stoi(s.substr(0, comma));
        if (comma != std::string::npos) b.total = std::stoi(s.substr(comma + 1));
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "--bound: expected \"A\" or \"A,total\", got " + s);
    }
    return b;
}

// A prop re-truncated to a sub-bound of its own; used to honor --bound.
class BoundedView : public Prop {
public:
    BoundedView(PropPtr inner, BiarityBound bound) : Prop(bound), p_(std::move(inner)) {}
    const ChainComplex& component(int m, int n) const override { return p_->component(m, n); }
    SparseVec vcomp_basis(int m, int k, int n, int a, int b) const override {
        return p_->vcomp_basis(m, k, n, a, b);
    }
    SparseVec hcomp_basis(int m1, int n1, int m2, int n2, int a, int b) const override {
        return p_->hcomp_basis(m1, n1, m2, n2, a, b);
    }
    SparseVec unit(int n) const override { return p_->unit(n); }
    SparseMatrix right_action(int m, int n, const Perm& s) const override {
        return p_->right_action(m, n, s);
    }
    SparseMatrix left_action(int m, int n, const Perm& t) const override {
        return p_->left_action(m, n, t);
    }

private:
    PropPtr p_;
};

PropPtr load_prop(const std::string& path, RunReport& rep, const std::string& bound_arg) {
    rep.input(path);
    PropPtr p = prop_from_json(load_json_file(path));
    BiarityBound b = parse_bound(bound_arg, p->bound());
    if (b.A > p->bound().A || (p->bound().total >= 0 && (b.total < 0 || b.total > p->bound().total)))
        throw Error(ErrorKind::ParseError, "--bound exceeds the bound stored in " + path);
    if (b.A == p->bound().A && b.total == p->bound().total) return p;
    return std::make_shared<BoundedView>(p, b);
}

Json violations_json(const CheckReport& r) { return report_to_json(r); }

Json pi_report_json(const PiReport& pr) {
    Json comps = Json::array();
    for (const PiComponentReport& c : pr.components) {
        Json hs = Json::object(), ht = Json::object();
        for (const auto& [d, k] : c.homology_source) hs[std::to_string(d)] = k;
        for (const auto& [d, k] : c.homology_target) ht[std::to_string(d)] = k;
        comps.push_back(Json{{"component", {c.at.m, c.at.n}},
                             {"surjective", c.surjective},
                             {"quasi_iso", c.quasi_iso},
                             {"homology_source", hs},
                             {"homology_target", ht}});
    }
    return comps;
}

int cmd_validate(const std::string& path, const Options& opt) {
    RunReport rep("validate");
    rep.input(path);
    Json j = load_json_file(path);
    std::string kind;
    bool valid = true;
    Json detail = Json::object();
    try {
        if (j.contains("units")) {
            kind = "prop";
            auto p = prop_from_json(j);
            CheckReport r = check_prop_axioms(*p);
            detail = violations_json(r);
            valid = r.ok();
            if (j.contains("presentation")) {
                QuasiFreePresentation pres = presentation_from_json(j.at("presentation"));
                CheckReport pv = pres.verify(*p, presentation_values_from_json(
                                                     j.at("presentation"), *p));
                detail["presentation"] = violations_json(pv);
                valid = valid && pv.ok();
            }
        } else if (j.contains("degrees")) {
            kind = "complex";
            complex_from_json(j);  // validates shapes and d² = 0
        } else if (j.contains("source") && j.contains("target")) {
            kind = "map";
            ChainMap f = chain_map_from_json(j);
            valid = f.commutes_with_d();
            if (!valid) detail["error"] = "does not commute with the differentials";
        } else if (j.contains("generators") && j.contains("words")) {
            kind = "presentation";
            presentation_from_json(j);
        } else if (j.contains("carrier") && j.contains("action")) {
            kind = "algebra";
            algebra_input_from_json(j);
        } else if (j.contains("components")) {
            kind = "biobject";
            biobject_from_json(j);
        } else {
            throw Error(ErrorKind::ParseError, "unrecognized input kind");
        }
    } catch (const Error& e) {
        kind = kind.empty() ? "unknown" : kind;
        detail["error"] = e.what();
        valid = false;
    }
    rep.j["kind"] = kind;
    rep.j["detail"] = detail;
    rep.j["valid"] = valid;
    int rc = rep.finish(opt, valid);
    return rc == kCheckFail ? kInputError : rc;  // invalid input exits 2
}

int cmd_homology(const std::string& path, const Options& opt) {
    RunReport rep("homology");
    rep.input(path);
    ChainComplex cx = complex_from_json(load_json_file(path));
    ChainComplex::Homology h = cx.homology();
    Json dims = Json::object();
    for (const auto& [deg, k] : h.dims) dims[std::to_string(deg)] = k;
    rep.j["homology"] = dims;
    rep.j["acyclic"] = cx.is_acyclic();
    return rep.finish(opt, true);
}

int cmd_path_object(const std::string& path, const Options& opt) {
    RunReport rep("path-object");
    rep.input(path);
    ChainComplex x = complex_from_json(load_json_file(path));
    bool okay = true;
    try {
        PathFactorization f = path_object(x);
        rep.j["verdicts"] = Json{{"diagonal_factors", f.diagonal_factors},
                                 {"s_injective", f.s_injective},
                                 {"s_quasi_iso", f.s_quasi_iso},
                                 {"d01_surjective", f.d01_surjective},
                                 {"d0_quasi_iso", f.d0_quasi_iso},
                                 {"d1_quasi_iso", f.d1_quasi_iso}};
        rep.j["factorization"] = Json{{"s", chain_map_to_json(f.s)},
                                      {"d0", chain_map_to_json(f.d0)},
                                      {"d1", chain_map_to_json(f.d1)}};
        okay = f.ok();
    } catch (const Error& e) {
        rep.j["error"] = e.what();
        okay = false;
    }
    return rep.finish(opt, okay);
}

int cmd_build(const std::string& which, const std::string& path, const std::string& bound_arg,
              const Options& opt) {
    RunReport rep("build-" + which);
    PropPtr p = load_prop(path, rep, bound_arg);
    if (which == "zp") {
        auto end_z = std::make_shared<EndProp>(make_Z().z, p->bound());
        TensorProp zp(end_z, p, p->bound());
        rep.j["prop"] = prop_to_json(zp);
    } else {
        PDiagramSuite suite = build_pdiagram_suite(p);
        rep.j["prop"] = prop_to_json(which == "calzp" ? static_cast<const Prop&>(*suite.end_calzp)
                                                      : *suite.end_calyp);
    }
    Json dims = Json::object();
    const Json& comps = rep.j["prop"]["components"];
    for (auto it = comps.begin(); it != comps.end(); ++it) {
        int d = 0;
        for (const auto& [deg, labels] : it.value().at("degrees").items())
            d += static_cast<int>(labels.size());
        dims[it.key()] = d;
    }
    rep.j["dimensions"] = dims;
    return rep.finish(opt, true);
}

int cmd_check_pi(const std::string& path, const std::string& bound_arg, const Options& opt) {
    RunReport rep("check-pi");
    PropPtr p = load_prop(path, rep, "");
    PDiagramSuite suite = build_pdiagram_suite(p);
    BiarityBound cb = parse_bound(bound_arg, p->bound());
    PiReport pr = check_pi_acyclic_fibration(suite, cb);
    rep.j["components"] = pi_report_json(pr);
    return rep.finish(opt, pr.ok());
}

int cmd_pushout_product(int m, int n, const Options& opt) {
    RunReport rep("pushout-product");
    Json out = Json::array();
    bool okay = true;
    auto run = [&](int mm, int nn) {
        PushoutProductWitness w = pushout_product_witness(mm, nn);
        okay = okay && w.ok();
        out.push_back(Json{{"component", {mm, nn}},
                           {"f_injective", w.f_injective},
                           {"f_quasi_iso", w.f_quasi_iso},
                           {"g_surjective", w.g_surjective},
                           {"induced_surjective", w.induced_surjective},
                           {"induced_quasi_iso", w.induced_quasi_iso}});
    };
    if (m > 0 && n > 0) {
        run(m, n);
    } else {
        for (int mm = 1; mm <= 2; ++mm)
            for (int nn = 1; nn <= 2; ++nn) run(mm, nn);
    }
    rep.j["witnesses"] = out;
    return rep.finish(opt, okay);
}

// Shared by cmd_lift and cmd_pipeline.
struct LiftOutcome {
    PDiagramSuite suite;
    LiftResult result;
    QuasiFreePresentation pres;
};

LiftOutcome run_lift(const PropPtr& p, const Json& prop_json, const std::string& pres_path,
                     RunReport& rep) {
    Json pres_json;
    if (!pres_path.empty()) {
        rep.input(pres_path);
        pres_json = load_json_file(pres_path);
    } else if (prop_json.contains("presentation")) {
        pres_json = prop_json.at("presentation");
    } else {
        throw Error(ErrorKind::ParseError,
                    "no presentation: embed one in the prop file or pass --presentation");
    }
    LiftOutcome out{build_pdiagram_suite(p), {}, presentation_from_json(pres_json)};
    LiftProblem problem;
    problem.presentation = &out.pres;
    problem.gen_values_in_p = presentation_values_from_json(pres_json, *p);
    problem.p = p;
    problem.q = out.suite.pi;
    problem.b = PropMorphism::identity(p);
    out.result = lift(problem);
    return out;
}

Json lift_to_json(const LiftOutcome& lo) {
    Json gens = Json::array();
    for (size_t i = 0; i < lo.result.gen_values.size(); ++i) {
        const PropElement& v = lo.result.gen_values[i];
        Json val = Json::object();
        for (const Term& t : v.value) val[std::to_string(t.idx)] = rational_to_string(t.coeff);
        gens.push_back(Json{{"label", lo.pres.generators[i].label},
                            {"at", {v.at.m, v.at.n}},
                            {"value", val}});
    }
    return Json{{"target", "YP"}, {"generators", gens},
                {"report", report_to_json(lo.result.report)}};
}

int cmd_lift(const std::string& prop_path, const std::string& pres_path,
             const std::string& target, const Options& opt) {
    RunReport rep("lift");
    if (target != "YP")
        throw Error(ErrorKind::ParseError, "--target: only \"YP\" is supported");
    PropPtr p = load_prop(prop_path, rep, "");
    Json pj = load_json_file(prop_path);
    LiftOutcome lo = run_lift(p, pj, pres_path, rep);
    rep.j["lift"] = lift_to_json(lo);
    return rep.finish(opt, lo.result.report.ok());
}

Json zigzag_to_json(const Zigzag& z) {
    return Json{{"s", chain_map_to_json(z.s)},
                {"d0", chain_map_to_json(z.d0)},
                {"d1", chain_map_to_json(z.d1)},
                {"report", report_to_json(z.report)}};
}

int cmd_zigzag(const std::string& prop_path, const std::string& lift_path,
               const std::string& algebra_path, const Options& opt) {
    RunReport rep("zigzag");
    PropPtr p = load_prop(prop_path, rep, "");
    Json pj = load_json_file(prop_path);
    if (!pj.contains("presentation"))
        throw Error(ErrorKind::ParseError, "zigzag: the prop file must embed a presentation");
    QuasiFreePresentation pres = presentation_from_json(pj.at("presentation"));

    rep.input(lift_path);
    Json lj = load_json_file(lift_path);
    rep.input(algebra_path);
    AlgebraInput ain = algebra_input_from_json(load_json_file(algebra_path));

    PDiagramSuite suite = build_pdiagram_suite(p);
    std::vector<PropElement> gen_values;
    for (const Json& gj : lj.at("lift").at("generators")) {
        Biarity at{gj.at("at")[0].get<int>(), gj.at("at")[1].get<int>()};
        SparseVec v;
        for (const auto& [idx, c] : gj.at("value").items())
            v.push_back({std::stoi(idx), rational_from_string(c.get<std::string>())});
        sv_normalize(v);
        gen_values.push_back({at, std::move(v)});
    }
    PropMorphism l = extend_by_words(p, pres, suite.end_calyp, gen_values);
    PAlgebra alg = resolve_algebra(p, ain, p->bound());
    Zigzag z = functorial_path_action(suite, l, alg.carrier, alg.action);
    rep.j["zigzag"] = zigzag_to_json(z);
    return rep.finish(opt, z.report.ok());
}

int cmd_pipeline(const std::string& prop_path, const std::string& algebra_path,
                 const std::string& bound_arg, const Options& opt) {
    RunReport rep("pipeline");
    PropPtr p = load_prop(prop_path, rep, bound_arg);
    Json pj = load_json_file(prop_path);
    rep.input(algebra_path);
    AlgebraInput ain = algebra_input_from_json(load_json_file(algebra_path));

    bool okay = true;
    Json stages = Json::object();

    CheckReport axioms = check_prop_axioms(*p);
    stages["axioms"] = violations_json(axioms);
    okay = okay && axioms.ok();

    LiftOutcome lo = run_lift(p, pj, "", rep);
    Json dims = Json::object();
    for (Biarity b : p->bound().components()) {
        std::string key = std::to_string(b.m) + "," + std::to_string(b.n);
        dims[key] = Json{{"end_zp", lo.suite.end_zp->dim(b.m, b.n)},
                         {"end_calzp", lo.suite.end_calzp->dim(b.m, b.n)},
                         {"end_calyp", lo.suite.end_calyp->dim(b.m, b.n)}};
    }
    stages["build"] = dims;

    // π is checked on components with m+n ≤ 4; larger hom complexes outgrow
    // desk scale.
    BiarityBound pi_bound = p->bound();
    if (pi_bound.total < 0 || pi_bound.total > 4) pi_bound.total = 4;
    PiReport pr = check_pi_acyclic_fibration(lo.suite, pi_bound);
    stages["check_pi"] = Json{{"ok", pr.ok()}, {"components", pi_report_json(pr)}};
    okay = okay && pr.ok();

    stages["lift"] = lift_to_json(lo);
    okay = okay && lo.result.report.ok();

    PAlgebra alg = resolve_algebra(p, ain, p->bound());
    CheckReport algr = check_algebra(alg);
    stages["algebra"] = violations_json(algr);
    okay = okay && algr.ok();

    Zigzag z = functorial_path_action(lo.suite, lo.result.lift, alg.carrier, alg.action);
    stages["zigzag"] = Json{{"report", report_to_json(z.report)}};
    okay = okay && z.report.ok();

    rep.j["stages"] = stages;
    return rep.finish(opt, okay);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"propcalc: exact path-object machinery for props over Q"};
    app.require_subcommand(1);

    Options opt;
    std::string input, prop_path, pres_path, lift_path, algebra_path, bound_arg;
    std::string target = "YP";
    int m = 0, n = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out, "Write the JSON report to this file");
        sub->add_flag("--canonical", opt.canonical,
                      "Canonical output: sorted keys, compact, no timing");
    };

    auto* v = app.add_subcommand("validate", "Parse and check any input file");
    v->add_option("--input,input", input)->required();
    add_common(v);
    auto* h = app.add_subcommand("homology", "Homology dimensions of a complex");
    h->add_option("--complex", input)->required();
    add_common(h);
    auto* po = app.add_subcommand("path-object", "Factor the diagonal through Z⊗X");
    po->add_option("--complex", input)->required();
    add_common(po);
    auto* bz = app.add_subcommand("build-zp", "Build End_{Z(P)}");
    bz->add_option("--prop", prop_path)->required();
    bz->add_option("--bound", bound_arg);
    add_common(bz);
    auto* bc = app.add_subcommand("build-calzp", "Build End of the two-sink diagram of Z(P)");
    bc->add_option("--prop", prop_path)->required();
    bc->add_option("--bound", bound_arg);
    add_common(bc);
    auto* by = app.add_subcommand("build-yp", "Build End of the full path diagram of P");
    by->add_option("--prop", prop_path)->required();
    by->add_option("--bound", bound_arg);
    add_common(by);
    auto* cp = app.add_subcommand("check-pi", "Check π is an acyclic fibration");
    cp->add_option("--prop", prop_path)->required();
    cp->add_option("--bound", bound_arg);
    add_common(cp);
    auto* pp = app.add_subcommand("pushout-product", "Dual pushout-product witness");
    pp->add_option("--m", m);
    pp->add_option("--n", n);
    add_common(pp);
    auto* lf = app.add_subcommand("lift", "Lift the identity of P through π");
    lf->add_option("--prop", prop_path)->required();
    lf->add_option("--presentation", pres_path);
    lf->add_option("--target", target);
    add_common(lf);
    auto* zz = app.add_subcommand("zigzag", "Induced zigzag of P-actions on an algebra");
    zz->add_option("--prop", prop_path)->required();
    zz->add_option("--lift", lift_path)->required();
    zz->add_option("--algebra", algebra_path)->required();
    add_common(zz);
    auto* pl = app.add_subcommand("pipeline", "Axioms → builds → π → lift → zigzag");
    pl->add_option("--prop", prop_path)->required();
    pl->add_option("--algebra", algebra_path)->required();
    pl->add_option("--bound", bound_arg);
    add_common(pl);

    CLI11_PARSE(app, argc, argv);

    try {
        if (v->parsed()) return cmd_validate(input, opt);
        if (h->parsed()) return cmd_homology(input, opt);
        if (po->parsed()) return cmd_path_object(input, opt);
        if (bz->parsed()) return cmd_build("zp", prop_path, bound_arg, opt);
        if (bc->parsed()) return cmd_build("calzp", prop_path, bound_arg, opt);
        if (by->parsed()) return cmd_build("yp", prop_path, bound_arg, opt);
        if (cp->parsed()) return cmd_check_pi(prop_path, bound_arg, opt);
        if (pp->parsed()) return cmd_pushout_product(m, n, opt);
        if (lf->parsed()) return cmd_lift(prop_path, pres_path, target, opt);
        if (zz->parsed()) return cmd_zigzag(prop_path, lift_path, algebra_path, opt);
        if (pl->parsed()) return cmd_pipeline(prop_path, algebra_path, bound_arg, opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::ParseError ? kInputError : kCheckFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFail;
    }
    return kInputError;
}
