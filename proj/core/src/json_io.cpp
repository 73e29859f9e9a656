#include "propcalc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "propcalc/end_prop.hpp"
#include "propcalc/error.hpp"

namespace propcalc {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorKind::ParseError, what);
}

Rational rat(const Json& j, const std::string& field) {
    if (!j.is_string()) parse_fail(field + ": rationals must be strings like \"p/q\"");
    try {
        return rational_from_string(j.get<std::string>());
    } catch (const std::exception&) {
        parse_fail(field + ": malformed rational '" + j.get<std::string>() + "'");
    }
}

std::string rat_str(const Rational& q) { return rational_to_string(q); }

std::string biarity_key(Biarity b) { return std::to_string(b.m) + "," + std::to_string(b.n); }

std::vector<int> int_list(const std::string& key, const std::string& field) {
    std::vector<int> out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            parse_fail(field + ": malformed integer key '" + key + "'");
        }
    }
    return out;
}

Biarity biarity_from_key(const std::string& key, const std::string& field) {
    std::vector<int> v = int_list(key, field);
    if (v.size() != 2) parse_fail(field + ": expected a key of the form \"m,n\", got '" + key + "'");
    return {v[0], v[1]};
}

std::map<std::string, int> global_label_index(const ChainComplex& cx, const std::string& field) {
    std::map<std::string, int> out;
    std::vector<std::string> gl = cx.global_labels();
    for (int i = 0; i < static_cast<int>(gl.size()); ++i)
        if (!out.emplace(gl[static_cast<size_t>(i)], i).second)
            parse_fail(field + ": duplicate basis label '" + gl[static_cast<size_t>(i)] + "'");
    return out;
}

// {"srclabel": {"tgtlabel": "p/q"}} for a global matrix.
Json matrix_to_json(const SparseMatrix& m, const std::vector<std::string>& src,
                    const std::vector<std::string>& tgt) {
    Json out = Json::object();
    for (int j = 0; j < static_cast<int>(src.size()); ++j) {
        Json col = Json::object();
        for (const Term& t : m.col(j)) col[tgt[static_cast<size_t>(t.idx)]] = rat_str(t.coeff);
        if (!col.empty()) out[src[static_cast<size_t>(j)]] = std::move(col);
    }
    return out;
}

SparseMatrix matrix_from_json(const Json& j, const std::map<std::string, int>& src,
                              const std::map<std::string, int>& tgt, int rows,
                              const std::string& field) {
    if (!j.is_object()) parse_fail(field + ": expected an object of matrix columns");
    SparseMatrix out(rows, static_cast<int>(src.size()));
    for (const auto& [sl, col] : j.items()) {
        auto si = src.find(sl);
        if (si == src.end()) parse_fail(field + ": unknown source label '" + sl + "'");
        if (!col.is_object()) parse_fail(field + "." + sl + ": expected an object");
        for (const auto& [tl, c] : col.items()) {
            auto ti = tgt.find(tl);
            if (ti == tgt.end()) parse_fail(field + ": unknown target label '" + tl + "'");
            out.set(ti->second, si->second, rat(c, field + "." + sl + "." + tl));
        }
    }
    return out;
}

SparseVec vec_from_json(const Json& j, const std::map<std::string, int>& idx,
                        const std::string& field) {
    if (!j.is_object()) parse_fail(field + ": expected an object {label: coefficient}");
    SparseVec v;
    for (const auto& [l, c] : j.items()) {
        auto it = idx.find(l);
        if (it == idx.end()) parse_fail(field + ": unknown basis label '" + l + "'");
        v.push_back({it->second, rat(c, field + "." + l)});
    }
    sv_normalize(v);
    return v;
}

Json vec_to_json(const SparseVec& v, const std::vector<std::string>& labels) {
    Json out = Json::object();
    for (const Term& t : v) out[labels[static_cast<size_t>(t.idx)]] = rat_str(t.coeff);
    return out;
}

Perm perm_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) parse_fail(field + ": expected a permutation as an array");
    Perm p;
    for (const auto& e : j) {
        if (!e.is_number_integer()) parse_fail(field + ": permutation entries must be integers");
        p.push_back(e.get<int>());
    }
    std::vector<bool> seen(p.size(), false);
    for (int i : p) {
        if (i < 0 || i >= static_cast<int>(p.size()) || seen[static_cast<size_t>(i)])
            parse_fail(field + ": not a permutation in one-line notation");
        seen[static_cast<size_t>(i)] = true;
    }
    return p;
}

}  // namespace

Json complex_to_json(const ChainComplex& cx) {
    Json degrees = Json::object();
    Json diff = Json::object();
    for (int deg : cx.degrees()) {
        degrees[std::to_string(deg)] = cx.labels(deg);
        if (!cx.has_degree(deg - 1)) continue;
        SparseMatrix d = cx.differential(deg);
        for (int j = 0; j < cx.dim(deg); ++j) {
            Json col = Json::object();
            for (const Term& t : d.col(j)) col[cx.label(deg - 1, t.idx)] = rat_str(t.coeff);
            if (!col.empty()) diff[cx.label(deg, j)] = std::move(col);
        }
    }
    return Json{{"degrees", degrees}, {"differential", diff}};
}

ChainComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("degrees"))
        parse_fail("complex: missing \"degrees\" object");
    std::map<int, std::vector<std::string>> basis;
    for (const auto& [dk, labels] : j.at("degrees").items()) {
        int deg;
        try {
            deg = std::stoi(dk);
        } catch (const std::exception&) {
            parse_fail("degrees: malformed degree key '" + dk + "'");
        }
        if (!labels.is_array()) parse_fail("degrees." + dk + ": expected an array of labels");
        std::vector<std::string> ls;
        for (const auto& l : labels) {
            if (!l.is_string()) parse_fail("degrees." + dk + ": labels must be strings");
            ls.push_back(l.get<std::string>());
        }
        if (!ls.empty()) basis[deg] = std::move(ls);
    }
    std::map<std::string, std::pair<int, int>> where;
    for (const auto& [deg, ls] : basis)
        for (int l = 0; l < static_cast<int>(ls.size()); ++l)
            if (!where.emplace(ls[static_cast<size_t>(l)], std::make_pair(deg, l)).second)
                parse_fail("degrees: duplicate basis label '" + ls[static_cast<size_t>(l)] + "'");
    std::map<int, SparseMatrix> diff;
    auto dim_of = [&](int deg) {
        auto it = basis.find(deg);
        return it == basis.end() ? 0 : static_cast<int>(it->second.size());
    };
    if (j.contains("differential")) {
        for (const auto& [sl, col] : j.at("differential").items()) {
            auto si = where.find(sl);
            if (si == where.end())
                parse_fail("differential: unknown basis label '" + sl + "'");
            auto [deg, local] = si->second;
            auto [dit, fresh] = diff.try_emplace(deg, SparseMatrix(dim_of(deg - 1), dim_of(deg)));
            (void)fresh;
            if (!col.is_object()) parse_fail("differential." + sl + ": expected an object");
            for (const auto& [tl, c] : col.items()) {
                auto ti = where.find(tl);
                if (ti == where.end())
                    parse_fail("differential." + sl + ": unknown basis label '" + tl + "'");
                if (ti->second.first != deg - 1)
                    parse_fail("differential." + sl + " -> " + tl +
                               ": target is not one degree below the source");
                dit->second.set(ti->second.second, local, rat(c, "differential." + sl));
            }
        }
    }
    return ChainComplex::make(std::move(basis), std::move(diff));
}

Json chain_map_to_json(const ChainMap& f) {
    return Json{{"source", complex_to_json(f.src())},
                {"target", complex_to_json(f.tgt())},
                {"entries",
                 matrix_to_json(f.global_matrix(), f.src().global_labels(),
                                f.tgt().global_labels())}};
}

ChainMap chain_map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target"))
        parse_fail("map: missing \"source\" or \"target\"");
    ChainComplex src = complex_from_json(j.at("source"));
    ChainComplex tgt = complex_from_json(j.at("target"));
    SparseMatrix m(tgt.total_dim(), src.total_dim());
    if (j.contains("entries"))
        m = matrix_from_json(j.at("entries"), global_label_index(src, "entries"),
                             global_label_index(tgt, "entries"), tgt.total_dim(), "entries");
    return ChainMap::from_global(src, tgt, m);
}

Json biobject_to_json(const BiObject& b) {
    Json components = Json::object();
    Json actions = Json::object();
    for (const auto& [ba, cx] : b.components) {
        std::string key = biarity_key(ba);
        components[key] = complex_to_json(cx);
        const ComponentAction& act = b.actions.at(ba);
        std::vector<std::string> gl = cx.global_labels();
        Json right = Json::object(), left = Json::object();
        for (size_t i = 0; i < act.right_gen.size(); ++i)
            right["s" + std::to_string(i + 1)] = matrix_to_json(act.right_gen[i], gl, gl);
        for (size_t i = 0; i < act.left_gen.size(); ++i)
            left["s" + std::to_string(i + 1)] = matrix_to_json(act.left_gen[i], gl, gl);
        actions[key] = Json{{"right", right}, {"left", left}};
    }
    return Json{{"bound", Json{{"A", b.bound.A}, {"total", b.bound.total}}},
                {"components", components},
                {"actions", actions}};
}

BiObject biobject_from_json(const Json& j) {
    BiObject out;
    if (!j.is_object() || !j.contains("bound") || !j.contains("components"))
        parse_fail("biobject: missing \"bound\" or \"components\"");
    const Json& bd = j.at("bound");
    if (!bd.contains("A") || !bd.at("A").is_number_integer())
        parse_fail("bound: missing integer \"A\"");
    out.bound.A = bd.at("A").get<int>();
    out.bound.total = bd.contains("total") ? bd.at("total").get<int>() : -1;
    for (const auto& [key, cj] : j.at("components").items()) {
        Biarity ba = biarity_from_key(key, "components");
        if (!out.bound.contains(ba.m, ba.n))
            parse_fail("components: component '" + key + "' is outside the bound");
        out.components.emplace(ba, complex_from_json(cj));
    }
    const Json actions = j.contains("actions") ? j.at("actions") : Json::object();
    for (const auto& [ba, cx] : out.components) {
        std::string key = biarity_key(ba);
        std::map<std::string, int> gi = global_label_index(cx, "actions." + key);
        ComponentAction act;
        auto read_side = [&](const char* side, int count, std::vector<SparseMatrix>& dst) {
            for (int i = 1; i < count; ++i) {
                std::string gen = "s" + std::to_string(i);
                std::string field = "actions." + key + "." + side + "." + gen;
                if (!actions.contains(key) || !actions.at(key).contains(side) ||
                    !actions.at(key).at(side).contains(gen))
                    parse_fail(field + ": missing action generator");
                dst.push_back(matrix_from_json(actions.at(key).at(side).at(gen), gi, gi,
                                               cx.total_dim(), field));
            }
        };
        read_side("right", ba.m, act.right_gen);
        read_side("left", ba.n, act.left_gen);
        out.actions.emplace(ba, std::move(act));
    }
    std::vector<CheckIssue> issues = check_biobject(out);
    if (!issues.empty())
        parse_fail("biobject: invariant violation at " + issues.front().where + ": " +
                   issues.front().what);
    return out;
}

Json prop_to_json(const Prop& p) { return prop_to_json(p, nullptr); }

Json prop_to_json(const Prop& p, const QuasiFreePresentation* pres) {
    Json out = biobject_to_json(p.underlying());
    Json units = Json::object();
    for (int n = 1; n <= p.bound().A; ++n) {
        if (!p.bound().contains(n, n)) continue;
        units[std::to_string(n)] =
            vec_to_json(p.unit(n), p.component(n, n).global_labels());
    }
    out["units"] = units;

    Json vert = Json::object();
    for (Biarity kn : p.bound().components())
        for (int m = 1; m <= p.bound().A; ++m) {
            int k = kn.m, n = kn.n;
            if (!p.bound().contains(m, k) || !p.bound().contains(m, n)) continue;
            std::vector<std::string> la = p.component(k, n).global_labels();
            std::vector<std::string> lb = p.component(m, k).global_labels();
            std::vector<std::string> lo = p.component(m, n).global_labels();
            Json table = Json::object();
            for (int a = 0; a < static_cast<int>(la.size()); ++a)
                for (int b = 0; b < static_cast<int>(lb.size()); ++b) {
                    SparseVec v = p.vcomp_basis(m, k, n, a, b);
                    if (!v.empty())
                        table[la[static_cast<size_t>(a)] + "⋆" + lb[static_cast<size_t>(b)]] =
                            vec_to_json(v, lo);
                }
            vert[std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(n)] =
                std::move(table);
        }
    out["vertical"] = vert;

    Json hor = Json::object();
    for (Biarity b1 : p.bound().components())
        for (Biarity b2 : p.bound().components()) {
            if (!p.bound().contains(b1.m + b2.m, b1.n + b2.n)) continue;
            std::vector<std::string> la = p.component(b1.m, b1.n).global_labels();
            std::vector<std::string> lb = p.component(b2.m, b2.n).global_labels();
            std::vector<std::string> lo =
                p.component(b1.m + b2.m, b1.n + b2.n).global_labels();
            Json table = Json::object();
            for (int a = 0; a < static_cast<int>(la.size()); ++a)
                for (int b = 0; b < static_cast<int>(lb.size()); ++b) {
                    SparseVec v = p.hcomp_basis(b1.m, b1.n, b2.m, b2.n, a, b);
                    if (!v.empty())
                        table[la[static_cast<size_t>(a)] + "⋆" + lb[static_cast<size_t>(b)]] =
                            vec_to_json(v, lo);
                }
            hor[std::to_string(b1.m) + "," + std::to_string(b1.n) + "," + std::to_string(b2.m) +
                "," + std::to_string(b2.n)] = std::move(table);
        }
    out["horizontal"] = hor;
    if (pres) out["presentation"] = presentation_to_json(*pres);
    return out;
}

std::shared_ptr<TableProp> prop_from_json(const Json& j) {
    BiObject under = biobject_from_json(j);
    BiarityBound bound = under.bound;
    std::map<Biarity, std::map<std::string, int>> gi;
    std::map<Biarity, std::vector<std::string>> gl;
    for (const auto& [ba, cx] : under.components) {
        gi.emplace(ba, global_label_index(cx, "prop"));
        gl.emplace(ba, cx.global_labels());
    }
    std::map<Biarity, int> dims;
    for (const auto& [ba, cx] : under.components) dims.emplace(ba, cx.total_dim());
    auto dim = [&](int m, int n) {
        auto it = dims.find({m, n});
        return it == dims.end() ? 0 : it->second;
    };

    std::map<int, SparseVec> units;
    if (!j.contains("units")) parse_fail("prop: missing \"units\"");
    for (const auto& [nk, uj] : j.at("units").items()) {
        int n;
        try {
            n = std::stoi(nk);
        } catch (const std::exception&) {
            parse_fail("units: malformed arity key '" + nk + "'");
        }
        if (!bound.contains(n, n)) parse_fail("units: arity " + nk + " outside the bound");
        units[n] = vec_from_json(uj, gi.at({n, n}), "units." + nk);
    }
    auto prop = std::make_shared<TableProp>(std::move(under), std::move(units));

    // Parse a composition table into the [a][b] layout TableProp expects.
    auto read_table = [&](const Json& tj, Biarity a_at, Biarity b_at, Biarity out_at,
                          const std::string& field) {
        std::vector<std::vector<SparseVec>> table(
            static_cast<size_t>(dim(a_at.m, a_at.n)),
            std::vector<SparseVec>(static_cast<size_t>(dim(b_at.m, b_at.n))));
        for (const auto& [pair, vj] : tj.items()) {
            size_t sep = pair.find("⋆");
            if (sep == std::string::npos)
                parse_fail(field + ": key '" + pair + "' is not a ⋆-separated label pair");
            std::string al = pair.substr(0, sep);
            std::string bl = pair.substr(sep + std::string("⋆").size());
            auto ai = gi.at(a_at).find(al);
            auto bi = gi.at(b_at).find(bl);
            if (ai == gi.at(a_at).end() || bi == gi.at(b_at).end())
                parse_fail(field + ": unknown label in pair '" + pair + "'");
            table[static_cast<size_t>(ai->second)][static_cast<size_t>(bi->second)] =
                vec_from_json(vj, gi.at(out_at), field + "." + pair);
        }
        return table;
    };

    for (Biarity kn : bound.components())
        for (int m = 1; m <= bound.A; ++m) {
            int k = kn.m, n = kn.n;
            if (!bound.contains(m, k) || !bound.contains(m, n)) continue;
            std::string key =
                std::to_string(m) + "," + std::to_string(k) + "," + std::to_string(n);
            if (!j.contains("vertical") || !j.at("vertical").contains(key))
                parse_fail("vertical: missing table '" + key + "'");
            prop->set_vtable(m, k, n, read_table(j.at("vertical").at(key), {k, n}, {m, k},
                                                 {m, n}, "vertical." + key));
        }
    for (Biarity b1 : bound.components())
        for (Biarity b2 : bound.components()) {
            if (!bound.contains(b1.m + b2.m, b1.n + b2.n)) continue;
            std::string key = std::to_string(b1.m) + "," + std::to_string(b1.n) + "," +
                              std::to_string(b2.m) + "," + std::to_string(b2.n);
            if (!j.contains("horizontal") || !j.at("horizontal").contains(key))
                parse_fail("horizontal: missing table '" + key + "'");
            prop->set_htable(b1.m, b1.n, b2.m, b2.n,
                             read_table(j.at("horizontal").at(key), b1, b2,
                                        {b1.m + b2.m, b1.n + b2.n}, "horizontal." + key));
        }
    return prop;
}

Json word_to_json(const GeneratorWord& w) {
    using K = GeneratorWord::Kind;
    switch (w.kind) {
        case K::Gen:
            return Json{{"gen", w.gen}};
        case K::Unit:
            return Json{{"unit", w.arity}};
        case K::Zero:
            return Json{{"zero", {w.biarity.m, w.biarity.n}}};
        case K::VComp:
            return Json{{"vcomp", {word_to_json(*w.args[0]), word_to_json(*w.args[1])}}};
        case K::HComp:
            return Json{{"hcomp", {word_to_json(*w.args[0]), word_to_json(*w.args[1])}}};
        case K::LeftPerm:
            return Json{{"lperm", {w.perm, word_to_json(*w.args[0])}}};
        case K::RightPerm:
            return Json{{"rperm", {word_to_json(*w.args[0]), w.perm}}};
        case K::Scale:
            return Json{{"scale", {rat_str(w.coeff), word_to_json(*w.args[0])}}};
        case K::Sum: {
            Json terms = Json::array();
            for (const WordPtr& t : w.args) terms.push_back(word_to_json(*t));
            return Json{{"sum", Json{{"at", {w.biarity.m, w.biarity.n}}, {"terms", terms}}}};
        }
    }
    parse_fail("word: unknown node kind");
}

WordPtr word_from_json(const Json& j) {
    if (!j.is_object() || j.size() != 1)
        parse_fail("word: each node must be an object with exactly one key");
    const std::string op = j.begin().key();
    const Json& v = j.begin().value();
    auto pair_args = [&](const char* what) {
        if (!v.is_array() || v.size() != 2)
            parse_fail(std::string("word.") + what + ": expected two arguments");
    };
    if (op == "gen") {
        if (!v.is_number_integer() || v.get<int>() < 0)
            parse_fail("word.gen: expected a nonnegative generator index");
        return GeneratorWord::make_gen(v.get<int>());
    }
    if (op == "unit") {
        if (!v.is_number_integer() || v.get<int>() < 1)
            parse_fail("word.unit: expected a positive arity");
        return GeneratorWord::make_unit(v.get<int>());
    }
    if (op == "zero") {
        pair_args("zero");
        return GeneratorWord::make_zero(v[0].get<int>(), v[1].get<int>());
    }
    if (op == "vcomp") {
        pair_args("vcomp");
        return GeneratorWord::make_vcomp(word_from_json(v[0]), word_from_json(v[1]));
    }
    if (op == "hcomp") {
        pair_args("hcomp");
        return GeneratorWord::make_hcomp(word_from_json(v[0]), word_from_json(v[1]));
    }
    if (op == "lperm") {
        pair_args("lperm");
        return GeneratorWord::make_left_perm(perm_from_json(v[0], "word.lperm"),
                                             word_from_json(v[1]));
    }
    if (op == "rperm") {
        pair_args("rperm");
        return GeneratorWord::make_right_perm(word_from_json(v[0]),
                                              perm_from_json(v[1], "word.rperm"));
    }
    if (op == "scale") {
        pair_args("scale");
        return GeneratorWord::make_scale(rat(v[0], "word.scale"), word_from_json(v[1]));
    }
    if (op == "sum") {
        if (!v.is_object() || !v.contains("at") || !v.contains("terms"))
            parse_fail("word.sum: expected {\"at\": [m,n], \"terms\": [...]}");
        std::vector<WordPtr> terms;
        for (const Json& t : v.at("terms")) terms.push_back(word_from_json(t));
        return GeneratorWord::make_sum(std::move(terms), v.at("at")[0].get<int>(),
                                       v.at("at")[1].get<int>());
    }
    parse_fail("word: unknown operation '" + op + "'");
}

Json presentation_to_json(const QuasiFreePresentation& pres) {
    Json gens = Json::array();
    for (const auto& g : pres.generators) {
        Json gj{{"label", g.label}, {"at", {g.at.m, g.at.n}}, {"degree", g.degree}};
        if (g.dword) gj["dword"] = word_to_json(*g.dword);
        gens.push_back(std::move(gj));
    }
    Json words = Json::object();
    for (const auto& [b, ws] : pres.words) {
        Json arr = Json::array();
        for (const WordPtr& w : ws) arr.push_back(word_to_json(*w));
        words[biarity_key(b)] = std::move(arr);
    }
    return Json{{"generators", gens}, {"words", words}};
}

Json presentation_to_json(const QuasiFreePresentation& pres, const Prop& p,
                          const std::vector<PropElement>& values) {
    Json out = presentation_to_json(pres);
    if (values.size() != pres.generators.size())
        parse_fail("presentation: value count differs from generator count");
    for (size_t i = 0; i < values.size(); ++i)
        out["generators"][i]["value"] = vec_to_json(
            values[i].value, p.component(values[i].at.m, values[i].at.n).global_labels());
    return out;
}

std::vector<PropElement> presentation_values_from_json(const Json& j, const Prop& p) {
    std::vector<PropElement> out;
    if (!j.contains("generators")) parse_fail("presentation: missing \"generators\"");
    for (const Json& gj : j.at("generators")) {
        if (!gj.contains("value") || !gj.contains("at"))
            parse_fail("presentation.generators: a generator lacks \"value\"");
        Biarity at{gj.at("at")[0].get<int>(), gj.at("at")[1].get<int>()};
        std::map<std::string, int> gi =
            global_label_index(p.component(at.m, at.n), "presentation.value");
        out.push_back({at, vec_from_json(gj.at("value"), gi, "presentation.value")});
    }
    return out;
}

QuasiFreePresentation presentation_from_json(const Json& j) {
    QuasiFreePresentation out;
    if (!j.is_object() || !j.contains("generators") || !j.contains("words"))
        parse_fail("presentation: missing \"generators\" or \"words\"");
    for (const Json& gj : j.at("generators")) {
        QuasiFreePresentation::Generator g;
        if (!gj.contains("label") || !gj.contains("at"))
            parse_fail("presentation.generators: missing \"label\" or \"at\"");
        g.label = gj.at("label").get<std::string>();
        g.at = {gj.at("at")[0].get<int>(), gj.at("at")[1].get<int>()};
        g.degree = gj.contains("degree") ? gj.at("degree").get<int>() : 0;
        if (gj.contains("dword")) g.dword = word_from_json(gj.at("dword"));
        out.generators.push_back(std::move(g));
    }
    for (const auto& [key, arr] : j.at("words").items()) {
        Biarity b = biarity_from_key(key, "presentation.words");
        if (!arr.is_array()) parse_fail("presentation.words." + key + ": expected an array");
        std::vector<WordPtr> ws;
        for (const Json& wj : arr) ws.push_back(word_from_json(wj));
        out.words.emplace(b, std::move(ws));
    }
    return out;
}

Json algebra_to_json(const PAlgebra& alg) {
    Json action = Json::object();
    for (Biarity b : alg.p->bound().components()) {
        if (!alg.action.has(b.m, b.n)) continue;
        const ChainComplex& pc = alg.p->component(b.m, b.n);
        std::vector<std::string> pl = pc.global_labels();
        Json comp = Json::object();
        int rows = alg.end->power(b.n).cx.total_dim();
        int cols = alg.end->power(b.m).cx.total_dim();
        for (int i = 0; i < pc.total_dim(); ++i) {
            SparseMatrix m =
                alg.end->hom(b.m, b.n).to_matrix(alg.action.apply(b.m, b.n, sv_single(i, 1)));
            std::vector<std::vector<std::string>> dense(
                static_cast<size_t>(rows), std::vector<std::string>(static_cast<size_t>(cols), "0"));
            for (int c = 0; c < cols; ++c)
                for (const Term& t : m.col(c))
                    dense[static_cast<size_t>(t.idx)][static_cast<size_t>(c)] = rat_str(t.coeff);
            comp[pl[static_cast<size_t>(i)]] = dense;
        }
        action[biarity_key(b)] = std::move(comp);
    }
    return Json{{"carrier", complex_to_json(alg.carrier)}, {"action", action}};
}

AlgebraInput algebra_input_from_json(const Json& j) {
    AlgebraInput out;
    if (!j.is_object() || !j.contains("carrier") || !j.contains("action"))
        parse_fail("algebra: missing \"carrier\" or \"action\"");
    out.carrier = complex_from_json(j.at("carrier"));
    for (const auto& [key, comp] : j.at("action").items()) {
        Biarity b = biarity_from_key(key, "algebra.action");
        std::map<std::string, std::vector<std::vector<Rational>>> mats;
        if (!comp.is_object()) parse_fail("algebra.action." + key + ": expected an object");
        for (const auto& [pl, mj] : comp.items()) {
            if (!mj.is_array()) parse_fail("algebra.action." + key + "." + pl + ": expected rows");
            std::vector<std::vector<Rational>> mat;
            for (const Json& row : mj) {
                std::vector<Rational> r;
                for (const Json& c : row) r.push_back(rat(c, "algebra.action." + key + "." + pl));
                mat.push_back(std::move(r));
            }
            mats.emplace(pl, std::move(mat));
        }
        out.action.emplace(b, std::move(mats));
    }
    return out;
}

PAlgebra resolve_algebra(const PropPtr& p, const AlgebraInput& in, BiarityBound end_bound) {
    PAlgebra alg;
    alg.p = p;
    alg.carrier = in.carrier;
    alg.end = std::make_shared<EndProp>(in.carrier, end_bound);
    alg.action.src = p;
    alg.action.tgt = alg.end;
    for (Biarity b : p->bound().components()) {
        if (!end_bound.contains(b.m, b.n)) continue;
        auto it = in.action.find(b);
        if (it == in.action.end())
            parse_fail("algebra.action: missing component '" + biarity_key(b) + "'");
        const ChainComplex& pc = p->component(b.m, b.n);
        std::vector<std::string> pl = pc.global_labels();
        int rows = alg.end->power(b.n).cx.total_dim();
        int cols = alg.end->power(b.m).cx.total_dim();
        const ChainComplex& ecx = alg.end->component(b.m, b.n);
        SparseMatrix act(ecx.total_dim(), pc.total_dim());
        for (int i = 0; i < pc.total_dim(); ++i) {
            auto mit = it->second.find(pl[static_cast<size_t>(i)]);
            if (mit == it->second.end())
                parse_fail("algebra.action." + biarity_key(b) + ": missing matrix for '" +
                           pl[static_cast<size_t>(i)] + "'");
            const auto& dense = mit->second;
            if (static_cast<int>(dense.size()) != rows)
                parse_fail("algebra.action." + biarity_key(b) + "." + pl[static_cast<size_t>(i)] +
                           ": expected " + std::to_string(rows) + " rows");
            SparseMatrix m(rows, cols);
            for (int r = 0; r < rows; ++r) {
                if (static_cast<int>(dense[static_cast<size_t>(r)].size()) != cols)
                    parse_fail("algebra.action." + biarity_key(b) + "." +
                               pl[static_cast<size_t>(i)] + ": expected " + std::to_string(cols) +
                               " columns");
                for (int c = 0; c < cols; ++c)
                    if (dense[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0)
                        m.set(r, c, dense[static_cast<size_t>(r)][static_cast<size_t>(c)]);
            }
            for (const Term& t : alg.end->hom(b.m, b.n).from_matrix(m))
                act.set(t.idx, i, t.coeff);
        }
        alg.action.maps.emplace(b, ChainMap::from_global(pc, ecx, act));
    }
    return alg;
}

Json report_to_json(const CheckReport& r) {
    Json viol = Json::array();
    for (const CheckViolation& v : r.violations)
        viol.push_back(Json{{"check", v.check}, {"where", v.where}, {"detail", v.detail}});
    return Json{{"ok", r.ok()},
                {"checks_done", r.checks_done},
                {"violations", viol},
                {"skipped", r.skipped}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        parse_fail(path + ": " + e.what());
    }
}

std::string dump_json(const Json& j, bool canonical) {
    return (canonical ? j.dump() : j.dump(2)) + "\n";
}

void write_json_file(const std::string& path, const Json& j, bool canonical) {
    std::ofstream out(path);
    if (!out) parse_fail("cannot open file for writing: " + path);
    out << dump_json(j, canonical);
}

}  // namespace propcalc
