#include "ffrep/io.hpp"

#include <fstream>
#include <sstream>

#include "ffrep/errors.hpp"

namespace ffrep::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field '") + key + "'");
    return *it;
}

std::vector<Fp> parse_fp_coeffs(const json& j) {
    if (!j.is_array()) fail("expected a coefficient array");
    std::vector<Fp> out;
    for (const auto& c : j) {
        if (!c.is_number_unsigned()) fail("coefficients must be nonnegative integers");
        out.push_back(c.get<Fp>());
    }
    return out;
}

json fp_poly_json(const FpPoly& f) { return json(f.coeffs()); }

FpPoly parse_fp_poly(const json& j, Fp p) { return FpPoly(p, parse_fp_coeffs(j)); }

Rational parse_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>(), 1);
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s), 1);
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            fail("malformed rational '" + s + "'");
        }
    }
    fail("expected a rational (integer or \"num/den\" string)");
}

}  // namespace

// ---------------------------------------------------------------- elements

json base_elem_json(const BaseElem& a) {
    if (a.field()->is_finite()) return json(a.coords());
    const PCRep& r = a.pc();
    return json{{"level", r.level}, {"num", fp_poly_json(r.num)}, {"den", fp_poly_json(r.den)}};
}

BaseElem parse_base_elem(const json& j, const BaseFieldPtr& field) {
    if (field->is_finite()) {
        auto coords = parse_fp_coeffs(j);
        if (coords.size() > field->f()) fail("too many coordinates for GF(p^f) element");
        coords.resize(field->f(), 0);
        return BaseElem(field, std::move(coords));
    }
    if (!j.is_object()) fail("perfect-closure element must be {level, num, den}");
    Fp p = field->p();
    return BaseElem::rational(field, need(j, "level").get<unsigned>(),
                              parse_fp_poly(need(j, "num"), p),
                              parse_fp_poly(need(j, "den"), p));
}

json ext_elem_json(const ExtElem& a) {
    json out = json::array();
    for (const auto& c : a.coords()) out.push_back(base_elem_json(c));
    return out;
}

ExtElem parse_ext_elem(const json& j, const ExtFieldPtr& field) {
    if (!j.is_array()) fail("K-element must be an array of base coordinates");
    if (j.size() > field->degree()) fail("too many coordinates for K-element");
    std::vector<BaseElem> coords;
    for (const auto& c : j) coords.push_back(parse_base_elem(c, field->base()));
    while (coords.size() < field->degree()) coords.push_back(BaseElem::zero(field->base()));
    return field->element(std::move(coords));
}

json subspace_json(const Subspace& w) {
    json basis = json::array();
    for (const auto& v : w.basis_elements()) basis.push_back(ext_elem_json(v));
    return json{{"dim", w.dim()}, {"basis", basis}};
}

Subspace parse_subspace(const json& j, const ExtFieldPtr& field) {
    std::vector<ExtElem> vecs;
    for (const auto& v : need(j, "basis")) vecs.push_back(parse_ext_elem(v, field));
    Subspace w = Subspace::span(field, vecs);
    if (w.dim() != need(j, "dim").get<std::size_t>())
        fail("subspace basis is not in general position with its declared dim");
    return w;
}

// ------------------------------------------------------------------- rings

json ring_spec_json(const RingPresentation& pres) {
    const auto& K = pres.field;
    const auto& k = K->base();
    json base;
    if (k->is_finite()) {
        base = json{{"kind", "finite"}, {"p", k->p()}, {"f", k->f()}};
    } else {
        base = json{{"kind", "perfect_closure_rational"}, {"p", k->p()},
                    {"variable", k->variable()}};
    }
    json minp = json::array();
    for (const auto& c : K->min_poly()) minp.push_back(base_elem_json(c));
    json gens = json::array();
    for (const auto& g : pres.generators)
        gens.push_back(json{{"coeff", ext_elem_json(g.coeff)}, {"degree", g.degree}});
    return json{{"label", pres.label},
                {"base_field", base},
                {"extension",
                 {{"min_poly", minp}, {"trusted_irreducible", !k->is_finite()}}},
                {"generators", gens}};
}

RingPresentation parse_ring_spec(const json& j) {
    if (!j.is_object()) fail("ring spec must be an object");
    const json& bf = need(j, "base_field");
    const std::string kind = need(bf, "kind").get<std::string>();
    Fp p = need(bf, "p").get<Fp>();
    BaseFieldPtr k;
    if (kind == "finite") {
        k = BaseField::finite(p, need(bf, "f").get<unsigned>());
    } else if (kind == "perfect_closure_rational") {
        k = BaseField::perfect_closure(p, bf.value("variable", "u"));
    } else {
        fail("unknown base_field kind '" + kind + "'");
    }

    ExtFieldPtr K;
    if (j.contains("extension")) {
        const json& ext = need(j, "extension");
        std::vector<BaseElem> minp;
        for (const auto& c : need(ext, "min_poly")) minp.push_back(parse_base_elem(c, k));
        K = ExtField::create(k, std::move(minp), ext.value("trusted_irreducible", false));
    } else {
        K = ExtField::create(k, {BaseElem::zero(k), BaseElem::one(k)});
    }

    RingPresentation pres;
    pres.field = K;
    pres.label = j.value("label", "");
    for (const auto& g : need(j, "generators"))
        pres.generators.push_back(
            {parse_ext_elem(need(g, "coeff"), K), need(g, "degree").get<unsigned>()});
    return pres;
}

// ------------------------------------------------------------------ towers

namespace {

json multi_poly_json(const MultiPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(json{{"coeff", c}, {"exps", e}});
    return terms;
}

MultiPoly parse_multi_poly(const json& j, Fp p, std::size_t nvars) {
    MultiPoly f(p, nvars);
    if (!j.is_array()) fail("f must be an array of {coeff, exps} terms");
    for (const auto& t : j) {
        auto exps = need(t, "exps").get<std::vector<unsigned>>();
        if (exps.size() != nvars) fail("term arity does not match the variable list");
        f.add_term(std::move(exps), need(t, "coeff").get<Fp>());
    }
    return f;
}

}  // namespace

json tower_spec_json(const TowerPresentation& T) {
    json base;
    std::size_t base_nvars = 0;
    if (T.poly_base) {
        json ws = json::array();
        for (const auto& w : T.poly_base->weights) ws.push_back(w.str());
        base = json{{"type", "polyring"}, {"p", T.poly_base->p},
                    {"vars", T.poly_base->vars}, {"weights", ws}};
        base_nvars = T.poly_base->vars.size();
    } else {
        base = json{{"type", "ring"},
                    {"ring", ring_spec_json(T.curve_base->ring->presentation())},
                    {"certify_emax", T.curve_base->certify_e_max}};
    }
    (void)base_nvars;
    json adjoin = json::array();
    for (const auto& st : T.steps) {
        json step{{"var", st.var}, {"exponent", st.exponent}, {"f", multi_poly_json(st.f)}};
        if (st.weight) step["weight"] = st.weight->str();
        adjoin.push_back(step);
    }
    return json{{"label", T.label}, {"base", base}, {"adjoin", adjoin}};
}

TowerPresentation parse_tower_spec(const json& j) {
    if (!j.is_object()) fail("tower spec must be an object");
    TowerPresentation T;
    T.label = j.value("label", "");
    const json& base = need(j, "base");
    const std::string type = need(base, "type").get<std::string>();
    std::size_t base_nvars = 0;
    Fp p = 2;
    if (type == "polyring") {
        WeightedPolyRing R;
        R.p = need(base, "p").get<Fp>();
        R.vars = need(base, "vars").get<std::vector<std::string>>();
        for (const auto& w : need(base, "weights")) R.weights.push_back(parse_rational(w));
        base_nvars = R.vars.size();
        p = R.p;
        T.poly_base = std::move(R);
    } else if (type == "ring") {
        CurveBase cb;
        cb.ring = std::make_shared<CurveRing>(
            CurveRing::analyze(parse_ring_spec(need(base, "ring"))));
        cb.certify_e_max = base.value("certify_emax", 10u);
        p = cb.ring->field()->base()->p();
        T.curve_base = std::move(cb);
    } else {
        fail("unknown tower base type '" + type + "'");
    }
    const json& adjoin = need(j, "adjoin");
    const std::size_t total = base_nvars + adjoin.size();
    for (const auto& s : adjoin) {
        AdjoinStep st;
        st.var = s.value("var", "x" + std::to_string(T.steps.size()));
        st.exponent = need(s, "exponent").get<std::uint64_t>();
        st.f = s.contains("f") ? parse_multi_poly(s["f"], p, total) : MultiPoly(p, total);
        if (s.contains("weight")) st.weight = parse_rational(s["weight"]);
        T.steps.push_back(std::move(st));
    }
    return T;
}

// ----------------------------------------------------------------- reports

json report_json(const DecompositionReport& rep) {
    json summands = json::array();
    for (const auto& s : rep.summands) {
        json d{{"i", s.residue},
               {"kind", s.kind == SummandKind::Free ? "free" : "proper"},
               {"shift", s.shift.str()},
               {"class_id", s.class_id}};
        if (s.space) d["W"] = subspace_json(*s.space);
        summands.push_back(d);
    }
    return json{{"e", rep.e},
                {"q", rep.q},
                {"rank", rep.rank},
                {"torsion_length", rep.torsion_length},
                {"hilbert", {{"checked_to", rep.hilbert_checked_to}, {"pass", rep.hilbert_ok}}},
                {"summands", summands}};
}

json class_table_json(const ClassTable& table) {
    json classes = json::array();
    for (const auto& c : table.classes) {
        json d{{"id", c.id}, {"free", c.free}, {"dim", c.dim}};
        if (c.representative) d["representative"] = subspace_json(*c.representative);
        classes.push_back(d);
    }
    json per_e = json::array();
    for (const auto& [e, rep] : table.per_e) per_e.push_back(report_json(rep));
    json mults = json::object();
    for (const auto& [e, m] : table.multiplicities) {
        json row = json::object();
        for (const auto& [id, cnt] : m) row[std::to_string(id)] = cnt;
        mults[std::to_string(e)] = row;
    }
    return json{{"e_range", {table.e_min, table.e_max}},
                {"classes", classes},
                {"per_e", per_e},
                {"multiplicities", mults}};
}

json verdict_json(const Verdict& v) {
    const char* kind = v.kind == VerdictKind::FFRT_CERTIFIED        ? "FFRT_CERTIFIED"
                       : v.kind == VerdictKind::NOT_FFRT_CERTIFIED ? "NOT_FFRT_CERTIFIED"
                                                                   : "LOWER_BOUND_ONLY";
    json out{{"kind", kind},
             {"distinct_classes", v.distinct_classes},
             {"detail", v.detail}};
    if (v.kind == VerdictKind::FFRT_CERTIFIED) out["period"] = v.period;
    if (v.certificate) out["recurrence_certificate"] = certificate_json(*v.certificate);
    return out;
}

json certificate_json(const RecurrenceCertificate& cert) {
    json steps = json::array();
    for (const auto& s : cert.steps)
        steps.push_back(json{{"e", s.e},
                             {"f", fp_poly_json(s.f)},
                             {"g", fp_poly_json(s.g)},
                             {"h", fp_poly_json(s.h)}});
    return json{{"steps", steps}};
}

json tower_report_json(const TowerReport& rep) {
    json summands = json::array();
    for (const auto& [key, cnt] : rep.summands)
        summands.push_back(json{{"class_id", key.first}, {"shift", key.second.str()},
                                {"count", cnt}});
    return json{{"tower",
                 {{"hilbert_check", {{"order", rep.trunc_degree}, {"pass", rep.hilbert_ok}}},
                  {"fpurity",
                   {{"checked", rep.fpurity_checked},
                    {"clears_exponents", rep.clears_tower_exponents}}}}},
                {"e", rep.e},
                {"q", rep.q},
                {"all_free", rep.all_free},
                {"summands", summands}};
}

// -------------------------------------------------------------------- files

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
}

json load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

RingPresentation load_ring_spec(const std::string& path) {
    return parse_ring_spec(load_file(path));
}

TowerPresentation load_tower_spec(const std::string& path) {
    return parse_tower_spec(load_file(path));
}

}  // namespace ffrep::io

