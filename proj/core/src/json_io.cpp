#include "monoconv/json_io.hpp"

#include <json.hpp>

namespace monoconv {

using nlohmann::json;

namespace {

json atoms_json(const AtomicMeasure& a) {
    json arr = json::array();
    for (const auto& at : a.atoms()) arr.push_back(json::array({at.x, at.w}));
    return arr;
}

AtomicMeasure atoms_from(const json& j) {
    if (!j.is_array()) throw ValidationError("\"atoms\" must be an array of [x, w] pairs");
    std::vector<Atom> v;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw ValidationError("each atom must be a [x, w] pair of numbers");
        v.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return AtomicMeasure(std::move(v));
}

cplx complex_from(const json& j, const char* name) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ValidationError(std::string("\"") + name + "\" must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

double number(const json& params, const char* name) {
    if (!params.contains(name) || !params[name].is_number())
        throw ValidationError(std::string("missing numeric parameter \"") + name + "\"");
    return params[name].get<double>();
}

json to_json(const Measure& m) {
    if (const auto* a = std::get_if<AtomicMeasure>(&m)) return {{"kind", "atomic"}, {"atoms", atoms_json(*a)}};
    if (const auto* g = std::get_if<GridMeasure>(&m)) {
        json j = {{"kind", "grid"}, {"xs", g->xs()}, {"density", g->density()}, {"atoms", atoms_json(g->atoms())}};
        if (g->tail().unbounded_left() || g->tail().unbounded_right()) {
            json t = json::object();
            if (g->tail().unbounded_left()) t["left"] = g->tail().left_exponent;
            if (g->tail().unbounded_right()) t["right"] = g->tail().right_exponent;
            j["tail"] = t;
        }
        return j;
    }
    const auto& f = std::get<AnalyticFamily>(m);
    json params;
    if (const auto* a = std::get_if<Arcsine>(&f)) params = {{"t", a->t}};
    else if (const auto* d = std::get_if<DeformedArcsine>(&f)) params = {{"t", d->t}, {"c", d->c}};
    else if (const auto* p = std::get_if<MonotonePoisson>(&f)) params = {{"lambda", p->lambda}, {"t", p->t}};
    else if (const auto* s = std::get_if<Stable>(&f))
        params = {{"alpha", s->alpha},
                  {"b", json::array({s->b.real(), s->b.imag()})},
                  {"c", json::array({s->c.real(), s->c.imag()})},
                  {"t", s->t}};
    else params = {{"a", std::get<Dirac>(f).a}};
    return {{"kind", "family"}, {"name", family_name(f)}, {"params", params}};
}

Measure from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ValidationError("measure JSON needs a string \"kind\"");
    const std::string kind = j["kind"];
    if (kind == "atomic") {
        if (!j.contains("atoms")) throw ValidationError("atomic measure needs \"atoms\"");
        return atoms_from(j["atoms"]);
    }
    if (kind == "grid") {
        if (!j.contains("xs") || !j.contains("density"))
            throw ValidationError("grid measure needs \"xs\" and \"density\"");
        auto xs = j["xs"].get<std::vector<double>>();
        auto d = j["density"].get<std::vector<double>>();
        AtomicMeasure atoms = j.contains("atoms") ? atoms_from(j["atoms"]) : AtomicMeasure{};
        TailModel tail;
        if (j.contains("tail")) {
            const auto& t = j["tail"];
            if (t.contains("left")) tail.left_exponent = t["left"].get<double>();
            if (t.contains("right")) tail.right_exponent = t["right"].get<double>();
        }
        return GridMeasure(std::move(xs), std::move(d), std::move(atoms), tail);
    }
    if (kind == "family") {
        if (!j.contains("name") || !j["name"].is_string())
            throw ValidationError("family measure needs a string \"name\"");
        const std::string name = j["name"];
        const json params = j.value("params", json::object());
        Measure m;
        if (name == "arcsine") m = AnalyticFamily{Arcsine{number(params, "t")}};
        else if (name == "deformed_arcsine")
            m = AnalyticFamily{DeformedArcsine{number(params, "t"), number(params, "c")}};
        else if (name == "monotone_poisson")
            m = AnalyticFamily{MonotonePoisson{number(params, "lambda"), number(params, "t")}};
        else if (name == "stable") {
            if (!params.contains("b") || !params.contains("c"))
                throw ValidationError("stable family needs \"b\" and \"c\"");
            m = AnalyticFamily{Stable{number(params, "alpha"), complex_from(params["b"], "b"),
                                      complex_from(params["c"], "c"), number(params, "t")}};
        } else if (name == "dirac") m = AnalyticFamily{Dirac{number(params, "a")}};
        else throw ValidationError("unknown family \"" + name + "\"");
        validate(m);
        return m;
    }
    throw ValidationError("unknown measure kind \"" + kind + "\"");
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

Measure measure_from_json(const std::string& text) {
    try {
        return from_json(parse(text));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad measure JSON: ") + e.what());
    }
}

std::string measure_to_json(const Measure& m, int indent) { return to_json(m).dump(indent); }

Triple triple_from_json(const std::string& text) {
    const json j = parse(text);
    try {
        if (!j.is_object() || !j.contains("gamma") || !j.contains("tau"))
            throw ValidationError("triple JSON needs \"gamma\" and \"tau\"");
        Triple t;
        t.gamma = j["gamma"].get<double>();
        t.tau = from_json(j["tau"]);
        return t;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad triple JSON: ") + e.what());
    }
}

std::string triple_to_json(const Triple& t, int indent) {
    json j = {{"gamma", t.gamma}, {"tau", to_json(t.tau)}};
    return j.dump(indent);
}

}  // namespace monoconv
