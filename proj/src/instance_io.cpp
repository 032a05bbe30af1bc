#include "crdyn/instance_io.hpp"

#include "crdyn/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <initializer_list>

namespace crdyn {

using nlohmann::json;

Instance Instance::of(FiniteRelation g) {
    Instance i;
    i.finite = std::move(g);
    return i;
}

Instance Instance::of(SymbolicRelation r) {
    Instance i;
    i.symbolic = std::move(r);
    return i;
}

DensityPredicate Instance::finite_predicate() const {
    if (!density) return DensityPredicate::exhaustive();
    return DensityPredicate::eps_net(density->eps, density->coords, density->ambient);
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

const json& field(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

void only_fields(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return it.key() == a; }))
            fail(path, "unknown field '" + it.key() + "'");
}

const json& array_at(const json& obj, const std::string& path, const char* key) {
    const json& v = field(obj, path, key);
    if (!v.is_array()) fail(path + "." + key, "expected an array");
    return v;
}

std::string kind_of(const json& obj, const std::string& path) {
    const json& k = field(obj, path, "kind");
    if (!k.is_string()) fail(path + ".kind", "expected a string");
    return k.get<std::string>();
}

Rational rational_of(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(v.dump());
    if (!v.is_string()) fail(path, "expected a rational as \"p/q\" or an integer");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

Point2 point_of(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) fail(path, "expected [x, y]");
    return {rational_of(v[0], path + "[0]"), rational_of(v[1], path + "[1]")};
}

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Instance parse_finite(const json& space, const json& rel, const json* density) {
    only_fields(space, "space", {"kind", "points"});
    std::vector<std::string> labels;
    const json& pts = array_at(space, "space", "points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!pts[i].is_string()) fail(idx("space.points", i), "point names are strings");
        labels.push_back(pts[i].get<std::string>());
    }
    if (labels.empty()) fail("space.points", "a finite space needs at least one point");

    if (kind_of(rel, "relation") != "pairs") fail("relation.kind", "a finite space takes a \"pairs\" relation");
    only_fields(rel, "relation", {"kind", "pairs"});
    const json& pairs = array_at(rel, "relation", "pairs");
    if (pairs.empty()) fail("relation.pairs", "a closed relation must be non-empty");
    std::vector<std::pair<std::string, std::string>> named;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const json& p = pairs[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            fail(idx("relation.pairs", i), "expected [name, name]");
        named.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }

    Instance inst;
    try {
        inst.finite = FiniteRelation::labelled(labels, named);
    } catch (const PreconditionError& e) {
        fail("relation", e.what());
    }
    if (density) {
        const json& d = *density;
        if (kind_of(d, "density") != "eps_net") fail("density.kind", "only \"eps_net\" is supported");
        only_fields(d, "density", {"kind", "eps", "coords", "ambient"});
        EpsNet net;
        net.eps = rational_of(field(d, "density", "eps"), "density.eps");
        if (net.eps <= 0) fail("density.eps", "must be positive");
        const json& coords = array_at(d, "density", "coords");
        if (coords.size() != labels.size()) fail("density.coords", "one coordinate per point expected");
        for (std::size_t i = 0; i < coords.size(); ++i) net.coords.push_back(rational_of(coords[i], idx("density.coords", i)));
        const json& amb = array_at(d, "density", "ambient");
        std::vector<Interval> parts;
        for (std::size_t i = 0; i < amb.size(); ++i) {
            const std::string p = idx("density.ambient", i);
            if (!amb[i].is_array() || amb[i].size() != 2) fail(p, "expected [lo, hi]");
            Interval iv{rational_of(amb[i][0], p + "[0]"), rational_of(amb[i][1], p + "[1]")};
            if (iv.lo > iv.hi) fail(p, "lo > hi");
            parts.push_back(std::move(iv));
        }
        net.ambient = Region1D(std::move(parts));
        inst.density = std::move(net);
    }
    return inst;
}

Instance parse_symbolic(const json& space, const json& rel) {
    only_fields(space, "space", {"kind", "intervals", "isolated"});
    std::vector<Interval> intervals;
    const json& ivs = array_at(space, "space", "intervals");
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        const std::string p = idx("space.intervals", i);
        if (!ivs[i].is_array() || ivs[i].size() != 2) fail(p, "expected [lo, hi]");
        intervals.push_back({rational_of(ivs[i][0], p + "[0]"), rational_of(ivs[i][1], p + "[1]")});
    }
    std::vector<Rational> isolated;
    if (space.contains("isolated")) {
        const json& iso = array_at(space, "space", "isolated");
        for (std::size_t i = 0; i < iso.size(); ++i) isolated.push_back(rational_of(iso[i], idx("space.isolated", i)));
    }

    if (kind_of(rel, "relation") != "primitives") fail("relation.kind", "an interval space takes a \"primitives\" relation");
    only_fields(rel, "relation", {"kind", "primitives"});
    const json& prims = array_at(rel, "relation", "primitives");
    if (prims.empty()) fail("relation.primitives", "a closed relation must be non-empty");
    std::vector<Primitive> out;
    for (std::size_t i = 0; i < prims.size(); ++i) {
        const std::string p = idx("relation.primitives", i);
        const json& q = prims[i];
        if (!q.is_object()) fail(p, "expected an object");
        const json& type = field(q, p, "type");
        if (type == "segment") {
            only_fields(q, p, {"type", "from", "to"});
            out.push_back(Primitive::segment(point_of(field(q, p, "from"), p + ".from"), point_of(field(q, p, "to"), p + ".to")));
        } else if (type == "point") {
            only_fields(q, p, {"type", "at"});
            out.push_back(Primitive::point(point_of(field(q, p, "at"), p + ".at")));
        } else {
            fail(p + ".type", "expected \"segment\" or \"point\"");
        }
    }

    Space1D sp = [&] {
        try {
            return Space1D(std::move(intervals), std::move(isolated));
        } catch (const PreconditionError& e) {
            fail("space", e.what());
        }
    }();
    try {
        return Instance::of(SymbolicRelation(std::move(sp), std::move(out)));
    } catch (const PreconditionError& e) {
        fail("relation", e.what());
    }
}

json rat(const Rational& q) { return to_string(q); }

json pt(const Point2& p) { return json::array({rat(p.x), rat(p.y)}); }

} // namespace

Instance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        for (std::size_t i = 0; i + 1 < upto; ++i)
            if (text[i] == '\n') ++line;
        throw ParseError("line " + std::to_string(line) + ": invalid JSON (" + e.what() + ")");
    }
    only_fields(doc, "document", {"space", "relation", "density"});
    const json& space = field(doc, "document", "space");
    const json& rel = field(doc, "document", "relation");
    if (!rel.is_object()) fail("relation", "expected an object");
    const std::string kind = kind_of(space, "space");
    const json* density = doc.contains("density") ? &doc["density"] : nullptr;
    if (kind == "finite") return parse_finite(space, rel, density);
    if (kind == "interval_union") {
        if (density) fail("density", "only finite documents carry a density");
        return parse_symbolic(space, rel);
    }
    fail("space.kind", "expected \"finite\" or \"interval_union\"");
}

std::string serialize_instance(const Instance& inst) {
    json doc;
    if (inst.finite) {
        const FiniteRelation& g = *inst.finite;
        doc["space"] = {{"kind", "finite"}, {"points", g.space().labels()}};
        json pairs = json::array();
        for (const auto& [a, b] : g.edges()) pairs.push_back(json::array({g.space().label(a), g.space().label(b)}));
        doc["relation"] = {{"kind", "pairs"}, {"pairs", pairs}};
        if (inst.density) {
            json coords = json::array(), amb = json::array();
            for (const auto& c : inst.density->coords) coords.push_back(rat(c));
            for (const auto& p : inst.density->ambient.parts()) amb.push_back(json::array({rat(p.lo), rat(p.hi)}));
            doc["density"] = {{"kind", "eps_net"}, {"eps", rat(inst.density->eps)}, {"coords", coords}, {"ambient", amb}};
        }
    } else if (inst.symbolic) {
        const SymbolicRelation& r = *inst.symbolic;
        json ivs = json::array(), iso = json::array(), prims = json::array();
        for (const auto& iv : r.space().intervals()) ivs.push_back(json::array({rat(iv.lo), rat(iv.hi)}));
        for (const auto& p : r.space().isolated_listed()) iso.push_back(rat(p));
        for (const auto& p : r.primitives()) {
            if (p.kind == Primitive::Kind::Segment)
                prims.push_back({{"type", "segment"}, {"from", pt(p.a)}, {"to", pt(p.b)}});
            else
                prims.push_back({{"type", "point"}, {"at", pt(p.a)}});
        }
        doc["space"] = {{"kind", "interval_union"}, {"intervals", ivs}, {"isolated", iso}};
        doc["relation"] = {{"kind", "primitives"}, {"primitives", prims}};
    } else {
        throw PreconditionError("empty instance");
    }
    return doc.dump(2) + "\n";
}

} // namespace crdyn
