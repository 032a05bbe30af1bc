#include "crdyn/errors.hpp"
#include "crdyn/gallery.hpp"
#include "crdyn/instance_io.hpp"

#include <doctest.h>

using namespace crdyn;

namespace {
std::string parse_error(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}
}

TEST_CASE("finite documents") {
    auto inst = parse_instance(R"({"space":{"kind":"finite","points":["1","2"]},
                                  "relation":{"kind":"pairs","pairs":[["1","1"]]}})");
    REQUIRE(inst.is_finite());
    CHECK(*inst.finite == FiniteRelation::labelled({"1", "2"}, {{"1", "1"}}));
    CHECK(inst.finite_predicate().is_exhaustive());
}

TEST_CASE("interval documents") {
    auto inst = parse_instance(R"({"space":{"kind":"interval_union","intervals":[["0","1"]]},
        "relation":{"kind":"primitives","primitives":[
          {"type":"segment","from":["0","1"],"to":["1","1"]},
          {"type":"segment","from":["1/2","0"],"to":["1/2","1"]},
          {"type":"point","at":[0,"2/4"]}]}})");
    REQUIRE_FALSE(inst.is_finite());
    const auto& r = *inst.symbolic;
    CHECK(r.primitives().size() == 3);
    CHECK(r.contains(make_rational(1, 2), make_rational(1, 3)));
    CHECK(r.contains(make_rational(0), make_rational(1, 2)));
    CHECK(r.space().region() == Region1D::interval(make_rational(0), make_rational(1)));
}

TEST_CASE("parse errors") {
    CHECK(parse_error(R"({"space":{"kind":"finite","points":["1"]},"relation":{"kind":"pairs","pairs":[]}})") != "");
    auto unknown = parse_error(R"({"space":{"kind":"finite","points":["1"],"extra":1},
                                   "relation":{"kind":"pairs","pairs":[["1","1"]]}})");
    CHECK(unknown.find("extra") != std::string::npos);
    auto line = parse_error("{\n\"space\": {\n\"kind\": \"finite\",,\n}}");
    CHECK(line.find("line 3") != std::string::npos);
    auto path = parse_error(R"({"space":{"kind":"interval_union","intervals":[["0","1"]]},
        "relation":{"kind":"primitives","primitives":[{"type":"segment","from":["x","1"],"to":["1","1"]}]}})");
    CHECK(path.find("relation.primitives[0].from[0]") != std::string::npos);
    CHECK(parse_error(R"({"space":{"kind":"finite","points":["1"]},"relation":{"kind":"pairs","pairs":[["1","9"]]}})") != "");
    CHECK(parse_error(R"({"space":{"kind":"sphere"},"relation":{"kind":"pairs","pairs":[["1","1"]]}})") != "");
    CHECK(parse_error("[]") != "");
}

TEST_CASE("gallery instances round-trip byte for byte") {
    for (const auto& name : gallery_names()) {
        CAPTURE(name);
        auto inst = build_gallery_instance(name).system;
        auto text = serialize_instance(inst);
        auto back = parse_instance(text);
        CHECK(serialize_instance(back) == text);
        if (inst.is_finite()) {
            CHECK(*back.finite == *inst.finite);
        } else {
            CHECK(*back.symbolic == *inst.symbolic);
        }
    }
}

TEST_CASE("discretized instances keep their density") {
    auto r = *build_gallery_instance("ex1").system.symbolic;
    auto d = discretize(r, make_rational(1, 8));
    Instance inst = Instance::of(d.relation);
    inst.density = d.predicate.net();
    auto back = parse_instance(serialize_instance(inst));
    REQUIRE(back.density.has_value());
    CHECK(back.density->eps == d.predicate.net().eps);
    CHECK(back.density->coords == d.predicate.net().coords);
    CHECK(back.density->ambient == d.predicate.net().ambient);
    CHECK_FALSE(back.finite_predicate().is_exhaustive());
}
