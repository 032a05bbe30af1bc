#include "crdyn/errors.hpp"
#include "crdyn/gallery.hpp"

#include <doctest.h>

#include <algorithm>

using namespace crdyn;

TEST_CASE("gallery names are sorted and complete") {
    auto names = gallery_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (const char* n : {"dens", "ex1", "ex2", "ex3", "ex31", "ex32", "ex4", "exhura", "exxi", "ff", "fse1", "fse2",
                          "fse3", "illegal-pair", "nontransitive-pair", "tistile", "tistile0"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
}

TEST_CASE("instances build") {
    auto f = build_gallery_instance("fse1");
    CHECK(f.system.is_finite());
    CHECK(f.system.finite->size() == 3);
    CHECK_FALSE(f.expectations.empty());
    auto d = build_gallery_instance("dens");
    CHECK(d.system.finite->edges().size() == 2);
    auto e = build_gallery_instance("ex31");
    CHECK_FALSE(e.system.is_finite());
    CHECK(e.system.symbolic->primitives().size() == 6);
    CHECK_THROWS_AS(build_gallery_instance("nope"), PreconditionError);
}

TEST_CASE("finite gallery rows pass") {
    auto report = run_gallery("fse1");
    REQUIRE_FALSE(report.rows.empty());
    CHECK(report.ok());
    for (const auto& row : report.rows) CHECK(row.instance == "fse1");
    auto text = format_report(report, {});
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("0 failed") != std::string::npos);
}

TEST_CASE("a wrong expectation is reported as a failure") {
    Expectation e{"q", "yes", "c", false, [] { return std::string("no"); }};
    CHECK(evaluate(e).status == RowStatus::Fail);
    Expectation h{"q", "none found", "c", true, [] { return std::string("none found"); }};
    CHECK(evaluate(h).status == RowStatus::PassUnknown);
}
