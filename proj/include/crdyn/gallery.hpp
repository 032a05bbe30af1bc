#pragma once

#include "crdyn/instance_io.hpp"
#include "crdyn/rational.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace crdyn {

// Defaults shared by every symbolic query in the gallery.
struct GalleryParams {
    Rational eps = make_rational(1, 64);
    std::size_t horizon = 200;
    Rational delta = make_rational(1, 64);
    std::size_t ex32_depth = 6;
    std::size_t staircase_level = 3;
};

enum class RowStatus { Pass, PassUnknown, Fail };

struct Observation {
    std::string observed;
    RowStatus status = RowStatus::Fail;
};

struct Expectation {
    std::string query;
    std::string expected;
    std::string citation;
    // Expected outcome is itself "unknown at horizon"; a match counts as pass.
    bool horizon_relative = false;
    std::function<std::string()> observe;
};

struct GalleryInstance {
    std::string name;
    std::string description;
    Instance system;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Expectation> expectations;
};

std::vector<std::string> gallery_names();
// Throws PreconditionError for an unknown name.
GalleryInstance build_gallery_instance(const std::string& name, const GalleryParams& params = {});

Observation evaluate(const Expectation& e);

struct GalleryRow {
    std::string instance;
    std::string query;
    std::string expected;
    std::string citation;
    Observation outcome;
};

struct GalleryReport {
    std::vector<GalleryRow> rows;
    std::size_t count(RowStatus s) const;
    bool ok() const { return count(RowStatus::Fail) == 0; }
};

// Instances whose name contains `filter` (all when empty), in name order.
GalleryReport run_gallery(const std::string& filter = "", const GalleryParams& params = {});
std::string format_report(const GalleryReport& report, const GalleryParams& params);
std::string params_header(const GalleryParams& params);

} // namespace crdyn
