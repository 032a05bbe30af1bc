#pragma once

#include "crdyn/density.hpp"
#include "crdyn/relation.hpp"
#include "crdyn/symbolic.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace crdyn {

// One parsed instance document: exactly one of `finite` / `symbolic` is set.
// A finite document may carry an eps-net density (written by discretize);
// without one the exhaustive predicate applies.
struct Instance {
    std::optional<FiniteRelation> finite;
    std::optional<SymbolicRelation> symbolic;
    std::optional<EpsNet> density;

    static Instance of(FiniteRelation g);
    static Instance of(SymbolicRelation r);

    bool is_finite() const { return finite.has_value(); }
    DensityPredicate finite_predicate() const;
};

// Throws ParseError naming the line (syntax errors) or the field path
// (schema errors). Unknown fields are rejected.
Instance parse_instance(std::string_view text);

// Canonical form: sorted keys, two-space indent, reduced rationals as
// strings, trailing newline.
std::string serialize_instance(const Instance& inst);

} // namespace crdyn
