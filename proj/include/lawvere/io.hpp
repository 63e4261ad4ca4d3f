#pragma once

// JSON input files. Values are numbers, "inf", or a finite quantale's
// element labels. Every parse failure names the offending field.

#include <optional>

#include <json.hpp>

#include "lawvere/des.hpp"
#include "lawvere/paths.hpp"
#include "lawvere/prefs.hpp"

namespace lawvere::io {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    ParseError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

Json load_json(const std::string& path);

/// {"kind": "boolean" | "unit_interval" (with "tnorm") | "lawvere_reals" |
/// "finite_chain" (with "n") | "finite_powerset" (with "k") | "table" (with "elements",
/// "leq", "mul")}. A tolerance override applies to real carriers.
Quantale parse_quantale(const Json& j, const std::string& field, std::optional<double> tolerance = {});
Value parse_value(const Quantale& q, const Json& j, const std::string& field);
Json encode_value(const Quantale& q, Value v);

FiniteQCategory parse_category(const Quantale& q, const Json& j, const std::string& field);

/// Lattice descriptors: {"type": "finite", "ids", "hom"} | {"type":
/// "underline", "op"} | {"type": "power", "m", "op"} | {"type": "pref",
/// "alternatives"}.
LatticePtr parse_stalk(const Quantale& q, const Json& j, const std::string& field);
Object parse_object(const WeightedLattice& lat, const Json& j, const std::string& field);
Json encode_object(const WeightedLattice& lat, const Object& x);
Json encode_cochain(const NetworkSheaf& f, const Cochain& x);

/// {"vertices": [...], "edges": [[a, b], ...]}; a third edge entry is kept
/// as a weight when `weights` is given.
Graph parse_graph(const Json& j, const std::string& field, std::vector<Value>* weights = nullptr);

/// A single value (constant), or {"default": v, "pairs": [[v, w, q], ...],
/// "symmetric": [[v, w, q], ...]}.
Weighting parse_weighting(const Quantale& q, const Graph& g, const Json& j, const std::string& field);

/// Initial cochain as {vertex: object} or a list in vertex order.
Cochain parse_cochain(const NetworkSheaf& f, const Json& j, const std::string& field);

struct SheafSpec {
    Quantale quantale;
    Weighting weighting;
    std::shared_ptr<NetworkSheaf> sheaf;
    std::optional<Cochain> initial;
};

/// {"quantale", "graph", "weighting", "stalk" | "vertex_stalks" + "edge_stalks",
/// "maps", "initial"}. Map descriptors: "identity", "table", "shift" (x ↦
/// max(x + c, 0) pointwise), "maxplus", "minplus_transpose".
SheafSpec parse_sheaf(const Json& j, std::optional<double> tolerance = {});

struct DesSpec {
    DesSystem system;
    std::optional<Cochain> initial;
};

/// {"m", "graph", "delays": {vertex: matrix}, "weighting", "initial"}.
DesSpec parse_des(const Json& j, std::optional<double> tolerance = {});

/// {"graph": {"vertices", "edges": [[a, b, w], ...]}, "source"}.
PathProblem parse_paths(const Json& j);

struct PrefSpec {
    Quantale quantale;
    PrefPtr stalk;
    Graph graph;
    Cochain agents;
    std::vector<Value> eps;
};

/// {"quantale", "alternatives", "graph", "agents": {vertex: matrix}, "eps":
/// value or {vertex: value}}.
PrefSpec parse_prefs(const Json& j, std::optional<double> tolerance = {});

}  // namespace lawvere::io
