#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mutkit/laurent.hpp"
#include "mutkit/markov.hpp"
#include "mutkit/mutation.hpp"
#include "mutkit/polytope.hpp"

namespace mutkit {

using json = nlohmann::ordered_json;

// Polynomial wire format:
//   {"rank": n, "terms": [{"c": "<int or p/q>", "e": [e1,...,en]}, ...]}
// terms sorted lexicographically by exponent; zero coefficients and duplicate
// exponents are rejected on input.
json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const json& j);

// Polytope wire format: {"rank": n, "vertices": [[...], ...]}, vertices
// sorted; rational polytopes carry "p/q" strings instead of integers.
json polytope_to_json(const LatticePolytope& p);
json polytope_to_json(const RationalPolytope& p);
LatticePolytope lattice_polytope_from_json(const json& j);
RationalPolytope rational_polytope_from_json(const json& j);

// {"w": [...], "factor": <polytope>, "witnesses": {"-1": <polytope>, ...}}
json mutation_spec_to_json(const MutationSpec& spec);

json lift_result_to_json(const LiftResult& lift);
json pipeline_node_to_json(const NodeArtifacts& node);

// CSV fingerprint row: rank, vertex_count, normalized_volume, edge_lengths
// (sorted, semicolon-joined), points_P, points_2P, interior_points.
std::string fingerprint_csv_header();
std::string fingerprint_csv_row(const Fingerprint& fp);

// Report CSV: triple, variant, n, fingerprint fields, distinct_from_all.
std::string family_report_csv(const FamilyReport& report);

// Canonical text serialization used everywhere output is written.
std::string dump_canonical(const json& j);

Rat parse_rational(const std::string& text);  // strict "-?digits(/digits)?"

// File helpers; parse failures surface as ParseError.
json load_json_file(const std::string& path);
LaurentPoly load_poly(const std::string& path);
LatticePolytope load_lattice_polytope(const std::string& path);

}  // namespace mutkit
