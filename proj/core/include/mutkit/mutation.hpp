#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mutkit/laurent.hpp"
#include "mutkit/polytope.hpp"

namespace mutkit {

// Certified combinatorial mutation data: the width vector, the factor
// (normalized into w^perp), and one witness polytope per negative height.
// Witnesses may be empty polytopes at heights carrying no vertices of P.
struct MutationSpec {
    WidthVector w;
    LatticePolytope factor;
    std::map<Int, LatticePolytope> witnesses;
};

struct ConsistencyRecord {
    LatticePolytope algebraic_newton;
    bool verified = false;
};

struct MutationOutcome {
    LatticePolytope polytope;
    MutationSpec spec;
    std::optional<ConsistencyRecord> consistency;
};

class MutationUndefinedError : public Error {
public:
    MutationUndefinedError(const Int& height, const std::string& what)
        : Error(errc::mutation_undefined, what), height_(height) {}
    const Int& height() const { return height_; }

private:
    Int height_;
};

// Factors arriving at a nonzero height are translated into w^perp by their
// lexicographically least vertex; factors already at height zero are used
// untouched (so Newton polytopes of axis-free factors line up bit-exactly).
LatticePolytope normalize_factor(const LatticePolytope& f, const WidthVector& w);

// Maximal witness at height h (h <= -1): the hull of all lattice points g
// with g + |h|F inside the slice P_h, checked against the vertex condition.
// Any valid witness is contained in the maximal candidate, so absence here
// decides that no witness exists. An empty polytope is a valid witness when
// P has no vertices at height h.
std::optional<LatticePolytope> find_witness(const LatticePolytope& p, const WidthVector& w,
                                            const LatticePolytope& factor, const Int& h);

// conv( union of witnesses at negative heights, union of P_h + hF at
// nonnegative heights ). Throws MutationUndefined when a witness is missing
// and NonIntegralResult if the hull fails to be a lattice polytope.
MutationOutcome mutate_polytope(const LatticePolytope& p, const WidthVector& w,
                                const LatticePolytope& factor);

// The wall-crossing transform: substitutes z -> z * factor on the chosen
// axis and simultaneously mutates the Newton polytope with the dual width
// vector of that axis, asserting that both routes land on the same polytope.
std::pair<LaurentPoly, MutationOutcome> bsp_transform(const LaurentPoly& w, int axis,
                                                      const LaurentPoly& factor);

struct SearchOptions {
    Int w_bound = 10;
    int factor_vertex_bound = 4;
    long node_budget = 200000;
};

// Enumerates valid nontrivial mutations of P: primitive width vectors with
// entries in [-w_bound, w_bound] (each +-pair visited once, both orientations
// examined) and factors spanned by lattice points of the bottom slice.
// Deterministic order; throws SearchBudgetExceeded past the node budget.
std::vector<MutationSpec> search_mutations(const LatticePolytope& p, const SearchOptions& opts);
std::vector<MutationSpec> search_mutations(const LatticePolytope& p, const Int& w_bound,
                                           int factor_vertex_bound);

}  // namespace mutkit
