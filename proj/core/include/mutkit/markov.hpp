#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mutkit/laurent.hpp"
#include "mutkit/mutation.hpp"
#include "mutkit/polytope.hpp"

namespace mutkit {

// Positive solution of a^2 + b^2 + c^2 = 3abc, kept sorted a <= b <= c.
class MarkovTriple {
public:
    MarkovTriple() : a_(1), b_(1), c_(1) {}  // the root triple
    MarkovTriple(Int a, Int b, Int c);
    static bool satisfies_equation(const Int& a, const Int& b, const Int& c);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    std::vector<Int> sorted_entries() const { return {a_, b_, c_}; }
    std::string str() const;

    friend bool operator==(const MarkovTriple& x, const MarkovTriple& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }
    friend bool operator<(const MarkovTriple& x, const MarkovTriple& y) {
        return std::tie(x.a_, x.b_, x.c_) < std::tie(y.a_, y.b_, y.c_);
    }

private:
    Int a_, b_, c_;
};

// Vieta step on one coordinate: x -> 3 * (product of the other two) - x.
MarkovTriple vieta_step(const MarkovTriple& t, int index);

std::optional<MarkovTriple> markov_parent(const MarkovTriple& t);

// New triples one Vieta step away, excluding the parent edge.
std::vector<MarkovTriple> markov_children(const MarkovTriple& t);

struct MarkovNode {
    MarkovTriple triple;
    std::optional<MarkovTriple> parent;
    int depth = 0;
};

// Breadth-first, canonically ordered, duplicate-free listing of all triples
// within `depth` Vieta steps of (1,1,1).
std::vector<MarkovNode> enumerate_tree(int depth);

// x_1 + ... + x_n + 1/(x_1 ... x_n)
LaurentPoly clifford_potential(int n);

// One Markov edge of the pipeline, kept for provenance.
struct PipelineStep {
    MarkovTriple from;
    MarkovTriple to;
    WidthVector w;
    LatticePolytope factor;
    std::optional<IntMat> basis_change;  // U with last row w, when algebra ran
    bool algebraic = false;
};

struct NodeArtifacts {
    MarkovTriple triple;
    int n = 0;
    bool exotic = false;
    std::optional<LaurentPoly> potential;
    LatticePolytope polytope;
    std::optional<WidthVector> width;  // validated width vector of a lift node
    std::vector<PipelineStep> steps;
    // exotic-only data
    std::optional<LaurentPoly> factor_potential;   // W_Lambda used in the surgery
    std::optional<IntMat> basis_change;            // U used for the surgery
    std::optional<Exponent> base_monomial;         // v fed to the augmentation lift
    std::optional<Int> augmentation_index;         // sublattice index of that lift
    bool augmentation_checked = false;             // Newton polytopes matched
};

// Generates and caches lifted and exotic data per (triple, dimension),
// walking the Markov tree by mutation from the Clifford potential.
class Pipeline {
public:
    explicit Pipeline(SearchOptions opts = {});
    const NodeArtifacts& lifted(const MarkovTriple& t, int n);
    const NodeArtifacts& exotic(const MarkovTriple& t, int n);

private:
    NodeArtifacts build_lifted(const MarkovTriple& t, int n);
    NodeArtifacts build_exotic(const MarkovTriple& t, int n);
    NodeArtifacts step_node(const NodeArtifacts& parent, const MarkovTriple& child);
    SearchOptions opts_;
    std::map<std::tuple<Int, Int, Int, int, bool>, NodeArtifacts> cache_;
};

LatticePolytope vianna_triangle(const MarkovTriple& t);
std::pair<std::optional<LaurentPoly>, LatticePolytope> lifted_vianna(const MarkovTriple& t, int n);
std::pair<std::optional<LaurentPoly>, LatticePolytope> exotic_lift(const MarkovTriple& t, int n);

struct FamilyRow {
    MarkovTriple triple;
    std::string variant;  // "lift" or "exotic"
    int n = 0;
    bool ok = false;
    std::string error;
    std::optional<Fingerprint> fp;
    std::optional<LatticePolytope> polytope;
    bool distinct_from_all = false;
};

struct FamilyReport {
    std::vector<FamilyRow> rows;
    // equivalence matrix over the rows: symmetric, true diagonal
    std::vector<std::vector<bool>> equivalent;
    bool complete = true;
};

// Fingerprints of lift and exotic variants for every triple within `depth`,
// with the pairwise equivalence decided by fingerprint comparison and, on
// ties, by the exact equivalence search.
FamilyReport family_report(int depth, int n, Pipeline& pipeline);
FamilyReport family_report(int depth, int n);

}  // namespace mutkit
