#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mutkit/io.hpp"
#include "mutkit/laurent.hpp"
#include "mutkit/markov.hpp"
#include "mutkit/mutation.hpp"
#include "mutkit/polytope.hpp"
#include "mutkit/svg.hpp"

namespace testsup {

using namespace mutkit;

using Rng = std::mt19937_64;

IntVec iv(const std::vector<long>& v);
RatVec rv(const std::vector<long>& v);

LaurentPoly make_poly(int rank,
                      const std::vector<std::pair<std::vector<long>, std::string>>& terms);
LatticePolytope make_polytope(int rank, const std::vector<std::vector<long>>& pts);

// ---- corpus -----------------------------------------------------------

// (y + (1+x)^2)/z + z^3/(x y^2)
LaurentPoly w_bar_112_n3();
// y + (1+x)^2
LaurentPoly w_lambda_112_2d();
// 1/z + z^3 (y+(1+x)^2)^3 / (x y^2)
LaurentPoly w_tilde_112_n3();
// x_2 + ... + x_n + (1+x_1)^2 / (x_1 x_2^2 x_3 ... x_n)
LaurentPoly w_t112(int n);
// y_2 + ... + y_n + (1+y_1)^2
LaurentPoly lambda_112_family(int n);
// 1 + y_1 + ... + y_n
LaurentPoly one_plus_sum(int n);
// (1 + x_1 + ... + x_{n-1})/z + z^n / (x_1 ... x_{n-1}), the Clifford
// potential written with the width functional on the last axis
LaurentPoly clifford_axis_form(int n);

// basis rows used in the worked augmentation examples
IntMat clifford_paper_basis(int n);   // y_k -> x_1 ... x_k^2 ... x_n
IntMat family112_paper_basis(int n);  // y_1 -> x_1, y_k -> x_k * x^(1,2,1,...,1)

// unimodular correction with apply_unimodular(lift.lifted,
// basis_correction(lift, rows)) expressed in the given basis rows
UnimodularMap basis_correction(const LiftResult& lift, const IntMat& paper_basis);

// ---- random generators -------------------------------------------------

long rand_long(Rng& rng, long lo, long hi);
LaurentPoly random_poly(Rng& rng, int rank, int max_terms = 6, long exp_bound = 5,
                        long coeff_bound = 9);
UnimodularMap random_unimodular(Rng& rng, int n, int ops = 8);
std::vector<IntVec> random_points(Rng& rng, int rank, int count, long bound = 6);

// ---- independent oracles ------------------------------------------------

// Caratheodory enumeration: p in conv(points)?
bool oracle_contains(const RatVec& p, const std::vector<RatVec>& points);
// Linear-system division over the exponent box; verified by multiplication.
std::optional<LaurentPoly> oracle_divide(const LaurentPoly& f, const LaurentPoly& g);
// Vertex filter driven by oracle_contains.
std::vector<IntVec> oracle_hull_vertices(const std::vector<IntVec>& points);

// ---- property suites (criterion-sized, no test-framework macros) --------

struct SuiteResult {
    int cases = 0;
    int failures = 0;
};

SuiteResult suite_ring_axioms(unsigned seed, int cases);
SuiteResult suite_division_roundtrip(unsigned seed, int cases);
SuiteResult suite_newton_equivariance(unsigned seed, int cases);
SuiteResult suite_hull_idempotence(unsigned seed, int cases);
SuiteResult suite_containment_bruteforce(unsigned seed, int cases);
SuiteResult suite_mutation_roundtrip(unsigned seed, int min_cases);
SuiteResult suite_witness_independence(unsigned seed, int min_cases);
SuiteResult suite_serialization_roundtrip(unsigned seed, int cases);

// ---- svg helpers --------------------------------------------------------

std::set<IntVec> svg_markers(const std::string& svg, const std::string& cls);

}  // namespace testsup
