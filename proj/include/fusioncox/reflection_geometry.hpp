#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusioncox/unfolding.hpp"

namespace fusioncox {

// --- real and integral Cartan matrices --------------------------------------

// Symmetric real Cartan matrix of a Coxeter matrix: diagonal 2, entry
// -2 cos(pi/m) for label m, -2 for the infinite label.
RealMatrix real_cartan_from_coxeter(const CoxeterMatrix& coxeter);

// FP-dimension image of the Cartan matrix of a realisation.
RealMatrix folded_cartan(const GeometricRealisation& real);

// Throws unless the matrix is square, symmetric and has diagonal 2.
void check_real_cartan(const RealMatrix& cartan, double tol = 1e-12);

// --- classification -----------------------------------------------------------

enum class SystemClass { finite, affine, indefinite, ambiguous };
std::string system_class_name(SystemClass c);

// Exact three-way classification of an integer symmetric Cartan matrix by
// rational congruence elimination: finite = positive definite, affine =
// positive semidefinite with kernel, indefinite otherwise.
SystemClass classify_integer(const IntMatrix& cartan);

// Classification of a real symmetric Cartan matrix. Integer-valued input
// is routed through the exact path; otherwise eigenvalues decide, and a
// smallest eigenvalue within +-tol of zero yields `ambiguous` rather than
// a silent guess.
SystemClass classify(const RealMatrix& cartan, double tol = 1e-9);

// Order of a Coxeter element (product of all simple reflections in index
// order): nullopt when the system is not of finite type, otherwise the
// smallest k <= cap with C^k = Id. Exceeding the cap throws NumericalError.
std::optional<long> coxeter_number(const RealMatrix& cartan, double tol = 1e-9, long cap = 10000);

// --- scalar-generic reflections and roots -------------------------------------

// Simple reflection i acting on a row coordinate vector: only coordinate i
// changes, by minus the Cartan pairing of row i with v.
template <class S>
DenseVector<S> reflect(const DenseMatrix<S>& cartan, int i, const DenseVector<S>& v) {
  DenseVector<S> out = v;
  S pairing = S(0);
  for (Eigen::Index t = 0; t < v.size(); ++t) pairing += cartan(i, t) * v[t];
  out[i] -= pairing;
  return out;
}

template <class S>
struct RootEnumeration {
  std::vector<DenseVector<S>> roots;  // positive roots in breadth-first order
  bool complete = false;              // false when the depth cap truncated
};

// Orbit closure of the simple roots, keeping the non-negative ones. Exact
// for integer scalars; real scalars dedup at 1e-7 rounding with a tolerance
// comparison inside buckets.
RootEnumeration<Int> positive_roots(const IntMatrix& cartan, int depth_cap);
RootEnumeration<double> positive_roots_real(const RealMatrix& cartan, int depth_cap,
                                            double tol = 1e-9);

// --- hyperplane restriction -----------------------------------------------------

// Canonical form of a linear functional: Euclidean norm 1, first coordinate
// of magnitude above tol positive. Zero functionals are rejected.
RealVector normalize_functional(RealVector v, double tol = 1e-9);

// Restriction of the reflection hyperplane of an unfolded root to the
// module-valued points: coordinate s collects the root coefficients over
// fiber s weighted by the FP dimension of the basis element. The result is
// the canonically normalized functional cutting out the restricted
// hyperplane.
RealVector restrict_hyperplane(const UnfoldedSystem& u, const IntVector& root, double tol = 1e-9);

struct HyperplaneTheoremReport {
  bool applicable = false;  // both systems of finite type
  bool verified = false;    // restricted set equals the folded set
  int unfolded_root_count = 0;
  int folded_hyperplane_count = 0;
  std::vector<int> fiber_sizes;  // per folded hyperplane, lexicographic order
  std::string detail;
};

// Compares { restricted unfolded reflection hyperplanes } with the
// reflection hyperplanes of the folded real realisation, as sets of
// normalized functionals at the given tolerance. Classifications of the
// two systems must agree; a disagreement throws VerificationError.
HyperplaneTheoremReport verify_hyperplane_theorem(const UnfoldedSystem& u, double tol = 1e-9);

// --- chamber orbits ---------------------------------------------------------------

struct OrbitElement {
  std::vector<int> word;  // shortlex normal form
  RealMatrix matrix;      // row-convention matrix of the element
};

struct ChamberOrbit {
  std::vector<OrbitElement> elements;  // sorted by length, then word
  bool complete = false;               // true when closed below the bound
};

// Enumerates the distinct chamber matrices up to the word-length bound;
// bounds above 12 are rejected as a combinatorial growth guard.
ChamberOrbit chamber_orbit(const RealMatrix& cartan, int length_bound, double tol = 1e-9);

enum class MeetOutcome { meets, not_up_to_bound };

struct MeetReport {
  MeetOutcome outcome = MeetOutcome::not_up_to_bound;
  std::vector<int> witness_word;  // chamber exhibiting the meet, when found
  bool all_samples_positive = false;
  bool all_samples_negative = false;
};

// Semi-decision of whether the hyperplane of the functional meets the
// chamber orbit: a vanishing interior sample or a strict sign change
// (across chambers, or across one chamber's vertex rays) certifies a meet;
// otherwise the result is inconclusive at this length bound.
MeetReport hyperplane_meets_orbit(const ChamberOrbit& orbit, const RealVector& functional,
                                  double tol = 1e-9);

}  // namespace fusioncox
