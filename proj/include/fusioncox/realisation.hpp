#pragma once

#include <span>
#include <string>
#include <vector>

#include "fusioncox/coxeter.hpp"
#include "fusioncox/fusion_ring.hpp"

namespace fusioncox {

// Square matrix over a fusion ring, acting on row vectors from the right.
// Scalars multiply rows from the left. Group words follow the standard
// left-action convention: the word s1...sk has matrix [sk] * ... * [s1],
// so its rightmost letter reaches the vector first and appending a letter
// to a word multiplies its matrix on the left.
class RMatrix {
public:
  RMatrix(RingPtr ring, int n);  // zero matrix
  static RMatrix identity(const RingPtr& ring, int n);

  int size() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  const RingElement& at(int row, int col) const { return e_[static_cast<size_t>(row * n_ + col)]; }
  RingElement& at(int row, int col) { return e_[static_cast<size_t>(row * n_ + col)]; }

  RMatrix operator*(const RMatrix& other) const;
  bool operator==(const RMatrix& other) const;
  bool operator!=(const RMatrix& other) const { return !(*this == other); }

  // Image of the row vector v under this matrix: v * M.
  std::vector<RingElement> apply_row(const std::vector<RingElement>& v) const;

private:
  RingPtr ring_;
  int n_;
  std::vector<RingElement> e_;
};

// A realisation of a Coxeter system over a fusion ring: the free module on
// the generators together with the Cartan matrix r(s,t) of the sesquilinear
// form, r(s,t) = B(alpha_s, alpha_t). Geometric conditions (diagonal 2,
// non-positive off-diagonal entries, star-symmetry, FP-dimension matching
// the Coxeter labels) are verified at construction.
struct GeometricRealisation {
  RingPtr ring;
  CoxeterMatrix coxeter;
  std::vector<RingElement> cartan;  // row-major, cartan[s * rank + t] = r(s,t)

  int rank() const { return coxeter.rank(); }
  const RingElement& r(int s, int t) const {
    return cartan[static_cast<size_t>(s * coxeter.rank() + t)];
  }
};

struct GeometricCheckOptions {
  double fpdim_tol = 1e-9;
};

// Builds a realisation and verifies the geometric conditions; throws
// StructuralError for shape problems and VerificationError when a geometric
// condition fails (the message names the offending pair).
GeometricRealisation make_realisation(RingPtr ring, CoxeterMatrix coxeter,
                                      std::vector<RingElement> cartan,
                                      const GeometricCheckOptions& opts = {});

// B(u, v) for row coordinate vectors u, v over the generators:
// linear in v, twisted by the involution in u, B(x a_s, y a_t) = y r(s,t) x*.
RingElement sesquilinear_form(const GeometricRealisation& real,
                              const std::vector<RingElement>& u,
                              const std::vector<RingElement>& v);

// Matrix of the generator s acting on row vectors: identity except in
// column s, where row t carries delta(t,s) - r(s,t). Satisfies [s]^2 = Id.
RMatrix generator_matrix(const GeometricRealisation& real, int s);

// Matrix of the word s1...sk: [sk] * ... * [s1], the rightmost letter
// acting on row vectors first.
RMatrix word_matrix(const GeometricRealisation& real, std::span<const int> word);

// --- defining-relation verification -----------------------------------------

enum class RelationStatus { verified, failed, vacuous, unchecked };

struct RelationEntry {
  int s, t;   // s == t entries record the involution check [s]^2 = Id
  int order;  // Coxeter label (0 = infinite); 1 for involution entries
  RelationStatus status;
};

struct RelationReport {
  std::vector<RelationEntry> entries;
  bool form_invariant = true;  // B(s u, s v) = B(u, v) on all basis pairs
  bool ok() const;             // no failures (vacuous/unchecked allowed)
  bool conclusive() const;     // additionally, nothing was left unchecked
};

// Checks [s]^2 = Id for every generator, ([s][t])^m = Id for every finite
// label m up to relation_cap (entries above the cap are reported as
// unchecked, infinite labels as vacuous), and invariance of the form on all
// basis pairs. All comparisons are exact.
RelationReport verify_coxeter_relations(const GeometricRealisation& real, int relation_cap = 24);

// --- builders ----------------------------------------------------------------

enum class RealisationVariant { standard, even, infty_s3 };

RealisationVariant parse_variant(const std::string& name);
std::string variant_name(RealisationVariant v);

// Builds the canonical realisation of a Coxeter matrix over the tensor
// product of one quotient ring per distinct off-diagonal label:
//  - standard: label m contributes build_verlinde(m) and r(s,t) = -x_m,
//    with x_2 = 0, and the infinite label contributing the rank-1 ring with
//    x = 2.
//  - even: odd labels m >= 3 contribute build_verlinde_even(m) with
//    r(s,t) = -P_{m-3}(x_m); other labels as standard.
//  - infty_s3: infinite labels contribute build_rep_s3() with r(s,t) = -V;
//    finite labels as standard.
GeometricRealisation build_rm_realisation(const CoxeterMatrix& coxeter, RealisationVariant variant,
                                          const GeometricCheckOptions& opts = {});

}  // namespace fusioncox
