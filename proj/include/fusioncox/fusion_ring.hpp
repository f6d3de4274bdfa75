#pragma once

#include <Eigen/Core>
#include <memory>
#include <string>
#include <vector>

#include "fusioncox/checked_int.hpp"
#include "fusioncox/errors.hpp"

namespace fusioncox {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;
using RealMatrix = DenseMatrix<double>;
using RealVector = DenseVector<double>;

class FusionRing;
using RingPtr = std::shared_ptr<const FusionRing>;

// A finite-rank unital ring with a distinguished basis, non-negative
// integer structure constants and a basis involution inducing an
// anti-involution. Immutable after construction; rings are shared by
// pointer and elements carry their ring.
//
// Structure constants are stored densely: c(j,k,i) is the coefficient of
// basis element i in the product (basis j) * (basis k).
class FusionRing {
public:
  FusionRing(std::string name, std::vector<std::string> basis_labels, int unit,
             std::vector<int> involution, std::vector<Int> mult_tensor);

  static RingPtr create(std::string name, std::vector<std::string> basis_labels, int unit,
                        std::vector<int> involution, std::vector<Int> mult_tensor);

  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  int unit() const { return unit_; }
  const std::vector<int>& involution() const { return involution_; }
  int dual(int j) const { return involution_[static_cast<size_t>(j)]; }

  Int c(int j, int k, int i) const {
    return mult_[(static_cast<size_t>(j) * rank_ + static_cast<size_t>(k)) * rank_ +
                 static_cast<size_t>(i)];
  }

  // Matrix of left multiplication by basis element j, rows = input basis
  // index k, columns = output basis index i (entries c(j,k,i)).
  IntMatrix left_multiplication_matrix(int j) const;

  bool structurally_equal(const FusionRing& other) const;

private:
  std::string name_;
  std::vector<std::string> labels_;
  size_t rank_;
  int unit_;
  std::vector<int> involution_;
  std::vector<Int> mult_;
};

// An element of a fusion ring: integer coefficients over the basis.
// Arithmetic is exact; overflow throws.
class RingElement {
public:
  RingElement(RingPtr ring, IntVector coeffs);

  const RingPtr& ring() const { return ring_; }
  const IntVector& coeffs() const { return coeffs_; }
  Int coeff(int i) const { return coeffs_[i]; }

  bool is_zero() const;
  bool is_nonnegative() const;

  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& other) const;  // ring product, this order
  bool operator==(const RingElement& other) const;
  bool operator!=(const RingElement& other) const { return !(*this == other); }

  std::string to_string() const;

private:
  RingPtr ring_;
  IntVector coeffs_;
};

RingElement zero_element(const RingPtr& ring);
RingElement unit_element(const RingPtr& ring);
RingElement basis_element(const RingPtr& ring, int j);
RingElement scalar_element(const RingPtr& ring, Int n);  // n * unit
RingElement make_element(const RingPtr& ring, IntVector coeffs);
RingElement scale(Int n, const RingElement& a);

// The anti-involution r -> r* induced by the basis involution.
RingElement involute(const RingElement& a);

// True if the two rings may interoperate (same object or structurally equal).
bool same_ring(const RingPtr& a, const RingPtr& b);

// --- validation -----------------------------------------------------------

struct AxiomViolation {
  std::string axiom;         // which axiom failed
  std::vector<int> indices;  // witnessing basis indices
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool truncated = false;  // true if more violations exist than were recorded
  bool ok() const { return violations.empty(); }
};

// Checks every fusion-ring axiom and reports each failure with the axiom
// name and witnessing indices. Structural problems (sizes, negative
// entries, out-of-range indices) throw StructuralError from the ring
// constructor instead; by the time a FusionRing exists they cannot occur.
ValidationReport validate(const FusionRing& ring, size_t max_violations = 32);

// --- Frobenius-Perron dimensions ------------------------------------------

// Perron eigenvalue of (M + I) power iteration, where M is the left
// multiplication matrix of a basis element. Residual tolerance and the
// iteration cap are pinned; failure to converge throws NumericalError.
struct FPDimOptions {
  double residual_tol = 1e-12;
  long max_iterations = 100000;
};

// FP dimensions of all basis elements.
std::vector<double> basis_fpdims(const FusionRing& ring, const FPDimOptions& opts = {});

// FP dimension of an arbitrary element (linear extension of the basis
// values; agrees with the Perron eigenvalue on non-negative elements).
double fpdim(const RingElement& a, const FPDimOptions& opts = {});

// Same, reusing precomputed basis dimensions.
double fpdim(const RingElement& a, const std::vector<double>& basis_dims);

}  // namespace fusioncox
