#include "fusioncox/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fusioncox {

FusionRing::FusionRing(std::string name, std::vector<std::string> basis_labels, int unit,
                       std::vector<int> involution, std::vector<Int> mult_tensor)
    : name_(std::move(name)),
      labels_(std::move(basis_labels)),
      rank_(labels_.size()),
      unit_(unit),
      involution_(std::move(involution)),
      mult_(std::move(mult_tensor)) {
  if (rank_ == 0) throw StructuralError("fusion ring needs at least one basis element");
  if (unit_ < 0 || static_cast<size_t>(unit_) >= rank_)
    throw StructuralError("unit index out of range");
  if (involution_.size() != rank_)
    throw StructuralError("involution permutation has wrong length");
  for (int v : involution_)
    if (v < 0 || static_cast<size_t>(v) >= rank_)
      throw StructuralError("involution index out of range");
  if (mult_.size() != rank_ * rank_ * rank_)
    throw StructuralError("multiplication tensor has wrong size");
  for (Int v : mult_)
    if (v < 0) throw StructuralError("negative structure constant");
}

RingPtr FusionRing::create(std::string name, std::vector<std::string> basis_labels, int unit,
                           std::vector<int> involution, std::vector<Int> mult_tensor) {
  return std::make_shared<const FusionRing>(std::move(name), std::move(basis_labels), unit,
                                            std::move(involution), std::move(mult_tensor));
}

IntMatrix FusionRing::left_multiplication_matrix(int j) const {
  const int n = rank();
  IntMatrix m(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) m(k, i) = c(j, k, i);
  return m;
}

bool FusionRing::structurally_equal(const FusionRing& other) const {
  return rank_ == other.rank_ && unit_ == other.unit_ && involution_ == other.involution_ &&
         mult_ == other.mult_ && labels_ == other.labels_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) return false;
  return a == b || a->structurally_equal(*b);
}

// --- RingElement -----------------------------------------------------------

RingElement::RingElement(RingPtr ring, IntVector coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (!ring_) throw StructuralError("element without a ring");
  if (coeffs_.size() != ring_->rank())
    throw StructuralError("coefficient vector length does not match ring rank");
}

bool RingElement::is_zero() const {
  return (coeffs_.array() == 0).all();
}

bool RingElement::is_nonnegative() const {
  return (coeffs_.array() >= 0).all();
}

namespace {
void require_same_ring(const RingElement& a, const RingElement& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw StructuralError("elements of different rings cannot be combined");
}
}  // namespace

RingElement RingElement::operator+(const RingElement& other) const {
  require_same_ring(*this, other);
  IntVector out(coeffs_.size());
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
    out[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  return RingElement(ring_, std::move(out));
}

RingElement RingElement::operator-(const RingElement& other) const {
  require_same_ring(*this, other);
  IntVector out(coeffs_.size());
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
    out[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
  return RingElement(ring_, std::move(out));
}

RingElement RingElement::operator-() const {
  IntVector out(coeffs_.size());
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) out[i] = checked_sub(0, coeffs_[i]);
  return RingElement(ring_, std::move(out));
}

RingElement RingElement::operator*(const RingElement& other) const {
  require_same_ring(*this, other);
  const int n = ring_->rank();
  IntVector out = IntVector::Zero(n);
  for (int j = 0; j < n; ++j) {
    if (coeffs_[j] == 0) continue;
    for (int k = 0; k < n; ++k) {
      if (other.coeffs_[k] == 0) continue;
      const Int jk = checked_mul(coeffs_[j], other.coeffs_[k]);
      for (int i = 0; i < n; ++i) {
        const Int cjki = ring_->c(j, k, i);
        if (cjki != 0) out[i] = checked_add(out[i], checked_mul(jk, cjki));
      }
    }
  }
  return RingElement(ring_, std::move(out));
}

bool RingElement::operator==(const RingElement& other) const {
  require_same_ring(*this, other);
  return coeffs_ == other.coeffs_;
}

std::string RingElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < ring_->rank(); ++i) {
    const Int v = coeffs_[i];
    if (v == 0) continue;
    if (!first) out << (v > 0 ? " + " : " - ");
    else if (v < 0) out << "-";
    const Int mag = v > 0 ? v : -v;
    if (mag != 1) out << mag << "*";
    out << ring_->basis_labels()[static_cast<size_t>(i)];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

RingElement zero_element(const RingPtr& ring) {
  return RingElement(ring, IntVector::Zero(ring->rank()));
}

RingElement unit_element(const RingPtr& ring) {
  return basis_element(ring, ring->unit());
}

RingElement basis_element(const RingPtr& ring, int j) {
  if (j < 0 || j >= ring->rank()) throw StructuralError("basis index out of range");
  IntVector v = IntVector::Zero(ring->rank());
  v[j] = 1;
  return RingElement(ring, std::move(v));
}

RingElement scalar_element(const RingPtr& ring, Int n) {
  IntVector v = IntVector::Zero(ring->rank());
  v[ring->unit()] = n;
  return RingElement(ring, std::move(v));
}

RingElement make_element(const RingPtr& ring, IntVector coeffs) {
  return RingElement(ring, std::move(coeffs));
}

RingElement scale(Int n, const RingElement& a) {
  IntVector out(a.coeffs().size());
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = checked_mul(n, a.coeffs()[i]);
  return RingElement(a.ring(), std::move(out));
}

RingElement involute(const RingElement& a) {
  const auto& ring = a.ring();
  IntVector out = IntVector::Zero(ring->rank());
  for (int j = 0; j < ring->rank(); ++j) out[ring->dual(j)] = a.coeff(j);
  return RingElement(ring, std::move(out));
}

// --- validation ------------------------------------------------------------

namespace {

struct ViolationSink {
  ValidationReport& report;
  size_t cap;
  bool add(std::string axiom, std::vector<int> indices, std::string detail) {
    if (report.violations.size() >= cap) {
      report.truncated = true;
      return false;  // stop collecting
    }
    report.violations.push_back({std::move(axiom), std::move(indices), std::move(detail)});
    return true;
  }
};

}  // namespace

ValidationReport validate(const FusionRing& ring, size_t max_violations) {
  ValidationReport report;
  ViolationSink sink{report, max_violations};
  const int n = ring.rank();
  const int e = ring.unit();

  // Unit acts as identity on both sides.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const Int want = (k == i) ? 1 : 0;
      if (ring.c(e, k, i) != want)
        if (!sink.add("unit", {e, k, i}, "left multiplication by the unit is not the identity"))
          return report;
      if (ring.c(k, e, i) != want)
        if (!sink.add("unit", {k, e, i}, "right multiplication by the unit is not the identity"))
          return report;
    }

  // Products of basis elements never vanish.
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      bool nonzero = false;
      for (int i = 0; i < n; ++i)
        if (ring.c(j, k, i) > 0) {
          nonzero = true;
          break;
        }
      if (!nonzero)
        if (!sink.add("nondegeneracy", {j, k}, "product of basis elements is zero")) return report;
    }

  // Associativity: (b_j b_k) b_l = b_j (b_k b_l).
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int i = 0; i < n; ++i) {
          Int lhs = 0, rhs = 0;
          for (int m = 0; m < n; ++m) {
            lhs = checked_add(lhs, checked_mul(ring.c(j, k, m), ring.c(m, l, i)));
            rhs = checked_add(rhs, checked_mul(ring.c(k, l, m), ring.c(j, m, i)));
          }
          if (lhs != rhs)
            if (!sink.add("associativity", {j, k, l, i}, "associativity fails")) return report;
        }

  // The involution is a permutation of order two fixing nothing structural.
  for (int j = 0; j < n; ++j)
    if (ring.dual(ring.dual(j)) != j)
      if (!sink.add("involution-order", {j}, "involution is not an involution")) return report;

  // (b_j b_k)* = b_k* b_j* at the level of structure constants.
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (ring.c(j, k, i) != ring.c(ring.dual(k), ring.dual(j), ring.dual(i)))
          if (!sink.add("involution-antihom", {j, k, i},
                        "involution does not reverse products"))
            return report;

  // The unit coefficient pairs a basis element exactly with its dual.
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Int want = (k == ring.dual(j)) ? 1 : 0;
      if (ring.c(j, k, e) != want)
        if (!sink.add("unit-pairing", {j, k}, "unit coefficient of a product is wrong"))
          return report;
    }

  // Frobenius reciprocity (a consequence of the axioms above; checked as a
  // cross-verification of the tensor).
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        const Int v = ring.c(j, k, i);
        if (v != ring.c(ring.dual(j), i, k) || v != ring.c(i, ring.dual(k), j))
          if (!sink.add("frobenius", {j, k, i}, "Frobenius reciprocity fails")) return report;
      }

  return report;
}

// --- FP dimensions ----------------------------------------------------------

namespace {

// Perron eigenvalue of a non-negative integer matrix via power iteration on
// (M + I); the shift makes the dominant eigenvalue strictly dominant in
// modulus even for periodic matrices (e.g. permutation matrices).
double perron_eigenvalue(const IntMatrix& m, const FPDimOptions& opts) {
  const Eigen::Index n = m.rows();
  RealMatrix a = m.cast<double>();
  RealVector v = RealVector::Ones(n) / std::sqrt(static_cast<double>(n));
  double q = 0.0;
  for (long it = 0; it < opts.max_iterations; ++it) {
    RealVector w = a * v + v;  // (M + I) v
    const double norm = w.norm();
    if (norm == 0.0) throw NumericalError("power iteration collapsed to zero");
    v = w / norm;
    RealVector mv = a * v;
    q = v.dot(mv);
    const double residual = (mv - q * v).norm();
    if (residual <= opts.residual_tol * (1.0 + std::abs(q))) return q;
  }
  RealVector mv = a * v;
  const double residual = (mv - q * v).norm();
  throw NumericalError("power iteration did not converge; residual " + std::to_string(residual));
}

}  // namespace

std::vector<double> basis_fpdims(const FusionRing& ring, const FPDimOptions& opts) {
  std::vector<double> out(static_cast<size_t>(ring.rank()));
  for (int j = 0; j < ring.rank(); ++j)
    out[static_cast<size_t>(j)] = perron_eigenvalue(ring.left_multiplication_matrix(j), opts);
  return out;
}

double fpdim(const RingElement& a, const std::vector<double>& basis_dims) {
  if (basis_dims.size() != static_cast<size_t>(a.ring()->rank()))
    throw StructuralError("basis dimension vector has wrong length");
  double sum = 0.0;
  for (int j = 0; j < a.ring()->rank(); ++j)
    sum += static_cast<double>(a.coeff(j)) * basis_dims[static_cast<size_t>(j)];
  return sum;
}

double fpdim(const RingElement& a, const FPDimOptions& opts) {
  return fpdim(a, basis_fpdims(*a.ring(), opts));
}

}  // namespace fusioncox
