#include "fusioncox/realisation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "fusioncox/ring_builders.hpp"

namespace fusioncox {

// --- RMatrix -----------------------------------------------------------------

RMatrix::RMatrix(RingPtr ring, int n) : ring_(std::move(ring)), n_(n) {
  if (n_ <= 0) throw StructuralError("matrix size must be positive");
  e_.reserve(static_cast<size_t>(n_) * n_);
  for (int i = 0; i < n_ * n_; ++i) e_.push_back(zero_element(ring_));
}

RMatrix RMatrix::identity(const RingPtr& ring, int n) {
  RMatrix m(ring, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = unit_element(ring);
  return m;
}

RMatrix RMatrix::operator*(const RMatrix& other) const {
  if (n_ != other.n_ || !same_ring(ring_, other.ring_))
    throw StructuralError("matrix product shape or ring mismatch");
  RMatrix out(ring_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      RingElement sum = zero_element(ring_);
      // Operand order matters over non-commutative rings: row entry first.
      for (int k = 0; k < n_; ++k) sum = sum + at(i, k) * other.at(k, j);
      out.at(i, j) = std::move(sum);
    }
  return out;
}

bool RMatrix::operator==(const RMatrix& other) const {
  if (n_ != other.n_ || !same_ring(ring_, other.ring_)) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != other.e_[i]) return false;
  return true;
}

std::vector<RingElement> RMatrix::apply_row(const std::vector<RingElement>& v) const {
  if (static_cast<int>(v.size()) != n_) throw StructuralError("row vector length mismatch");
  std::vector<RingElement> out;
  out.reserve(static_cast<size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    RingElement sum = zero_element(ring_);
    for (int i = 0; i < n_; ++i) sum = sum + v[static_cast<size_t>(i)] * at(i, j);
    out.push_back(std::move(sum));
  }
  return out;
}

// --- construction and geometric checks ----------------------------------------

namespace {

double fpdim_of(const RingElement& a, const std::vector<double>& basis_dims) {
  double sum = 0.0;
  for (int j = 0; j < a.ring()->rank(); ++j)
    sum += static_cast<double>(a.coeff(j)) * basis_dims[static_cast<size_t>(j)];
  return sum;
}

}  // namespace

GeometricRealisation make_realisation(RingPtr ring, CoxeterMatrix coxeter,
                                      std::vector<RingElement> cartan,
                                      const GeometricCheckOptions& opts) {
  const int n = coxeter.rank();
  if (cartan.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
    throw StructuralError("Cartan matrix size does not match Coxeter rank");
  for (const auto& entry : cartan)
    if (!same_ring(entry.ring(), ring)) throw StructuralError("Cartan entry from a foreign ring");

  const ValidationReport ring_report = validate(*ring);
  if (!ring_report.ok())
    throw VerificationError("coefficient ring fails fusion axiom '" +
                            ring_report.violations.front().axiom + "'");

  GeometricRealisation real{std::move(ring), std::move(coxeter), std::move(cartan)};
  const std::vector<double> dims = basis_fpdims(*real.ring);
  const RingElement two = scalar_element(real.ring, 2);

  for (int s = 0; s < n; ++s) {
    if (real.r(s, s) != two)
      throw VerificationError("Cartan diagonal entry (" + std::to_string(s) + "," +
                              std::to_string(s) + ") is not 2");
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      const RingElement& rst = real.r(s, t);
      if (!(-rst).is_nonnegative())
        throw VerificationError("Cartan entry (" + std::to_string(s) + "," + std::to_string(t) +
                                ") is not of the form minus a non-negative element");
      if (real.r(t, s) != involute(rst))
        throw VerificationError("Cartan entries (" + std::to_string(s) + "," + std::to_string(t) +
                                ") and the transpose are not related by the involution");
      const double v = fpdim_of(rst, dims);
      const int m = real.coxeter.label(s, t);
      if (m == CoxeterMatrix::kInfinity) {
        if (v > -2.0 + opts.fpdim_tol)
          throw VerificationError("FP dimension of Cartan entry (" + std::to_string(s) + "," +
                                  std::to_string(t) + ") must be <= -2 for an infinite label");
      } else {
        const double want = -2.0 * std::cos(std::numbers::pi / static_cast<double>(m));
        if (std::abs(v - want) > opts.fpdim_tol)
          throw VerificationError("FP dimension of Cartan entry (" + std::to_string(s) + "," +
                                  std::to_string(t) + ") does not match the Coxeter label " +
                                  std::to_string(m));
        // Guard against drift: recover the label from the value and insist
        // the round trip lands on the same integer.
        if (v < 0.0 && v > -2.0) {
          const int recovered =
              static_cast<int>(std::lround(std::numbers::pi / std::acos(-v / 2.0)));
          if (recovered != m)
            throw VerificationError("FP dimension of Cartan entry (" + std::to_string(s) + "," +
                                    std::to_string(t) + ") recovers label " +
                                    std::to_string(recovered) + ", expected " + std::to_string(m));
        }
      }
    }
  }
  return real;
}

RingElement sesquilinear_form(const GeometricRealisation& real, const std::vector<RingElement>& u,
                              const std::vector<RingElement>& v) {
  const int n = real.rank();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw StructuralError("form arguments must have one coordinate per generator");
  RingElement sum = zero_element(real.ring);
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s)
      sum = sum + v[static_cast<size_t>(t)] * real.r(s, t) * involute(u[static_cast<size_t>(s)]);
  return sum;
}

RMatrix generator_matrix(const GeometricRealisation& real, int s) {
  const int n = real.rank();
  if (s < 0 || s >= n) throw StructuralError("generator index out of range");
  RMatrix m = RMatrix::identity(real.ring, n);
  // Row t of [s] is alpha_t minus r(s,t) alpha_s; only column s changes.
  for (int t = 0; t < n; ++t) m.at(t, s) = m.at(t, s) - real.r(s, t);
  return m;
}

RMatrix word_matrix(const GeometricRealisation& real, std::span<const int> word) {
  RMatrix m = RMatrix::identity(real.ring, real.rank());
  // The word s1...sk maps to [sk] * ... * [s1]; under the right action on
  // row vectors the rightmost letter is applied first (left-action words).
  for (const int s : word) m = generator_matrix(real, s) * m;
  return m;
}

// --- relation verification -----------------------------------------------------

bool RelationReport::ok() const {
  if (!form_invariant) return false;
  return std::none_of(entries.begin(), entries.end(),
                      [](const RelationEntry& e) { return e.status == RelationStatus::failed; });
}

bool RelationReport::conclusive() const {
  return ok() && std::none_of(entries.begin(), entries.end(), [](const RelationEntry& e) {
    return e.status == RelationStatus::unchecked;
  });
}

RelationReport verify_coxeter_relations(const GeometricRealisation& real, int relation_cap) {
  RelationReport report;
  const int n = real.rank();
  const RMatrix id = RMatrix::identity(real.ring, n);

  std::vector<RMatrix> gens;
  gens.reserve(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) gens.push_back(generator_matrix(real, s));

  for (int s = 0; s < n; ++s) {
    const bool ok = (gens[static_cast<size_t>(s)] * gens[static_cast<size_t>(s)]) == id;
    report.entries.push_back(
        {s, s, 1, ok ? RelationStatus::verified : RelationStatus::failed});
  }

  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      const int m = real.coxeter.label(s, t);
      if (m == CoxeterMatrix::kInfinity) {
        report.entries.push_back({s, t, m, RelationStatus::vacuous});
        continue;
      }
      if (m > relation_cap) {
        report.entries.push_back({s, t, m, RelationStatus::unchecked});
        continue;
      }
      const RMatrix st = gens[static_cast<size_t>(s)] * gens[static_cast<size_t>(t)];
      RMatrix power = RMatrix::identity(real.ring, n);
      for (int k = 0; k < m; ++k) power = power * st;
      report.entries.push_back(
          {s, t, m, power == id ? RelationStatus::verified : RelationStatus::failed});
    }

  // Invariance of the form under every generator, on all basis pairs.
  std::vector<std::vector<RingElement>> basis_rows;
  for (int a = 0; a < n; ++a) {
    std::vector<RingElement> row;
    for (int j = 0; j < n; ++j)
      row.push_back(j == a ? unit_element(real.ring) : zero_element(real.ring));
    basis_rows.push_back(std::move(row));
  }
  for (int s = 0; s < n && report.form_invariant; ++s) {
    std::vector<std::vector<RingElement>> images;
    for (int a = 0; a < n; ++a)
      images.push_back(gens[static_cast<size_t>(s)].apply_row(basis_rows[static_cast<size_t>(a)]));
    for (int a = 0; a < n && report.form_invariant; ++a)
      for (int b = 0; b < n; ++b) {
        const RingElement lhs = sesquilinear_form(real, images[static_cast<size_t>(a)],
                                                  images[static_cast<size_t>(b)]);
        if (lhs != real.r(a, b)) {
          report.form_invariant = false;
          break;
        }
      }
  }
  return report;
}

// --- canonical builders ---------------------------------------------------------

RealisationVariant parse_variant(const std::string& name) {
  if (name == "standard") return RealisationVariant::standard;
  if (name == "even") return RealisationVariant::even;
  if (name == "infty_s3") return RealisationVariant::infty_s3;
  throw StructuralError("unknown realisation variant '" + name +
                        "' (expected standard, even or infty_s3)");
}

std::string variant_name(RealisationVariant v) {
  switch (v) {
    case RealisationVariant::standard: return "standard";
    case RealisationVariant::even: return "even";
    case RealisationVariant::infty_s3: return "infty_s3";
  }
  throw StructuralError("bad variant");
}

namespace {

// Rank-1 integer ring; basis label chosen by the caller.
RingPtr build_rank_one_ring(const std::string& name, const std::string& label) {
  return FusionRing::create(name, {label}, 0, {0}, {1});
}

struct LabelFactor {
  RingPtr ring;
  RingElement element;  // the element -r(s,t) for pairs with this label
};

LabelFactor factor_for_label(int m, RealisationVariant variant) {
  if (m == CoxeterMatrix::kInfinity) {
    if (variant == RealisationVariant::infty_s3) {
      RingPtr ring = build_rep_s3();
      return {ring, basis_element(ring, 1)};  // V
    }
    RingPtr ring = build_rank_one_ring("verlinde(inf)", "D0(xinf)");
    return {ring, scalar_element(ring, 2)};  // x = 2 in the rank-1 quotient
  }
  if (variant == RealisationVariant::even && m >= 3 && m % 2 == 1) {
    RingPtr ring = build_verlinde_even(m);
    return {ring, basis_element(ring, (m - 3) / 2)};  // P_{m-3}(x_m)
  }
  RingPtr ring = build_verlinde(m);
  if (m == 2) return {ring, zero_element(ring)};  // x_2 = 0
  return {ring, basis_element(ring, 1)};          // x_m
}

}  // namespace

GeometricRealisation build_rm_realisation(const CoxeterMatrix& coxeter, RealisationVariant variant,
                                          const GeometricCheckOptions& opts) {
  const int n = coxeter.rank();

  // Distinct off-diagonal labels, finite ones ascending, infinity last.
  std::vector<int> labels;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (std::find(labels.begin(), labels.end(), coxeter.label(s, t)) == labels.end())
        labels.push_back(coxeter.label(s, t));
  std::sort(labels.begin(), labels.end(), [](int a, int b) {
    if (a == CoxeterMatrix::kInfinity) return false;
    if (b == CoxeterMatrix::kInfinity) return true;
    return a < b;
  });

  std::vector<LabelFactor> factors;
  factors.reserve(labels.size());
  for (const int m : labels) factors.push_back(factor_for_label(m, variant));

  RingPtr ring;
  if (factors.empty()) {
    ring = build_rank_one_ring("Z", "1");
  } else {
    ring = factors.front().ring;
    for (size_t f = 1; f < factors.size(); ++f) ring = build_tensor_product(ring, factors[f].ring);
  }

  // Embeds the designated element of factor f, all other factors at the unit.
  auto embed = [&](size_t f) {
    IntVector coeffs = IntVector::Zero(ring->rank());
    const IntVector& local = factors[f].element.coeffs();
    for (int i = 0; i < local.size(); ++i) {
      if (local[i] == 0) continue;
      size_t index = 0;
      for (size_t g = 0; g < factors.size(); ++g) {
        const int local_index = (g == f) ? i : factors[g].ring->unit();
        index = index * static_cast<size_t>(factors[g].ring->rank()) +
                static_cast<size_t>(local_index);
      }
      coeffs[static_cast<Eigen::Index>(index)] = local[i];
    }
    return make_element(ring, std::move(coeffs));
  };

  std::vector<RingElement> cartan;
  cartan.reserve(static_cast<size_t>(n) * n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) {
        cartan.push_back(scalar_element(ring, 2));
        continue;
      }
      const int m = coxeter.label(s, t);
      const size_t f = static_cast<size_t>(
          std::find(labels.begin(), labels.end(), m) - labels.begin());
      cartan.push_back(-embed(f));
    }

  return make_realisation(ring, coxeter, std::move(cartan), opts);
}

}  // namespace fusioncox
