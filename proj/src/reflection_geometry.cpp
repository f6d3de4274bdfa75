#include "fusioncox/reflection_geometry.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "fusioncox/checked_int.hpp"
#include "fusioncox/errors.hpp"

namespace fusioncox {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr size_t kRootCountCap = 200000;

// Exact rational scalar over checked 64-bit integers, normalized so the
// denominator is positive and the fraction is reduced.
struct Rat {
  Int num = 0;
  Int den = 1;

  static Rat of(Int n) { return Rat{n, 1}; }

  static Rat make(Int n, Int d) {
    if (d == 0) throw NumericalError("rational with zero denominator");
    if (d < 0) {
      n = checked_sub(0, n);
      d = checked_sub(0, d);
    }
    const Int g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Rat{n, d};
  }

  bool is_zero() const { return num == 0; }
  int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }

  Rat operator-(const Rat& o) const {
    return make(checked_sub(checked_mul(num, o.den), checked_mul(o.num, den)),
                checked_mul(den, o.den));
  }
  Rat operator*(const Rat& o) const {
    return make(checked_mul(num, o.num), checked_mul(den, o.den));
  }
  Rat operator/(const Rat& o) const {
    if (o.num == 0) throw NumericalError("rational division by zero");
    return make(checked_mul(num, o.den), checked_mul(den, o.num));
  }
};

}  // namespace

RealMatrix real_cartan_from_coxeter(const CoxeterMatrix& coxeter) {
  const int n = coxeter.rank();
  RealMatrix cartan(n, n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) {
        cartan(s, t) = 2.0;
      } else {
        const int m = coxeter.label(s, t);
        cartan(s, t) = (m == CoxeterMatrix::kInfinity) ? -2.0 : -2.0 * std::cos(kPi / m);
      }
    }
  }
  return cartan;
}

RealMatrix folded_cartan(const GeometricRealisation& real) {
  const int n = real.coxeter.rank();
  const std::vector<double> dims = basis_fpdims(*real.ring);
  RealMatrix cartan(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) cartan(s, t) = fpdim(real.r(s, t), dims);
  return cartan;
}

void check_real_cartan(const RealMatrix& cartan, double tol) {
  if (cartan.rows() != cartan.cols()) throw StructuralError("Cartan matrix must be square");
  for (Eigen::Index i = 0; i < cartan.rows(); ++i) {
    if (std::abs(cartan(i, i) - 2.0) > tol)
      throw StructuralError("Cartan matrix must have diagonal 2");
    for (Eigen::Index j = 0; j < cartan.cols(); ++j)
      if (std::abs(cartan(i, j) - cartan(j, i)) > tol)
        throw StructuralError("Cartan matrix must be symmetric");
  }
}

std::string system_class_name(SystemClass c) {
  switch (c) {
    case SystemClass::finite: return "finite";
    case SystemClass::affine: return "affine";
    case SystemClass::indefinite: return "indefinite";
    case SystemClass::ambiguous: return "ambiguous";
  }
  return "unknown";
}

SystemClass classify_integer(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  if (cartan.cols() != n) throw StructuralError("classification requires a square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cartan(i, j) != cartan(j, i))
        throw StructuralError("classification requires a symmetric matrix");

  // Symmetric congruence elimination (iterated Schur complements) preserves
  // the inertia, so the pivot signs and the leftover kernel decide the class.
  std::vector<Rat> mat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mat[i * n + j] = Rat::of(cartan(i, j));
  std::vector<char> active(n, 1);
  int kernel = 0;

  for (;;) {
    int pivot = -1;
    for (int i = 0; i < n && pivot < 0; ++i)
      if (active[i] && !mat[i * n + i].is_zero()) pivot = i;
    if (pivot < 0) {
      // Every active diagonal vanishes. A PSD matrix with a zero diagonal
      // entry has a zero row, so any surviving off-diagonal entry forces a
      // negative 2x2 principal minor.
      for (int i = 0; i < n; ++i) {
        if (!active[i]) continue;
        for (int j = 0; j < n; ++j)
          if (active[j] && j != i && !mat[i * n + j].is_zero()) return SystemClass::indefinite;
      }
      for (int i = 0; i < n; ++i) kernel += active[i] ? 1 : 0;
      break;
    }
    const Rat d = mat[pivot * n + pivot];
    if (d.sign() < 0) return SystemClass::indefinite;
    for (int i = 0; i < n; ++i) {
      if (!active[i] || i == pivot) continue;
      const Rat f = mat[i * n + pivot] / d;
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (!active[j] || j == pivot) continue;
        mat[i * n + j] = mat[i * n + j] - f * mat[pivot * n + j];
      }
    }
    active[pivot] = 0;
    bool any = false;
    for (int i = 0; i < n; ++i) any = any || active[i];
    if (!any) break;
  }
  return kernel > 0 ? SystemClass::affine : SystemClass::finite;
}

SystemClass classify(const RealMatrix& cartan, double tol) {
  check_real_cartan(cartan, 1e-9);
  const int n = static_cast<int>(cartan.rows());
  // A matrix whose entries sit within tol of integers is classified exactly
  // through the rational path; -2cos(pi/m) entries are far from integers for
  // every label that produces an irrational value.
  bool integral = true;
  IntMatrix rounded(n, n);
  for (int i = 0; i < n && integral; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = cartan(i, j);
      const double r = std::round(x);
      if (std::abs(x - r) > tol) {
        integral = false;
        break;
      }
      rounded(i, j) = static_cast<Int>(r);
    }
  }
  if (integral) return classify_integer(rounded);

  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(cartan);
  if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue computation failed");
  const double lambda_min = solver.eigenvalues().minCoeff();
  if (lambda_min > tol) return SystemClass::finite;
  if (lambda_min < -tol) return SystemClass::indefinite;
  return SystemClass::ambiguous;
}

std::optional<long> coxeter_number(const RealMatrix& cartan, double tol, long cap) {
  const SystemClass cls = classify(cartan, tol);
  if (cls != SystemClass::finite) return std::nullopt;
  const int n = static_cast<int>(cartan.rows());

  // Row convention: applying reflection i maps v to v * R_i, where R_i is the
  // identity with column i replaced so that (v R_i)_i = v_i - sum_t C(i,t) v_t.
  RealMatrix coxeter_element = RealMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    RealMatrix refl = RealMatrix::Identity(n, n);
    for (int t = 0; t < n; ++t) refl(t, i) -= cartan(i, t);
    coxeter_element = refl * coxeter_element;
  }

  RealMatrix power = coxeter_element;
  for (long k = 1; k <= cap; ++k) {
    if ((power - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <= tol) return k;
    power = power * coxeter_element;
  }
  throw NumericalError("Coxeter element order exceeded the iteration cap");
}

namespace {

template <class S, class Dedup>
RootEnumeration<S> positive_roots_impl(const DenseMatrix<S>& cartan, int depth_cap,
                                       Dedup&& seen_insert, double tol) {
  const int n = static_cast<int>(cartan.rows());
  RootEnumeration<S> out;
  std::vector<DenseVector<S>> frontier;
  for (int i = 0; i < n; ++i) {
    DenseVector<S> e = DenseVector<S>::Zero(n);
    e[i] = S(1);
    if (seen_insert(e)) {
      out.roots.push_back(e);
      frontier.push_back(e);
    }
  }
  int depth = 0;
  while (!frontier.empty()) {
    if (depth >= depth_cap) {
      out.complete = false;
      return out;
    }
    ++depth;
    std::vector<DenseVector<S>> next;
    for (const auto& root : frontier) {
      for (int i = 0; i < n; ++i) {
        DenseVector<S> image = reflect<S>(cartan, i, root);
        bool has_neg = false;
        bool has_pos = false;
        for (int t = 0; t < n; ++t) {
          const double x = static_cast<double>(image[t]);
          if (x < -tol) has_neg = true;
          if (x > tol) has_pos = true;
        }
        if (has_neg && has_pos)
          throw NumericalError("reflection produced a vector with mixed signs");
        if (has_neg) continue;  // negative root
        if (seen_insert(image)) {
          if (out.roots.size() >= kRootCountCap)
            throw NumericalError("positive root enumeration exceeded the size cap");
          out.roots.push_back(image);
          next.push_back(image);
        }
      }
    }
    frontier = std::move(next);
  }
  out.complete = true;
  return out;
}

}  // namespace

RootEnumeration<Int> positive_roots(const IntMatrix& cartan, int depth_cap) {
  std::set<std::vector<Int>> seen;
  auto insert = [&seen](const IntVector& v) {
    return seen.insert(std::vector<Int>(v.data(), v.data() + v.size())).second;
  };
  return positive_roots_impl<Int>(cartan, depth_cap, insert, 0.5);
}

RootEnumeration<double> positive_roots_real(const RealMatrix& cartan, int depth_cap, double tol) {
  // Rounded-key buckets with an inside-bucket tolerance comparison keep the
  // dedup robust against floating drift.
  std::map<std::vector<long long>, std::vector<RealVector>> seen;
  auto insert = [&seen, tol](const RealVector& v) {
    std::vector<long long> key(static_cast<size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) key[i] = llround(v[i] * 1e7);
    auto& bucket = seen[key];
    for (const auto& u : bucket)
      if ((u - v).cwiseAbs().maxCoeff() <= tol) return false;
    bucket.push_back(v);
    return true;
  };
  return positive_roots_impl<double>(cartan, depth_cap, insert, tol);
}

RealVector normalize_functional(RealVector v, double tol) {
  const double norm = v.norm();
  if (norm <= tol) throw NumericalError("cannot normalize a zero functional");
  v /= norm;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > tol) {
      if (v[i] < 0) v = -v;
      break;
    }
  }
  return v;
}

RealVector restrict_hyperplane(const UnfoldedSystem& u, const IntVector& root, double tol) {
  const int n = u.source.coxeter.rank();
  const int q = u.source.ring->rank();
  if (root.size() != static_cast<Eigen::Index>(u.vertices.size()))
    throw StructuralError("root length does not match the unfolded rank");
  RealVector out = RealVector::Zero(n);
  for (int s = 0; s < n; ++s)
    for (int b = 0; b < q; ++b)
      out[s] += u.basis_fpdim[b] * static_cast<double>(root[u.vertex_index(b, s)]);
  return normalize_functional(out, tol);
}

HyperplaneTheoremReport verify_hyperplane_theorem(const UnfoldedSystem& u, double tol) {
  HyperplaneTheoremReport report;
  const SystemClass unfolded_class = classify_integer(u.cartan_z);
  const RealMatrix folded = folded_cartan(u.source);
  const SystemClass folded_class = classify(folded, tol);
  if (unfolded_class != folded_class) {
    throw VerificationError("classification mismatch: unfolded system is " +
                            system_class_name(unfolded_class) + " but folded system is " +
                            system_class_name(folded_class));
  }
  if (unfolded_class != SystemClass::finite) {
    report.applicable = false;
    report.detail = "systems are of " + system_class_name(unfolded_class) +
                    " type; hyperplane comparison needs finite type";
    return report;
  }
  report.applicable = true;

  const int depth_cap = 1 << 20;  // finite type: enumeration terminates on its own
  const auto unfolded_roots = positive_roots(u.cartan_z, depth_cap);
  const auto folded_roots = positive_roots_real(folded, depth_cap, tol);
  report.unfolded_root_count = static_cast<int>(unfolded_roots.roots.size());

  std::vector<RealVector> folded_normals;
  folded_normals.reserve(folded_roots.roots.size());
  for (const auto& root : folded_roots.roots)
    folded_normals.push_back(normalize_functional(root, tol));
  std::sort(folded_normals.begin(), folded_normals.end(),
            [](const RealVector& a, const RealVector& b) {
              return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                                  b.data() + b.size());
            });
  report.folded_hyperplane_count = static_cast<int>(folded_normals.size());
  report.fiber_sizes.assign(folded_normals.size(), 0);

  bool ok = true;
  std::ostringstream detail;
  for (const auto& root : unfolded_roots.roots) {
    const RealVector restricted = restrict_hyperplane(u, root, tol);
    int match = -1;
    for (size_t i = 0; i < folded_normals.size(); ++i) {
      if ((folded_normals[i] - restricted).cwiseAbs().maxCoeff() <= tol) {
        match = static_cast<int>(i);
        break;
      }
    }
    if (match < 0) {
      ok = false;
      detail << "a restricted hyperplane has no folded counterpart; ";
      break;
    }
    ++report.fiber_sizes[static_cast<size_t>(match)];
  }
  if (ok) {
    for (size_t i = 0; i < report.fiber_sizes.size(); ++i) {
      if (report.fiber_sizes[i] == 0) {
        ok = false;
        detail << "a folded hyperplane is missed by every restriction; ";
        break;
      }
    }
  }
  report.verified = ok;
  report.detail = detail.str();
  return report;
}

ChamberOrbit chamber_orbit(const RealMatrix& cartan, int length_bound, double tol) {
  check_real_cartan(cartan, 1e-9);
  if (length_bound < 0 || length_bound > 12)
    throw StructuralError("orbit length bound must lie between 0 and 12");
  const int n = static_cast<int>(cartan.rows());
  ChamberOrbit orbit;

  std::map<std::vector<long long>, std::vector<RealMatrix>> seen;
  auto insert = [&seen, tol](const RealMatrix& m) {
    std::vector<long long> key(static_cast<size_t>(m.size()));
    for (Eigen::Index i = 0; i < m.size(); ++i) key[i] = llround(m.data()[i] * 1e7);
    auto& bucket = seen[key];
    for (const auto& other : bucket)
      if ((other - m).cwiseAbs().maxCoeff() <= tol) return false;
    bucket.push_back(m);
    return true;
  };

  std::vector<RealMatrix> generators;
  for (int i = 0; i < n; ++i) {
    RealMatrix refl = RealMatrix::Identity(n, n);
    for (int t = 0; t < n; ++t) refl(t, i) -= cartan(i, t);
    generators.push_back(refl);
  }

  OrbitElement identity{{}, RealMatrix::Identity(n, n)};
  insert(identity.matrix);
  orbit.elements.push_back(identity);
  size_t layer_begin = 0;
  for (int length = 1; length <= length_bound; ++length) {
    const size_t layer_end = orbit.elements.size();
    for (size_t e = layer_begin; e < layer_end; ++e) {
      for (int s = 0; s < n; ++s) {
        RealMatrix m = generators[s] * orbit.elements[e].matrix;
        if (!insert(m)) continue;
        std::vector<int> word = orbit.elements[e].word;
        word.push_back(s);
        orbit.elements.push_back(OrbitElement{std::move(word), std::move(m)});
      }
    }
    layer_begin = layer_end;
    if (layer_begin == orbit.elements.size()) {  // no new elements: closed
      orbit.complete = true;
      return orbit;
    }
  }
  orbit.complete = false;
  return orbit;
}

MeetReport hyperplane_meets_orbit(const ChamberOrbit& orbit, const RealVector& functional,
                                  double tol) {
  MeetReport report;
  if (orbit.elements.empty()) throw StructuralError("orbit is empty");
  if (functional.size() != orbit.elements.front().matrix.rows())
    throw StructuralError("functional length does not match the orbit rank");

  bool saw_positive = false;
  bool saw_negative = false;
  std::vector<int> first_positive_word;
  std::vector<int> first_negative_word;

  for (const auto& element : orbit.elements) {
    // Row convention: the image of the functional's root under the element is
    // the row vector functional * matrix; the word acting on the chamber is
    // the reverse of the element's word.
    const RealVector image = element.matrix.transpose() * functional;
    std::vector<int> chamber_word(element.word.rbegin(), element.word.rend());

    const double sample = image.sum();  // value at an interior chamber point
    if (std::abs(sample) <= tol) {
      report.outcome = MeetOutcome::meets;
      report.witness_word = chamber_word;
      return report;
    }
    bool vertex_positive = false;
    bool vertex_negative = false;
    for (Eigen::Index i = 0; i < image.size(); ++i) {
      if (image[i] > tol) vertex_positive = true;
      if (image[i] < -tol) vertex_negative = true;
    }
    if (vertex_positive && vertex_negative) {  // sign change inside one chamber
      report.outcome = MeetOutcome::meets;
      report.witness_word = chamber_word;
      return report;
    }
    if (sample > tol && !saw_positive) {
      saw_positive = true;
      first_positive_word = chamber_word;
    }
    if (sample < -tol && !saw_negative) {
      saw_negative = true;
      first_negative_word = chamber_word;
    }
    if (saw_positive && saw_negative) {  // sign change across chambers
      report.outcome = MeetOutcome::meets;
      report.witness_word = first_negative_word;
      return report;
    }
  }

  report.outcome = MeetOutcome::not_up_to_bound;
  report.all_samples_positive = saw_positive && !saw_negative;
  report.all_samples_negative = saw_negative && !saw_positive;
  return report;
}

}  // namespace fusioncox
