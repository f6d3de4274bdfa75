#pragma once

// Shared fixture corpus for the test suite: Coxeter graphs of rank <= 4 with
// edge labels drawn from {2,3,4,5,6,7,infinity}, together with closed-form
// expectations (finiteness class, group order, Coxeter-element order) taken
// from the classical tables, independently of the code under test.

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <fusioncox/coxeter.hpp>
#include <fusioncox/realisation.hpp>
#include <fusioncox/reflection_geometry.hpp>
#include <fusioncox/ring_builders.hpp>

namespace fixtures {

using fusioncox::CoxeterMatrix;
using fusioncox::SystemClass;

// Coxeter matrix from an explicit edge list (s, t, label); absent pairs
// commute. Labels use the library encoding, 0 = infinity.
inline CoxeterMatrix from_edges(int rank, const std::vector<std::tuple<int, int, int>>& edges) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Constant(rank, rank, 2);
  for (int s = 0; s < rank; ++s) m(s, s) = 1;
  for (const auto& [s, t, label] : edges) {
    m(s, t) = label;
    m(t, s) = label;
  }
  return CoxeterMatrix(m);
}

// Path on labels.size() + 1 vertices with the given consecutive edge labels.
inline CoxeterMatrix path(const std::vector<int>& labels) {
  const int rank = static_cast<int>(labels.size()) + 1;
  std::vector<std::tuple<int, int, int>> edges;
  for (int i = 0; i < rank - 1; ++i) edges.emplace_back(i, i + 1, labels[static_cast<size_t>(i)]);
  return from_edges(rank, edges);
}

// Cycle on labels.size() vertices, edge (i, i+1 mod n) carrying labels[i].
inline CoxeterMatrix cycle(const std::vector<int>& labels) {
  const int rank = static_cast<int>(labels.size());
  std::vector<std::tuple<int, int, int>> edges;
  for (int i = 0; i < rank; ++i) edges.emplace_back(i, (i + 1) % rank, labels[static_cast<size_t>(i)]);
  return from_edges(rank, edges);
}

struct Fixture {
  std::string name;
  CoxeterMatrix graph;
  SystemClass cls;              // classification of the associated bilinear form
  std::optional<size_t> order;  // |W| when finite
  std::optional<long> coxnum;   // order of the Coxeter element when finite
};

// Rank <= 4 corpus. Orders and Coxeter-element orders of the irreducible
// finite types follow the classical tables (A_n: (n+1)!, h = n+1; B_n:
// 2^n n!, h = 2n; D_4: 192, h = 6; F_4: 1152, h = 12; H_3: 120, h = 10;
// H_4: 14400, h = 30; I_2(m): 2m, h = m); reducible fixtures multiply
// component orders and take the lcm of component Coxeter numbers.
inline const std::vector<Fixture>& corpus() {
  using fusioncox::coxeter_a;
  using fusioncox::coxeter_affine_a;
  using fusioncox::coxeter_i2;
  static const std::vector<Fixture> all = {
      {"a1", from_edges(1, {}), SystemClass::finite, 2, 2},
      {"i2_2", coxeter_i2(2), SystemClass::finite, 4, 2},
      {"i2_3", coxeter_i2(3), SystemClass::finite, 6, 3},
      {"i2_4", coxeter_i2(4), SystemClass::finite, 8, 4},
      {"i2_5", coxeter_i2(5), SystemClass::finite, 10, 5},
      {"i2_6", coxeter_i2(6), SystemClass::finite, 12, 6},
      {"i2_7", coxeter_i2(7), SystemClass::finite, 14, 7},
      {"i2_inf", coxeter_i2(CoxeterMatrix::kInfinity), SystemClass::affine, std::nullopt,
       std::nullopt},
      {"a3", coxeter_a(3), SystemClass::finite, 24, 4},
      {"b3", path({4, 3}), SystemClass::finite, 48, 6},
      {"h3", path({5, 3}), SystemClass::finite, 120, 10},
      {"chain62", path({6, 2}), SystemClass::finite, 24, 6},
      {"chain73", path({7, 3}), SystemClass::indefinite, std::nullopt, std::nullopt},
      {"chain54", path({5, 4}), SystemClass::indefinite, std::nullopt, std::nullopt},
      {"chain3inf", path({3, CoxeterMatrix::kInfinity}), SystemClass::indefinite, std::nullopt,
       std::nullopt},
      {"tri333", coxeter_affine_a(2), SystemClass::affine, std::nullopt, std::nullopt},
      {"all2_r3", from_edges(3, {}), SystemClass::finite, 8, 2},
      {"a4", coxeter_a(4), SystemClass::finite, 120, 5},
      {"b4", path({4, 3, 3}), SystemClass::finite, 384, 8},
      {"d4", from_edges(4, {{0, 1, 3}, {1, 2, 3}, {1, 3, 3}}), SystemClass::finite, 192, 6},
      {"f4", path({3, 4, 3}), SystemClass::finite, 1152, 12},
      {"h4", path({5, 3, 3}), SystemClass::finite, 14400, 30},
      {"chain425", path({4, 2, 5}), SystemClass::finite, 80, 20},
      {"cycle3333", coxeter_affine_a(3), SystemClass::affine, std::nullopt, std::nullopt},
      {"chain33inf", path({3, 3, CoxeterMatrix::kInfinity}), SystemClass::indefinite, std::nullopt,
       std::nullopt},
  };
  return all;
}

inline const std::vector<fusioncox::RealisationVariant>& all_variants() {
  static const std::vector<fusioncox::RealisationVariant> v = {
      fusioncox::RealisationVariant::standard,
      fusioncox::RealisationVariant::even,
      fusioncox::RealisationVariant::infty_s3,
  };
  return v;
}

// Upper bound on |W| for the enumeration-based checks (unfolding injectivity,
// group-order cross-checks). Fixtures above the bound are still classified
// and folded, just not enumerated.
inline constexpr size_t kEnumerationOrderBound = 1200;

// Realisation of the 4-labelled dihedral graph over the rank-3 ring with
// basis {g0, g1, m}, m * m = g0 + g1. The off-diagonal entry is -m, whose
// FP dimension is -sqrt(2) = -2cos(pi/4).
inline fusioncox::GeometricRealisation make_ty2_i2_4() {
  using namespace fusioncox;
  RingPtr ty = build_tambara_yamagami(cyclic_group_table(2));
  const RingElement two = scalar_element(ty, 2);
  const RingElement mm = basis_element(ty, 2);
  return make_realisation(ty, coxeter_i2(4), {two, -mm, -mm, two});
}

// Realisation of the infinite dihedral graph over the (noncommutative)
// integral group ring of the symmetric group on three letters, with
// off-diagonal entry -(r + r^2), the sum of the two 3-cycles; its FP
// dimension is -2.
inline fusioncox::GeometricRealisation make_s3_i2_inf() {
  using namespace fusioncox;
  RingPtr zs3 = build_group_ring(symmetric_group3_table(), {}, "group_ring(s3)");
  const RingElement two = scalar_element(zs3, 2);
  const RingElement rot = basis_element(zs3, 1) + basis_element(zs3, 2);
  return make_realisation(zs3, coxeter_i2(CoxeterMatrix::kInfinity), {two, -rot, -rot, two});
}

}  // namespace fixtures
