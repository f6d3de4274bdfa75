#include "fusioncox/unfolding.hpp"

namespace fusioncox {

int UnfoldedSystem::vertex_index(int basis, int generator) const {
  return generator * source.ring->rank() + basis;
}

std::string UnfoldedSystem::vertex_name(int v) const {
  const auto& [basis, generator] = vertices[static_cast<size_t>(v)];
  return "(" + source.ring->basis_labels()[static_cast<size_t>(basis)] + "," +
         source.coxeter.generator_names()[static_cast<size_t>(generator)] + ")";
}

UnfoldedSystem unfold(const GeometricRealisation& real) {
  const int n = real.rank();
  const int q = real.ring->rank();
  const int size = n * q;

  UnfoldedSystem u{real, {}, CoxeterMatrix(Eigen::MatrixXi::Identity(1, 1)), {}, {}, {}};
  u.vertices.reserve(static_cast<size_t>(size));
  for (int s = 0; s < n; ++s)
    for (int b = 0; b < q; ++b) u.vertices.emplace_back(b, s);
  u.fibers.assign(static_cast<size_t>(n), {});
  for (int s = 0; s < n; ++s)
    for (int b = 0; b < q; ++b)
      u.fibers[static_cast<size_t>(s)].push_back(u.vertex_index(b, s));
  u.basis_fpdim = basis_fpdims(*real.ring);

  // Integral Cartan matrix: the coefficient expansion of b_j r(s,t) over
  // the basis gives column (j,t); blocks with s = t are 2 I.
  IntMatrix cartan = IntMatrix::Zero(size, size);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) {
        for (int b = 0; b < q; ++b) cartan(u.vertex_index(b, s), u.vertex_index(b, s)) = 2;
        continue;
      }
      for (int j = 0; j < q; ++j) {
        const RingElement product = basis_element(real.ring, j) * real.r(s, t);
        for (int i = 0; i < q; ++i)
          cartan(u.vertex_index(i, s), u.vertex_index(j, t)) = product.coeff(i);
      }
    }

  // Verification: symmetry and sign pattern.
  for (int v = 0; v < size; ++v) {
    if (cartan(v, v) != 2)
      throw VerificationError("unfolded Cartan diagonal is not 2 at " + u.vertex_name(v));
    for (int w = 0; w < size; ++w) {
      if (cartan(v, w) != cartan(w, v))
        throw VerificationError("unfolded Cartan matrix is not symmetric at " + u.vertex_name(v) +
                                ", " + u.vertex_name(w));
      if (v != w && cartan(v, w) > 0)
        throw VerificationError("unfolded Cartan matrix has a positive off-diagonal entry at " +
                                u.vertex_name(v) + ", " + u.vertex_name(w));
    }
  }

  // Fibers must be pairwise non-adjacent: within a generator the Cartan
  // block is 2 I by construction, so only cross-generator entries matter.
  for (int s = 0; s < n; ++s)
    for (int b1 = 0; b1 < q; ++b1)
      for (int b2 = 0; b2 < q; ++b2)
        if (b1 != b2 && cartan(u.vertex_index(b1, s), u.vertex_index(b2, s)) != 0)
          throw VerificationError("vertices inside one fiber are adjacent");

  // Cross-check the equivalent edge rule via left multiplication: the
  // coefficient of b_j in r(s,t) b_i must vanish exactly when the Cartan
  // entry at ((i,s),(j,t)) does. Both follow from reciprocity and the
  // star-symmetry of the Cartan matrix; a mismatch means the input ring
  // breaks one of them.
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      for (int i = 0; i < q; ++i) {
        const RingElement product = real.r(s, t) * basis_element(real.ring, i);
        for (int j = 0; j < q; ++j) {
          const bool cartan_edge = cartan(u.vertex_index(i, s), u.vertex_index(j, t)) != 0;
          if ((product.coeff(j) != 0) != cartan_edge)
            throw VerificationError("edge rules disagree at " +
                                    u.vertex_name(u.vertex_index(i, s)) + ", " +
                                    u.vertex_name(u.vertex_index(j, t)));
        }
      }
    }

  // Graph labels from the Cartan entries: -1 -> 3, <= -2 -> infinity.
  Eigen::MatrixXi graph = Eigen::MatrixXi::Constant(size, size, 2);
  for (int v = 0; v < size; ++v) graph(v, v) = 1;
  for (int v = 0; v < size; ++v)
    for (int w = v + 1; w < size; ++w) {
      const Int entry = cartan(v, w);
      int label = 2;
      if (entry == -1) label = 3;
      else if (entry <= -2) label = CoxeterMatrix::kInfinity;
      graph(v, w) = label;
      graph(w, v) = label;
    }

  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(size));
  for (int v = 0; v < size; ++v) names.push_back(u.vertex_name(v));
  u.graph = CoxeterMatrix(std::move(graph), std::move(names));
  u.cartan_z = std::move(cartan);
  return u;
}

IntMatrix unfolded_reflection(const UnfoldedSystem& u, int v) {
  const int size = u.vertex_count();
  if (v < 0 || v >= size) throw StructuralError("vertex index out of range");
  IntMatrix m = IntMatrix::Identity(size, size);
  for (int w = 0; w < size; ++w) m(w, v) -= u.cartan_z(v, w);
  return m;
}

IntMatrix integral_matrix(const UnfoldedSystem& u, const RMatrix& w) {
  const int n = u.source.rank();
  const int q = u.source.ring->rank();
  if (w.size() != n || !same_ring(w.ring(), u.source.ring))
    throw StructuralError("matrix does not act on the source module");
  IntMatrix out(n * q, n * q);
  for (int t = 0; t < n; ++t)
    for (int j = 0; j < q; ++j) {
      for (int s = 0; s < n; ++s) {
        const RingElement product = basis_element(u.source.ring, j) * w.at(t, s);
        for (int i = 0; i < q; ++i)
          out(u.vertex_index(j, t), u.vertex_index(i, s)) = product.coeff(i);
      }
    }
  return out;
}

std::vector<int> phi_image(const UnfoldedSystem& u, std::span<const int> source_word) {
  std::vector<int> out;
  for (const int s : source_word) {
    if (s < 0 || s >= u.source.rank()) throw StructuralError("generator index out of range");
    const auto& fiber = u.fibers[static_cast<size_t>(s)];
    out.insert(out.end(), fiber.begin(), fiber.end());
  }
  return out;
}

IntMatrix unfolded_word_matrix(const UnfoldedSystem& u, std::span<const int> word) {
  const int size = u.vertex_count();
  IntMatrix m = IntMatrix::Identity(size, size);
  // Row convention: first letter applied first, so prepend each factor.
  for (const int v : word) m = unfolded_reflection(u, v) * m;
  return m;
}

PsiReport psi_conjugation_check(const UnfoldedSystem& u) {
  PsiReport report;
  for (int s = 0; s < u.source.rank(); ++s) {
    const IntMatrix via_module = integral_matrix(u, generator_matrix(u.source, s));
    const IntMatrix via_fiber =
        unfolded_word_matrix(u, std::span<const int>(u.fibers[static_cast<size_t>(s)]));
    if (via_module != via_fiber) report.failed_generators.push_back(s);
  }
  return report;
}

}  // namespace fusioncox
