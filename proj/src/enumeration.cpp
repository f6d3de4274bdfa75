#include "fusioncox/enumeration.hpp"

#include <cmath>
#include <map>

#include "fusioncox/reflection_geometry.hpp"

namespace fusioncox {

namespace {

std::vector<Int> flatten(const RMatrix& m) {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(m.size()) * m.size() * m.ring()->rank());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      const IntVector& c = m.at(i, j).coeffs();
      out.insert(out.end(), c.data(), c.data() + c.size());
    }
  return out;
}

}  // namespace

GroupEnumeration enumerate_ring_group(const GeometricRealisation& real, size_t cap) {
  const int n = real.coxeter.rank();
  GroupEnumeration out;

  std::vector<RMatrix> generators;
  generators.reserve(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) generators.push_back(generator_matrix(real, s));

  std::map<std::vector<Int>, int> seen;
  std::vector<RMatrix> matrices;

  const RMatrix identity = RMatrix::identity(real.ring, n);
  seen.emplace(flatten(identity), 0);
  matrices.push_back(identity);
  out.words.push_back({});
  out.parents.push_back({-1, -1});

  for (size_t e = 0; e < matrices.size(); ++e) {
    for (int s = 0; s < n; ++s) {
      RMatrix m = generators[s] * matrices[e];
      auto key = flatten(m);
      if (seen.count(key)) continue;
      if (matrices.size() >= cap) {
        out.complete = false;
        return out;
      }
      seen.emplace(std::move(key), static_cast<int>(matrices.size()));
      std::vector<int> word = out.words[e];
      word.push_back(s);
      out.words.push_back(std::move(word));
      out.parents.push_back({static_cast<int>(e), s});
      matrices.push_back(std::move(m));
    }
  }
  out.complete = true;
  return out;
}

std::optional<size_t> real_group_order(const CoxeterMatrix& coxeter, size_t cap, double tol) {
  const RealMatrix cartan = real_cartan_from_coxeter(coxeter);
  const int n = coxeter.rank();

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
  for (int s = 0; s < n; ++s) {
    RealMatrix refl = RealMatrix::Identity(n, n);
    for (int t = 0; t < n; ++t) refl(t, s) -= cartan(s, t);
    generators.push_back(refl);
  }

  std::vector<RealMatrix> frontier{RealMatrix::Identity(n, n)};
  insert(frontier.front());
  size_t count = 1;
  while (!frontier.empty()) {
    std::vector<RealMatrix> next;
    for (const auto& m : frontier) {
      for (int s = 0; s < n; ++s) {
        RealMatrix image = generators[s] * m;
        if (!insert(image)) continue;
        if (++count > cap) return std::nullopt;
        next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  return count;
}

}  // namespace fusioncox
