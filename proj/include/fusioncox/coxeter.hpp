#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "fusioncox/errors.hpp"

namespace fusioncox {

// Coxeter matrix over a finite generating set. Entries are 1 on the
// diagonal and >= 2 or infinite off it; infinity is stored as 0, the same
// encoding used in JSON files. Generators carry names (default s0, s1, ...)
// used by emitters and partitions.
class CoxeterMatrix {
public:
  static constexpr int kInfinity = 0;

  CoxeterMatrix(Eigen::MatrixXi entries, std::vector<std::string> labels = {});

  int rank() const { return static_cast<int>(m_.rows()); }
  int label(int s, int t) const { return m_(s, t); }
  bool is_infinite(int s, int t) const { return m_(s, t) == kInfinity; }
  const Eigen::MatrixXi& entries() const { return m_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::string& generator_name(int s) const { return names_[static_cast<size_t>(s)]; }
  int generator_index(const std::string& name) const;  // -1 when absent

  // Names are presentation metadata, not identity.
  bool operator==(const CoxeterMatrix& other) const {
    return m_.rows() == other.m_.rows() && m_ == other.m_;
  }

private:
  Eigen::MatrixXi m_;
  std::vector<std::string> names_;
};

// Rank-2 matrix with label m (0 = infinity).
CoxeterMatrix coxeter_i2(int m);
// Path of n generators, consecutive labels 3 (type A).
CoxeterMatrix coxeter_a(int n);
// Affine type A: n = 1 gives the infinite-label rank-2 matrix, n >= 2 the
// (n+1)-cycle with labels 3.
CoxeterMatrix coxeter_affine_a(int n);

// Parses the builtin mini-language: "i2:m" (m an integer >= 2 or "inf"),
// "a:n", "affine-a:n". Anything else is rejected; file paths are handled
// by the callers that own I/O.
CoxeterMatrix parse_coxeter_builtin(const std::string& spec);
bool looks_like_coxeter_builtin(const std::string& spec);

}  // namespace fusioncox
