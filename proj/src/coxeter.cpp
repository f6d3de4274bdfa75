#include "fusioncox/coxeter.hpp"

#include <algorithm>

namespace fusioncox {

CoxeterMatrix::CoxeterMatrix(Eigen::MatrixXi entries, std::vector<std::string> labels)
    : m_(std::move(entries)), names_(std::move(labels)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw StructuralError("Coxeter matrix must be square and non-empty");
  const int n = static_cast<int>(m_.rows());
  for (int s = 0; s < n; ++s) {
    if (m_(s, s) != 1) throw StructuralError("Coxeter matrix diagonal must be 1");
    for (int t = 0; t < n; ++t) {
      if (m_(s, t) != m_(t, s)) throw StructuralError("Coxeter matrix must be symmetric");
      if (s != t && m_(s, t) != kInfinity && m_(s, t) < 2)
        throw StructuralError("off-diagonal Coxeter labels must be >= 2 or infinite");
    }
  }
  if (names_.empty()) {
    names_.reserve(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) names_.push_back("s" + std::to_string(s));
  }
  if (names_.size() != static_cast<size_t>(n))
    throw StructuralError("generator name count does not match Coxeter rank");
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw StructuralError("duplicate generator name");
}

int CoxeterMatrix::generator_index(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

CoxeterMatrix coxeter_i2(int m) {
  if (m != CoxeterMatrix::kInfinity && m < 2) throw StructuralError("i2 label must be >= 2 or inf");
  Eigen::MatrixXi e(2, 2);
  e << 1, m, m, 1;
  return CoxeterMatrix(e);
}

CoxeterMatrix coxeter_a(int n) {
  if (n < 1) throw StructuralError("type A rank must be >= 1");
  Eigen::MatrixXi e = Eigen::MatrixXi::Constant(n, n, 2);
  for (int s = 0; s < n; ++s) e(s, s) = 1;
  for (int s = 0; s + 1 < n; ++s) {
    e(s, s + 1) = 3;
    e(s + 1, s) = 3;
  }
  return CoxeterMatrix(e);
}

CoxeterMatrix coxeter_affine_a(int n) {
  if (n < 1) throw StructuralError("affine type A rank must be >= 1");
  if (n == 1) return coxeter_i2(CoxeterMatrix::kInfinity);
  const int size = n + 1;
  Eigen::MatrixXi e = Eigen::MatrixXi::Constant(size, size, 2);
  for (int s = 0; s < size; ++s) e(s, s) = 1;
  for (int s = 0; s < size; ++s) {
    const int t = (s + 1) % size;
    e(s, t) = 3;
    e(t, s) = 3;
  }
  return CoxeterMatrix(e);
}

namespace {

int parse_label_token(const std::string& tok) {
  if (tok == "inf") return CoxeterMatrix::kInfinity;
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw StructuralError("bad integer in Coxeter spec: '" + tok + "'");
  }
  if (pos != tok.size()) throw StructuralError("bad integer in Coxeter spec: '" + tok + "'");
  return value;
}

}  // namespace

bool looks_like_coxeter_builtin(const std::string& spec) {
  return spec.rfind("i2:", 0) == 0 || spec.rfind("a:", 0) == 0 || spec.rfind("affine-a:", 0) == 0;
}

CoxeterMatrix parse_coxeter_builtin(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw StructuralError("unknown Coxeter spec '" + spec + "' (expected i2:m, a:n or affine-a:n)");
  const std::string head = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (head == "i2") return coxeter_i2(parse_label_token(arg));
  if (head == "a") return coxeter_a(parse_label_token(arg));
  if (head == "affine-a") return coxeter_affine_a(parse_label_token(arg));
  throw StructuralError("unknown Coxeter spec '" + spec + "' (expected i2:m, a:n or affine-a:n)");
}

}  // namespace fusioncox
