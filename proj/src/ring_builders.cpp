#include "fusioncox/ring_builders.hpp"

#include <algorithm>
#include <sstream>

namespace fusioncox {

namespace {

void strip_trailing_zeros(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Group-table checks shared by the group ring and Tambara-Yamagami builders.
// Returns the index of the identity element.
int check_group_table(const CayleyTable& t) {
  const size_t n = t.size();
  if (n == 0) throw StructuralError("empty Cayley table");
  for (const auto& row : t) {
    if (row.size() != n) throw StructuralError("Cayley table is not square");
    for (int v : row)
      if (v < 0 || static_cast<size_t>(v) >= n) throw StructuralError("Cayley table entry out of range");
  }
  int unit = -1;
  for (size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (size_t g = 0; g < n; ++g)
      if (t[e][g] != static_cast<int>(g) || t[g][e] != static_cast<int>(g)) {
        ok = false;
        break;
      }
    if (ok) {
      unit = static_cast<int>(e);
      break;
    }
  }
  if (unit < 0) throw StructuralError("Cayley table has no identity element");
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        if (t[static_cast<size_t>(t[a][b])][c] != t[a][static_cast<size_t>(t[b][c])])
          throw StructuralError("Cayley table is not associative");
  for (size_t g = 0; g < n; ++g) {
    bool has_inverse = false;
    for (size_t h = 0; h < n; ++h)
      if (t[g][h] == unit && t[h][g] == unit) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) throw StructuralError("Cayley table element has no inverse");
  }
  return unit;
}

std::vector<int> inverse_permutation_of(const CayleyTable& t, int unit) {
  const size_t n = t.size();
  std::vector<int> inv(n, -1);
  for (size_t g = 0; g < n; ++g)
    for (size_t h = 0; h < n; ++h)
      if (t[g][h] == unit && t[h][g] == unit) inv[g] = static_cast<int>(h);
  return inv;
}

size_t tensor_index(size_t j, size_t rank_b, size_t jb) { return j * rank_b + jb; }

}  // namespace

CayleyTable cyclic_group_table(int n) {
  if (n < 1) throw StructuralError("cyclic group order must be positive");
  CayleyTable t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return t;
}

CayleyTable symmetric_group3_table() {
  // Elements ordered e, r, r2, s, rs, r2s with r^3 = s^2 = e and sr = r2 s.
  // Composition convention: table[a][b] = a*b.
  auto mul = [](int a, int b) {
    // Represent a = r^i s^j with i in {0,1,2}, j in {0,1}; index = i + 3j.
    const int ia = a % 3, ja = a / 3;
    const int ib = b % 3, jb = b / 3;
    // (r^ia s^ja)(r^ib s^jb): move s^ja past r^ib using s r = r^{-1} s.
    const int i = (ia + (ja == 1 ? (3 - ib) % 3 : ib)) % 3;
    const int j = (ja + jb) % 2;
    return i + 3 * j;
  };
  CayleyTable t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = mul(a, b);
  return t;
}

RingPtr build_group_ring(const CayleyTable& table, std::vector<std::string> labels,
                         std::string name) {
  const size_t n = table.size();
  const int unit = check_group_table(table);
  if (labels.empty()) {
    labels.reserve(n);
    for (size_t g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
  }
  if (labels.size() != n) throw StructuralError("group ring label count mismatch");
  std::vector<Int> mult(n * n * n, 0);
  for (size_t j = 0; j < n; ++j)
    for (size_t k = 0; k < n; ++k)
      mult[(j * n + k) * n + static_cast<size_t>(table[j][k])] = 1;
  if (name.empty()) name = "group_ring(" + std::to_string(n) + ")";
  return FusionRing::create(std::move(name), std::move(labels), unit,
                            inverse_permutation_of(table, unit), std::move(mult));
}

// --- polynomial helpers -----------------------------------------------------

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  }
  strip_trailing_zeros(out);
  return out;
}

Poly poly_mod_monic(Poly a, const Poly& b) {
  if (b.empty() || b.back() != 1) throw StructuralError("modulus must be monic");
  strip_trailing_zeros(a);
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    const Int lead = a.back();
    const size_t shift = a.size() - 1 - db;
    if (lead != 0)
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = checked_sub(a[shift + i], checked_mul(lead, b[i]));
    a.pop_back();
    strip_trailing_zeros(a);
  }
  return a;
}

Poly chebyshev_basis_poly(int k) {
  if (k < 0) throw StructuralError("negative Chebyshev index");
  Poly prev = {1};      // P_0
  if (k == 0) return prev;
  Poly cur = {0, 1};    // P_1 = x
  for (int i = 1; i < k; ++i) {
    // P_{i+1} = x P_i - P_{i-1}
    Poly next(cur.size() + 1, 0);
    for (size_t d = 0; d < cur.size(); ++d) next[d + 1] = cur[d];
    for (size_t d = 0; d < prev.size(); ++d) next[d] = checked_sub(next[d], prev[d]);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Int> to_chebyshev_basis(Poly p, int bound) {
  strip_trailing_zeros(p);
  std::vector<Int> out(static_cast<size_t>(bound) + 1, 0);
  // Each P_k is monic of degree k, so peel off leading terms from the top.
  while (!p.empty()) {
    const int d = static_cast<int>(p.size()) - 1;
    if (d > bound) throw StructuralError("polynomial degree exceeds basis bound");
    const Int coeff = p.back();
    out[static_cast<size_t>(d)] = coeff;
    const Poly pk = chebyshev_basis_poly(d);
    for (size_t i = 0; i < pk.size(); ++i) p[i] = checked_sub(p[i], checked_mul(coeff, pk[i]));
    strip_trailing_zeros(p);
  }
  return out;
}

// --- Verlinde rings ----------------------------------------------------------

namespace {

std::string verlinde_label(int k, int n) {
  return "D" + std::to_string(k) + "(x" + std::to_string(n) + ")";
}

}  // namespace

RingPtr build_verlinde(int n) {
  if (n < 2) throw StructuralError("Verlinde ring needs n >= 2");
  const int rank = n - 1;
  const Poly modulus = chebyshev_basis_poly(n - 1);
  std::vector<Poly> basis(static_cast<size_t>(rank));
  for (int k = 0; k < rank; ++k) basis[static_cast<size_t>(k)] = chebyshev_basis_poly(k);

  std::vector<Int> mult(static_cast<size_t>(rank) * rank * rank, 0);
  for (int j = 0; j < rank; ++j)
    for (int k = 0; k < rank; ++k) {
      const Poly reduced =
          poly_mod_monic(poly_mul(basis[static_cast<size_t>(j)], basis[static_cast<size_t>(k)]),
                         modulus);
      const std::vector<Int> coeffs = to_chebyshev_basis(reduced, rank - 1);
      for (int i = 0; i < rank; ++i)
        mult[(static_cast<size_t>(j) * rank + static_cast<size_t>(k)) * rank +
             static_cast<size_t>(i)] = coeffs[static_cast<size_t>(i)];
    }

  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(rank));
  for (int k = 0; k < rank; ++k) labels.push_back(verlinde_label(k, n));
  std::vector<int> involution(static_cast<size_t>(rank));
  for (int k = 0; k < rank; ++k) involution[static_cast<size_t>(k)] = k;
  return FusionRing::create("verlinde(" + std::to_string(n) + ")", std::move(labels), 0,
                            std::move(involution), std::move(mult));
}

RingPtr build_verlinde_even(int n) {
  if (n < 3) throw StructuralError("even Verlinde subring needs n >= 3");
  const RingPtr full = build_verlinde(n);
  std::vector<int> picks;  // indices of even basis elements in the full ring
  for (int k = 0; k <= n - 2; k += 2) picks.push_back(k);
  const int rank = static_cast<int>(picks.size());
  std::vector<Int> mult(static_cast<size_t>(rank) * rank * rank, 0);
  for (int j = 0; j < rank; ++j)
    for (int k = 0; k < rank; ++k) {
      for (int i = 0; i < rank; ++i)
        mult[(static_cast<size_t>(j) * rank + static_cast<size_t>(k)) * rank +
             static_cast<size_t>(i)] =
            full->c(picks[static_cast<size_t>(j)], picks[static_cast<size_t>(k)],
                    picks[static_cast<size_t>(i)]);
      // The even-index span is closed under multiplication; make sure no
      // coefficient escapes onto an odd basis element.
      for (int i = 0; i < n - 1; ++i) {
        if (i % 2 == 0) continue;
        if (full->c(picks[static_cast<size_t>(j)], picks[static_cast<size_t>(k)], i) != 0)
          throw StructuralError("even-index span is not closed under multiplication");
      }
    }
  std::vector<std::string> labels;
  for (int k : picks) labels.push_back(verlinde_label(k, n));
  std::vector<int> involution(static_cast<size_t>(rank));
  for (int k = 0; k < rank; ++k) involution[static_cast<size_t>(k)] = k;
  return FusionRing::create("verlinde_even(" + std::to_string(n) + ")", std::move(labels), 0,
                            std::move(involution), std::move(mult));
}

RingPtr build_rep_s3() {
  const int n = 3;  // basis order: 1, V, sgn
  std::vector<Int> mult(n * n * n, 0);
  auto set = [&](int j, int k, int i, Int v) {
    mult[(static_cast<size_t>(j) * n + static_cast<size_t>(k)) * n + static_cast<size_t>(i)] = v;
  };
  const int one = 0, V = 1, sgn = 2;
  for (int k = 0; k < n; ++k) {
    set(one, k, k, 1);
    set(k, one, k, 1);
  }
  set(sgn, sgn, one, 1);
  set(sgn, V, V, 1);
  set(V, sgn, V, 1);
  set(V, V, one, 1);
  set(V, V, V, 1);
  set(V, V, sgn, 1);
  return FusionRing::create("rep_s3", {"1", "V", "sgn"}, one, {0, 1, 2}, std::move(mult));
}

RingPtr build_tambara_yamagami(const CayleyTable& table, std::vector<std::string> labels,
                               std::string name) {
  const size_t g = table.size();
  const int unit = check_group_table(table);
  for (size_t a = 0; a < g; ++a)
    for (size_t b = 0; b < g; ++b)
      if (table[a][b] != table[b][a])
        throw StructuralError("Tambara-Yamagami construction requires an abelian group");
  if (labels.empty()) {
    for (size_t i = 0; i < g; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != g) throw StructuralError("Tambara-Yamagami label count mismatch");
  labels.push_back("m");
  const size_t n = g + 1;
  const size_t m = g;  // index of the extra element
  std::vector<Int> mult(n * n * n, 0);
  auto set = [&](size_t j, size_t k, size_t i, Int v) { mult[(j * n + k) * n + i] = v; };
  for (size_t a = 0; a < g; ++a)
    for (size_t b = 0; b < g; ++b) set(a, b, static_cast<size_t>(table[a][b]), 1);
  for (size_t a = 0; a < g; ++a) {
    set(a, m, m, 1);
    set(m, a, m, 1);
  }
  for (size_t a = 0; a < g; ++a) set(m, m, a, 1);
  std::vector<int> involution = inverse_permutation_of(table, unit);
  involution.push_back(static_cast<int>(m));
  if (name.empty()) name = "tambara_yamagami(" + std::to_string(g) + ")";
  return FusionRing::create(std::move(name), std::move(labels), unit, std::move(involution),
                            std::move(mult));
}

RingPtr build_tensor_product(const RingPtr& a, const RingPtr& b) {
  const size_t na = static_cast<size_t>(a->rank());
  const size_t nb = static_cast<size_t>(b->rank());
  const size_t n = na * nb;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (size_t ja = 0; ja < na; ++ja)
    for (size_t jb = 0; jb < nb; ++jb)
      labels.push_back(a->basis_labels()[ja] + "*" + b->basis_labels()[jb]);
  std::vector<int> involution(n);
  for (size_t ja = 0; ja < na; ++ja)
    for (size_t jb = 0; jb < nb; ++jb)
      involution[tensor_index(ja, nb, jb)] = static_cast<int>(tensor_index(
          static_cast<size_t>(a->dual(static_cast<int>(ja))), nb,
          static_cast<size_t>(b->dual(static_cast<int>(jb)))));
  std::vector<Int> mult(n * n * n, 0);
  for (size_t ja = 0; ja < na; ++ja)
    for (size_t jb = 0; jb < nb; ++jb)
      for (size_t ka = 0; ka < na; ++ka)
        for (size_t kb = 0; kb < nb; ++kb)
          for (size_t ia = 0; ia < na; ++ia) {
            const Int ca = a->c(static_cast<int>(ja), static_cast<int>(ka), static_cast<int>(ia));
            if (ca == 0) continue;
            for (size_t ib = 0; ib < nb; ++ib) {
              const Int cb =
                  b->c(static_cast<int>(jb), static_cast<int>(kb), static_cast<int>(ib));
              if (cb == 0) continue;
              mult[(tensor_index(ja, nb, jb) * n + tensor_index(ka, nb, kb)) * n +
                   tensor_index(ia, nb, ib)] = checked_mul(ca, cb);
            }
          }
  const int unit = static_cast<int>(
      tensor_index(static_cast<size_t>(a->unit()), nb, static_cast<size_t>(b->unit())));
  return FusionRing::create("tensor(" + a->name() + "," + b->name() + ")", std::move(labels), unit,
                            std::move(involution), std::move(mult));
}

}  // namespace fusioncox
