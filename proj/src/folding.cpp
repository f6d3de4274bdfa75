#include "fusioncox/folding.hpp"

#include <algorithm>
#include <sstream>

#include "fusioncox/errors.hpp"

namespace fusioncox {

namespace {

void validate_partition(const CoxeterMatrix& graph, const Partition& partition) {
  const int n = graph.rank();
  if (static_cast<int>(partition.fiber_of.size()) != n)
    throw StructuralError("partition size does not match the graph rank");
  if (partition.fiber_count <= 0) throw StructuralError("partition needs at least one fiber");
  std::vector<int> sizes(partition.fiber_count, 0);
  for (int v = 0; v < n; ++v) {
    const int f = partition.fiber_of[v];
    if (f < 0 || f >= partition.fiber_count)
      throw StructuralError("fiber index out of range at vertex " + std::to_string(v));
    ++sizes[f];
  }
  for (int f = 0; f < partition.fiber_count; ++f)
    if (sizes[f] == 0) throw StructuralError("fiber " + std::to_string(f) + " is empty");
}

// Coxeter number of one induced connected component, or kInfinity when the
// component is not of finite type.
int component_label(const CoxeterMatrix& graph, const std::vector<int>& component) {
  const int k = static_cast<int>(component.size());
  Eigen::MatrixXi sub(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) sub(a, b) = graph.label(component[a], component[b]);
  const CoxeterMatrix piece(sub);
  const RealMatrix cartan = real_cartan_from_coxeter(piece);
  const auto order = coxeter_number(cartan);
  if (!order.has_value()) return CoxeterMatrix::kInfinity;
  return static_cast<int>(*order);
}

}  // namespace

FoldReport check_strong_admissible(const CoxeterMatrix& graph, const Partition& partition,
                                   std::vector<std::string> fiber_names) {
  validate_partition(graph, partition);
  const int n = graph.rank();
  const int k = partition.fiber_count;
  FoldReport report;

  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (partition.fiber_of[u] == partition.fiber_of[v] && graph.label(u, v) != 2) {
        report.failures.push_back(
            FoldFailure{"fiber-independence",
                        {u, v},
                        "vertices " + graph.generator_name(u) + " and " + graph.generator_name(v) +
                            " share a fiber but are joined by an edge"});
      }
    }
  }

  Eigen::MatrixXi folded = Eigen::MatrixXi::Constant(k, k, 2);
  for (int f = 0; f < k; ++f) folded(f, f) = 1;

  for (int f = 0; f < k && report.failures.empty(); ++f) {
    for (int g = f + 1; g < k && report.failures.empty(); ++g) {
      std::vector<int> members;
      for (int v = 0; v < n; ++v)
        if (partition.fiber_of[v] == f || partition.fiber_of[v] == g) members.push_back(v);

      // Connected components of the induced subgraph on the two fibers.
      std::vector<int> component_of(members.size(), -1);
      int components = 0;
      for (size_t start = 0; start < members.size(); ++start) {
        if (component_of[start] >= 0) continue;
        const int id = components++;
        std::vector<size_t> stack{start};
        component_of[start] = id;
        while (!stack.empty()) {
          const size_t a = stack.back();
          stack.pop_back();
          for (size_t b = 0; b < members.size(); ++b) {
            if (component_of[b] >= 0) continue;
            if (graph.label(members[a], members[b]) != 2) {
              component_of[b] = id;
              stack.push_back(b);
            }
          }
        }
      }

      int common = -1;
      for (int id = 0; id < components; ++id) {
        std::vector<int> component;
        for (size_t a = 0; a < members.size(); ++a)
          if (component_of[a] == id) component.push_back(members[a]);
        const int label = component_label(graph, component);
        if (common < 0) {
          common = label;
        } else if (label != common) {
          std::ostringstream detail;
          detail << "fibers " << f << " and " << g
                 << " span components with different Coxeter numbers (";
          auto print = [&detail](int value) {
            if (value == CoxeterMatrix::kInfinity)
              detail << "infinity";
            else
              detail << value;
          };
          print(common);
          detail << " vs ";
          print(label);
          detail << ")";
          report.failures.push_back(FoldFailure{"equal-coxeter-numbers", component, detail.str()});
          break;
        }
      }
      if (report.failures.empty()) {
        folded(f, g) = common;
        folded(g, f) = common;
      }
    }
  }

  if (!report.failures.empty()) {
    report.ok = false;
    return report;
  }
  if (fiber_names.empty()) {
    fiber_names.reserve(static_cast<size_t>(k));
    for (int f = 0; f < k; ++f) fiber_names.push_back("f" + std::to_string(f));
  }
  report.folded.emplace(folded, std::move(fiber_names));
  report.ok = true;
  return report;
}

Partition canonical_unfolding_partition(const UnfoldedSystem& u) {
  Partition partition;
  partition.fiber_count = u.source.coxeter.rank();
  partition.fiber_of.resize(u.vertices.size());
  for (size_t v = 0; v < u.vertices.size(); ++v)
    partition.fiber_of[v] = u.vertices[v].second;
  return partition;
}

UnfoldingFoldReport verify_unfolding_is_strong_admissible(const UnfoldedSystem& u) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(u.source.coxeter.rank()));
  for (int s = 0; s < u.source.coxeter.rank(); ++s)
    names.push_back(u.source.coxeter.generator_name(s));
  UnfoldingFoldReport report;
  report.fold =
      check_strong_admissible(u.graph, canonical_unfolding_partition(u), std::move(names));
  report.matches_source =
      report.fold.ok && report.fold.folded.has_value() && *report.fold.folded == u.source.coxeter;
  return report;
}

}  // namespace fusioncox
