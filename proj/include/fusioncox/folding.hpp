#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusioncox/reflection_geometry.hpp"

namespace fusioncox {

// Partition of the vertices of a Coxeter graph into fibers, given as the
// fiber index of each vertex. Fiber indices must form a contiguous range
// 0..fiber_count-1 with every fiber non-empty.
struct Partition {
  std::vector<int> fiber_of;
  int fiber_count = 0;
};

struct FoldFailure {
  std::string condition;      // which admissibility requirement failed
  std::vector<int> vertices;  // witnesses inside the graph
  std::string detail;
};

struct FoldReport {
  bool ok = false;
  std::optional<CoxeterMatrix> folded;  // present exactly when ok
  std::vector<FoldFailure> failures;
};

// Strong admissibility of a partition: no edges inside a fiber, and for each
// pair of fibers every connected component of the induced subgraph on their
// union has the same Coxeter number (a single vertex counts as 2, a
// component of non-finite type as infinity). The folded graph carries that
// common number as its edge label.
FoldReport check_strong_admissible(const CoxeterMatrix& graph, const Partition& partition,
                                   std::vector<std::string> fiber_names = {});

// Fibers of an unfolded system, one per source generator.
Partition canonical_unfolding_partition(const UnfoldedSystem& u);

struct UnfoldingFoldReport {
  FoldReport fold;
  bool matches_source = false;  // folded matrix equals the source Coxeter matrix
  bool ok() const { return fold.ok && matches_source; }
};

// Folds the unfolded graph along its canonical partition (one fiber per
// source generator) and compares the result with the source Coxeter
// matrix. A failure is a reportable outcome, not an error: instances over
// rings outside the proved scope are checked on the same footing.
UnfoldingFoldReport verify_unfolding_is_strong_admissible(const UnfoldedSystem& u);

}  // namespace fusioncox
