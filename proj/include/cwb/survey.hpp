// Special-point discovery: starting from a symbolic solve's pivot
// conditions, repeatedly re-solve at every candidate parameter point (partial
// or full rational specialisations read off the pivots) until the candidate
// sets stabilise. This reproduces nested case analyses mechanically: a pivot
// that only degenerates on a sub-locus is found when the enclosing locus is
// re-solved.
#pragma once

#include <functional>
#include <map>
#include <vector>

#include "cwb/lca.hpp"

namespace cwb {

struct SurveyClosure {
  // All candidate points, partial ones included, in a deterministic order;
  // the empty (fully symbolic) point is not listed.
  std::vector<std::map<Sym, Rat>> points;
  // Union of the pivot conditions seen across the closure.
  std::vector<Poly> merged_genericity;
};

// `pivots_of` runs the underlying solve on a (possibly specialised)
// presentation and returns the recorded pivot conditions.
SurveyClosure survey_closure(
    const LcaPresentation& a,
    const std::function<std::vector<Poly>(const LcaPresentation&)>& pivots_of,
    int max_rounds = 4);

}  // namespace cwb
