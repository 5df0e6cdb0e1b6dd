#pragma once

#include <string_view>
#include <vector>

#include "morsecob/surface.hpp"

namespace morsecob {

/// Which of the three known sufficient conditions a pair falls under.
/// A: equal odd-component counts. B: the upper side has more odd components,
/// and the excess is covered by the even genus parts of the lower side.
/// C: the mirror of B.
enum class AbcClass { A, B, C, None };

std::string_view to_string(AbcClass c);

struct Diagnostics {
  int genus_a = 0;        // P(F_a)
  int genus_b = 0;        // P(F_b)
  int odd_a = 0;          // P_o(F_a)
  int odd_b = 0;          // P_o(F_b)
  int even_part_sum_a = 0;
  int even_part_sum_b = 0;

  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

/// Verdict on whether a Morse function with exactly one singular value and
/// connected singular level exists on a 3-dimensional cobordism from F_a to
/// F_b.
///
/// cond1 is the cobordism parity condition, cond2 the pair of inequalities
///   P_o(F_b) <= P(F_a)  and  P_o(F_a) <= P(F_b).
struct Decision {
  bool exists = false;
  bool cond1_holds = false;
  bool cond2_holds = false;
  AbcClass abc_class = AbcClass::None;
  Diagnostics diagnostics;
};

bool is_cobordant(const Surface& fa, const Surface& fb);
Decision decide(const Surface& fa, const Surface& fb);
AbcClass classify_abc(const Surface& fa, const Surface& fb);

/// Component identifiers of the lower (a) and upper (b) boundary whose
/// level surfaces have odd (A sets) or positive (B sets) non-orientable genus.
struct EdgeSets {
  std::vector<ComponentId> a_low;
  std::vector<ComponentId> a_up;
  std::vector<ComponentId> b_low;
  std::vector<ComponentId> b_up;
};

EdgeSets edge_sets(const Surface& fa, const Surface& fb);

/// Signed genus label of a Reeb-graph edge: the orientable genus, or minus
/// the non-orientable genus.
int r_label(const SurfaceComponent& c);
/// Largest even integer not exceeding |r_label(c)|.
int r_prime_label(const SurfaceComponent& c);

}  // namespace morsecob
