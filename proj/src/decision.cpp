#include "morsecob/decision.hpp"

#include <cstdlib>

namespace morsecob {
namespace {

void require_boundary(const Surface& fa, const Surface& fb) {
  if (fa.empty()) {
    throw DomainError("F_a is empty: the lower boundary must have at least one component");
  }
  if (fb.empty()) {
    throw DomainError("F_b is empty: the upper boundary must have at least one component");
  }
}

std::vector<ComponentId> select_ids(const Surface& s, bool (*keep)(const SurfaceComponent&)) {
  std::vector<ComponentId> out;
  for (ComponentId id = 0; id < s.size(); ++id) {
    if (keep(s.component(id))) {
      out.push_back(id);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(AbcClass c) {
  switch (c) {
    case AbcClass::A:
      return "A";
    case AbcClass::B:
      return "B";
    case AbcClass::C:
      return "C";
    case AbcClass::None:
      break;
  }
  return "none";
}

bool is_cobordant(const Surface& fa, const Surface& fb) {
  require_boundary(fa, fb);
  return (odd_component_count(fb) - odd_component_count(fa)) % 2 == 0;
}

AbcClass classify_abc(const Surface& fa, const Surface& fb) {
  require_boundary(fa, fb);
  const int odd_a = odd_component_count(fa);
  const int odd_b = odd_component_count(fb);
  if (odd_a == odd_b) {
    return AbcClass::A;
  }
  if (odd_b > odd_a) {
    return odd_b - odd_a <= even_genus_part_sum(fa) ? AbcClass::B : AbcClass::None;
  }
  return odd_a - odd_b <= even_genus_part_sum(fb) ? AbcClass::C : AbcClass::None;
}

Decision decide(const Surface& fa, const Surface& fb) {
  Decision d;
  d.cond1_holds = is_cobordant(fa, fb);
  d.diagnostics = Diagnostics{
      .genus_a = total_nonorientable_genus(fa),
      .genus_b = total_nonorientable_genus(fb),
      .odd_a = odd_component_count(fa),
      .odd_b = odd_component_count(fb),
      .even_part_sum_a = even_genus_part_sum(fa),
      .even_part_sum_b = even_genus_part_sum(fb),
  };
  const auto& g = d.diagnostics;
  d.cond2_holds = g.odd_b <= g.genus_a && g.odd_a <= g.genus_b;
  d.exists = d.cond1_holds && d.cond2_holds;
  d.abc_class = classify_abc(fa, fb);
  return d;
}

EdgeSets edge_sets(const Surface& fa, const Surface& fb) {
  require_boundary(fa, fb);
  auto odd = [](const SurfaceComponent& c) { return c.nonorientable_genus() % 2 == 1; };
  auto positive = [](const SurfaceComponent& c) { return c.nonorientable_genus() > 0; };
  return EdgeSets{
      .a_low = select_ids(fa, odd),
      .a_up = select_ids(fb, odd),
      .b_low = select_ids(fa, positive),
      .b_up = select_ids(fb, positive),
  };
}

int r_label(const SurfaceComponent& c) {
  return c.is_orientable() ? c.genus() : -c.genus();
}

int r_prime_label(const SurfaceComponent& c) {
  const int magnitude = std::abs(r_label(c));
  return magnitude - magnitude % 2;
}

}  // namespace morsecob
