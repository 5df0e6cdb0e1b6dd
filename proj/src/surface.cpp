#include "morsecob/surface.hpp"

#include <algorithm>
#include <numeric>

namespace morsecob {

SurfaceComponent SurfaceComponent::orientable(int genus) {
  if (genus < 0) {
    throw DomainError("orientable genus must be >= 0, got " + std::to_string(genus));
  }
  return {Orientability::Orientable, genus};
}

SurfaceComponent SurfaceComponent::non_orientable(int genus) {
  if (genus < 1) {
    throw DomainError("non-orientable genus must be >= 1, got " + std::to_string(genus));
  }
  return {Orientability::NonOrientable, genus};
}

std::string SurfaceComponent::to_string() const {
  return (is_orientable() ? "O" : "N") + std::to_string(genus_);
}

SurfaceComponent normalize(int handles, int cross_caps) {
  if (handles < 0 || cross_caps < 0) {
    throw DomainError("summand counts must be non-negative");
  }
  if (cross_caps == 0) {
    return SurfaceComponent::orientable(handles);
  }
  // T2 # RP2 = RP2 # RP2 # RP2, so every handle trades for two cross-caps.
  return SurfaceComponent::non_orientable(2 * handles + cross_caps);
}

SurfaceComponent connected_sum(const SurfaceComponent& lhs, const SurfaceComponent& rhs) {
  if (lhs.is_orientable() && rhs.is_orientable()) {
    return SurfaceComponent::orientable(lhs.genus() + rhs.genus());
  }
  auto cross_caps = [](const SurfaceComponent& c) {
    return c.is_orientable() ? 2 * c.genus() : c.genus();
  };
  return SurfaceComponent::non_orientable(cross_caps(lhs) + cross_caps(rhs));
}

int even_genus_part(const SurfaceComponent& c) {
  const int k = c.nonorientable_genus();
  return k - k % 2;
}

std::vector<SurfaceComponent> Surface::sorted() const {
  auto out = components_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string Surface::to_string() const {
  if (components_.empty()) {
    return "(empty)";
  }
  std::string out;
  for (const auto& c : sorted()) {
    if (!out.empty()) {
      out += " + ";
    }
    out += c.to_string();
  }
  return out;
}

int total_nonorientable_genus(const Surface& s) {
  return std::accumulate(s.components().begin(), s.components().end(), 0,
                         [](int acc, const SurfaceComponent& c) {
                           return acc + c.nonorientable_genus();
                         });
}

int odd_component_count(const Surface& s) {
  return static_cast<int>(std::count_if(
      s.components().begin(), s.components().end(),
      [](const SurfaceComponent& c) { return c.nonorientable_genus() % 2 == 1; }));
}

int euler_char(const Surface& s) {
  return std::accumulate(
      s.components().begin(), s.components().end(), 0,
      [](int acc, const SurfaceComponent& c) { return acc + c.euler_char(); });
}

int even_genus_part_sum(const Surface& s) {
  return std::accumulate(
      s.components().begin(), s.components().end(), 0,
      [](int acc, const SurfaceComponent& c) { return acc + even_genus_part(c); });
}

}  // namespace morsecob
