#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace morsecob {

/// Raised when an input violates a precondition of the surface algebra or
/// of the decision procedure (empty boundary, N0, out-of-bounds search).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Orientability : std::uint8_t { Orientable = 0, NonOrientable = 1 };

using ComponentId = std::size_t;

/// One closed connected surface in classification normal form: a sphere
/// with `genus` handles, or a sphere with `genus` >= 1 cross-caps.
///
/// Ordering is (kind, genus) with orientable components first; this is the
/// canonical ordering used for printing, equality of surfaces and hashing.
class SurfaceComponent {
 public:
  constexpr SurfaceComponent() = default;

  static SurfaceComponent orientable(int genus);
  static SurfaceComponent non_orientable(int genus);
  static SurfaceComponent sphere() { return {}; }

  constexpr Orientability kind() const { return kind_; }
  constexpr int genus() const { return genus_; }
  constexpr bool is_orientable() const { return kind_ == Orientability::Orientable; }

  /// Number of projective-plane summands in normal form (0 if orientable).
  constexpr int nonorientable_genus() const { return is_orientable() ? 0 : genus_; }
  constexpr int euler_char() const { return is_orientable() ? 2 - 2 * genus_ : 2 - genus_; }

  /// "O<g>" or "N<k>".
  std::string to_string() const;

  constexpr auto operator<=>(const SurfaceComponent&) const = default;

 private:
  constexpr SurfaceComponent(Orientability kind, int genus) : kind_(kind), genus_(genus) {}

  Orientability kind_ = Orientability::Orientable;
  int genus_ = 0;
};

/// Normal form of the connected sum of `handles` tori and `cross_caps`
/// projective planes.
SurfaceComponent normalize(int handles, int cross_caps);

SurfaceComponent connected_sum(const SurfaceComponent& lhs, const SurfaceComponent& rhs);

/// Largest even integer not exceeding the component's non-orientable genus.
int even_genus_part(const SurfaceComponent& c);

/// A closed, possibly disconnected surface. The identifier of a component is
/// its index; identifiers are therefore unique and dense. Equality ignores
/// identifiers and compares the sorted component multisets.
class Surface {
 public:
  Surface() = default;
  explicit Surface(std::vector<SurfaceComponent> components)
      : components_(std::move(components)) {}

  const std::vector<SurfaceComponent>& components() const { return components_; }
  const SurfaceComponent& component(ComponentId id) const { return components_.at(id); }
  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }

  /// Components sorted by (kind, genus).
  std::vector<SurfaceComponent> sorted() const;

  /// Same multiset, identifiers reassigned in canonical order.
  Surface canonical() const { return Surface(sorted()); }

  /// Canonical notation, e.g. "O0 + N1 + N1"; "(empty)" for no components.
  std::string to_string() const;

  friend bool operator==(const Surface& lhs, const Surface& rhs) {
    return lhs.sorted() == rhs.sorted();
  }

 private:
  std::vector<SurfaceComponent> components_;
};

/// Sum of the non-orientable genera of all components (P of the surface).
int total_nonorientable_genus(const Surface& s);
/// Number of components with odd non-orientable genus (P_o of the surface).
int odd_component_count(const Surface& s);
int euler_char(const Surface& s);
/// Sum of even_genus_part over the components.
int even_genus_part_sum(const Surface& s);

}  // namespace morsecob
