#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "morsecob/surface.hpp"

namespace morsecob {

enum class Phase { TwoHandle, OneHandle };

// 2-handle moves. A 2-handle is attached along an annulus in the current
// level surface; cutting along a separating circle splits a component into
// two connected summands, cutting along a non-separating one lowers its
// genus (Surger).
struct Split {
  ComponentId target = 0;
  SurfaceComponent left;
  SurfaceComponent right;
  friend bool operator==(const Split&, const Split&) = default;
};

struct Surger {
  ComponentId target = 0;
  SurfaceComponent result;
  friend bool operator==(const Surger&, const Surger&) = default;
};

// 1-handle moves. A 1-handle is attached along a pair of disks; on two
// components it forms their connected sum (Join), on one component it adds
// a handle or a Klein-bottle handle (SelfAttach).
struct Join {
  ComponentId first = 0;
  ComponentId second = 0;
  friend bool operator==(const Join&, const Join&) = default;
};

struct SelfAttach {
  ComponentId target = 0;
  SurfaceComponent result;
  friend bool operator==(const SelfAttach&, const SelfAttach&) = default;
};

using HandleMove = std::variant<Split, Surger, Join, SelfAttach>;

Phase phase_of(const HandleMove& move);

/// Per-component limits for move enumeration.
struct ComponentCap {
  int max_nonorientable_genus = 0;
  int max_orientable_genus = 0;

  bool admits(const SurfaceComponent& c) const;
};

class IllegalMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Returns the violated legality rule, or nullopt when `move` is legal on `s`.
std::optional<std::string> check_legal(const Surface& s, const HandleMove& move);

/// All legal moves of `phase` whose result components respect `cap`, in
/// deterministic order: by variant (Split, Surger, Join, SelfAttach), then
/// target identifier, then parameters.
std::vector<HandleMove> legal_moves(const Surface& s, Phase phase, const ComponentCap& cap);

/// Result of applying a move. Identifiers are renumbered densely:
/// Split keeps `left` at the target id and appends `right`; Join puts the
/// sum at the smaller id and closes the gap; other moves rewrite in place.
/// parents[new_id] lists the identifiers it came from.
struct Application {
  Surface surface;
  std::vector<std::vector<ComponentId>> parents;
};

/// Throws IllegalMove naming the violated rule.
Application apply_move(const Surface& s, const HandleMove& move);

/// The formal inverse move, acting on the surface produced by apply_move().
HandleMove inverse(const Surface& before, const HandleMove& move);

/// Step-indexed parent/child graph of components along a move sequence.
/// Node (step, id) is stored at index offset(step) + id.
class TraceGraph {
 public:
  struct Edge {
    std::size_t parent;
    std::size_t child;
  };

  TraceGraph() = default;
  static TraceGraph build(const std::vector<Surface>& states,
                          const std::vector<Application>& steps);

  std::size_t step_count() const { return layer_sizes_.size(); }
  std::size_t layer_size(std::size_t step) const { return layer_sizes_.at(step); }
  std::size_t node_count() const;
  std::size_t offset(std::size_t step) const;
  const std::vector<Edge>& edges() const { return edges_; }

  bool connected() const;
  /// True when every node past the first step has a parent edge.
  bool every_node_parented() const;

 private:
  std::vector<std::size_t> layer_sizes_;
  std::vector<Edge> edges_;
};

/// A phase-ordered move sequence from `start` to `end`. `middle` is the
/// surface after the last 2-handle and before the first 1-handle.
struct Witness {
  Surface start;
  std::vector<HandleMove> moves;
  Surface end;
  Surface middle;
  TraceGraph trace;
};

/// Replays `moves` from `start` and fills in middle, end and trace.
/// Throws IllegalMove if some step is illegal.
Witness make_witness(const Surface& start, std::vector<HandleMove> moves);

struct ValidationReport {
  bool ok = true;
  std::string violation;

  explicit operator bool() const { return ok; }
};

/// Checks every witness invariant and reports the first one that fails.
ValidationReport validate(const Witness& w);

int count_phase(const std::vector<HandleMove>& moves, Phase phase);

// Line-oriented text form, one move per line:
//   2H split #<id> -> <comp> + <comp>
//   2H surger #<id> -> <comp>
//   1H join #<id> #<id>
//   1H self #<id> -> <comp>
// with <comp> := O<genus> | N<genus>.
std::string format_move(const HandleMove& move);
HandleMove parse_move(std::string_view line);
std::string format_moves(const std::vector<HandleMove>& moves);
/// Blank lines are skipped. Throws std::invalid_argument with the line
/// number on malformed input.
std::vector<HandleMove> parse_moves(std::string_view text);

}  // namespace morsecob
