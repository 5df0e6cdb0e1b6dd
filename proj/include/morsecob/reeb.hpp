#pragma once

#include <string>
#include <vector>

#include "morsecob/handles.hpp"
#include "morsecob/surface.hpp"

namespace morsecob {

/// Reeb graph of a Morse function on a cobordism with one singular value:
/// one vertex per boundary component, one interior vertex for the singular
/// level, and one oriented edge per boundary component. Lower edges enter
/// the interior vertex, upper edges leave it (function value increases
/// along edges).
struct ReebGraph {
  enum class Side { Lower, Singular, Upper };

  struct Vertex {
    std::string name;  // a<i>, s, b<j>
    Side side = Side::Singular;
  };

  struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Side side = Side::Lower;  // boundary the edge belongs to
    ComponentId component = 0;
    SurfaceComponent level;   // level surface over the edge interior
    int r = 0;
    int r_prime = 0;
    bool in_a = false;  // odd non-orientable genus
    bool in_b = false;  // positive non-orientable genus
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::size_t singular = 0;  // index of the interior vertex
};

/// Throws DomainError if either side is empty.
ReebGraph build_reeb(const Surface& fa, const Surface& fb);
ReebGraph build_reeb(const Witness& w);

/// Graphviz DOT text. Deterministic: identical input gives identical bytes.
std::string to_dot(const ReebGraph& g);

}  // namespace morsecob
