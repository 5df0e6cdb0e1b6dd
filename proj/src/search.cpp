#include "morsecob/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "morsecob/decision.hpp"

namespace morsecob {
namespace {

// A search state: a concrete surface plus, per component, the lower-boundary
// component it is trace-connected to. Classes only ever merge (Join), so the
// trace of the whole sequence is connected iff one class is left at the end.
struct Node {
  Surface surface;
  std::vector<ComponentId> cls;
  bool one_handle_phase = false;
  std::size_t parent = 0;
  std::optional<HandleMove> move;
  int depth = 0;
};

bool single_class(const Node& n) {
  return std::adjacent_find(n.cls.begin(), n.cls.end(), std::not_equal_to<>{}) == n.cls.end();
}

// Canonical key: phase plus the multiset of class multisets.
std::string state_key(const Node& n) {
  std::vector<std::pair<ComponentId, SurfaceComponent>> tagged;
  for (ComponentId i = 0; i < n.surface.size(); ++i) {
    tagged.emplace_back(n.cls[i], n.surface.component(i));
  }
  std::sort(tagged.begin(), tagged.end());
  std::vector<std::string> groups;
  for (std::size_t i = 0; i < tagged.size();) {
    std::vector<SurfaceComponent> members;
    std::size_t j = i;
    for (; j < tagged.size() && tagged[j].first == tagged[i].first; ++j) {
      members.push_back(tagged[j].second);
    }
    std::sort(members.begin(), members.end());
    std::string g = "(";
    for (const auto& m : members) {
      g += m.to_string();
      g += ' ';
    }
    g += ')';
    groups.push_back(std::move(g));
    i = j;
  }
  std::sort(groups.begin(), groups.end());
  std::string key = n.one_handle_phase ? "1:" : "2:";
  for (const auto& g : groups) {
    key += g;
  }
  return key;
}

Node child_of(const Node& node, std::size_t node_index, const HandleMove& move) {
  auto applied = apply_move(node.surface, move);
  Node child;
  child.cls.reserve(applied.parents.size());
  for (const auto& ps : applied.parents) {
    child.cls.push_back(node.cls[ps.front()]);
  }
  if (const auto* join = std::get_if<Join>(&move)) {
    const auto keep = node.cls[join->first];
    const auto drop = node.cls[join->second];
    std::replace(child.cls.begin(), child.cls.end(), drop, keep);
  }
  child.surface = std::move(applied.surface);
  child.one_handle_phase = phase_of(move) == Phase::OneHandle;
  child.parent = node_index;
  child.move = move;
  child.depth = node.depth + 1;
  return child;
}

std::vector<HandleMove> next_moves(const Node& node, const ComponentCap& cap) {
  std::vector<HandleMove> moves;
  if (!node.one_handle_phase) {
    moves = legal_moves(node.surface, Phase::TwoHandle, cap);
  }
  auto ones = legal_moves(node.surface, Phase::OneHandle, cap);
  moves.insert(moves.end(), ones.begin(), ones.end());
  return moves;
}

Node root_node(const Surface& fa) {
  Node root;
  root.surface = fa;
  root.cls.resize(fa.size());
  for (ComponentId i = 0; i < fa.size(); ++i) {
    root.cls[i] = i;
  }
  return root;
}

// Breadth-first expansion. `on_child` sees every generated child (before
// deduplication) and returns true to stop the search.
template <class OnChild>
void breadth_first(const Surface& fa, const SearchBounds& bounds, std::vector<Node>& nodes,
                   OnChild on_child) {
  const auto cap = bounds.state_component_cap();
  const auto limit = bounds.state_component_limit();
  std::unordered_set<std::string> visited;
  nodes.push_back(root_node(fa));
  visited.insert(state_key(nodes.front()));
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= bounds.max_moves) {
      continue;
    }
    const Node current = nodes[head];
    for (const auto& move : next_moves(current, cap)) {
      Node child = child_of(current, head, move);
      if (child.surface.size() > limit) {
        continue;
      }
      if (on_child(child)) {
        nodes.push_back(std::move(child));
        return;
      }
      if (visited.insert(state_key(child)).second) {
        nodes.push_back(std::move(child));
      }
    }
  }
}

void require_inputs(const Surface& s, const SearchBounds& bounds, std::string_view side) {
  if (s.empty()) {
    throw DomainError(std::string(side) + " is empty");
  }
  if (!bounds.admits(s)) {
    throw DomainError(std::string(side) + " = " + s.to_string() + " exceeds the search bounds");
  }
}

}  // namespace

void SearchBounds::check() const {
  if (max_components < 1) {
    throw DomainError("max_components must be >= 1");
  }
  if (max_nonorientable_genus < 0 || max_orientable_genus < 0) {
    throw DomainError("genus bounds must be >= 0");
  }
  if (max_moves < 1) {
    throw DomainError("max_moves must be >= 1");
  }
}

bool SearchBounds::admits(const Surface& s) const {
  if (s.size() > static_cast<std::size_t>(max_components)) {
    return false;
  }
  const ComponentCap cap{max_nonorientable_genus, max_orientable_genus};
  return std::all_of(s.components().begin(), s.components().end(),
                     [&](const SurfaceComponent& c) { return cap.admits(c); });
}

std::size_t SearchBounds::state_component_limit() const {
  return 2 * static_cast<std::size_t>(max_components) + 1;
}

ComponentCap SearchBounds::state_component_cap() const {
  // Splits of N(k) may produce O(g) with 2g <= k.
  return ComponentCap{max_nonorientable_genus,
                      std::max(max_orientable_genus, max_nonorientable_genus / 2)};
}

int heuristic_budget(const Surface& fa, const Surface& fb) {
  return total_nonorientable_genus(fa) + total_nonorientable_genus(fb) +
         2 * static_cast<int>(fa.size() + fb.size()) + 4;
}

std::optional<Witness> find_witness(const Surface& fa, const Surface& fb,
                                    const SearchBounds& bounds) {
  bounds.check();
  require_inputs(fa, bounds, "F_a");
  require_inputs(fb, bounds, "F_b");
  const auto target = fb.sorted();

  std::vector<Node> nodes;
  bool found = false;
  breadth_first(fa, bounds, nodes, [&](const Node& child) {
    found = single_class(child) && child.surface.sorted() == target;
    return found;
  });
  if (!found) {
    return std::nullopt;
  }
  std::vector<HandleMove> moves;
  for (std::size_t i = nodes.size() - 1; nodes[i].move; i = nodes[i].parent) {
    moves.push_back(*nodes[i].move);
  }
  std::reverse(moves.begin(), moves.end());
  return make_witness(fa, std::move(moves));
}

std::vector<Surface> enumerate_reachable(const Surface& fa, const SearchBounds& bounds) {
  bounds.check();
  require_inputs(fa, bounds, "F_a");
  std::set<std::vector<SurfaceComponent>> reached;
  std::vector<Node> nodes;
  breadth_first(fa, bounds, nodes, [&](const Node& child) {
    if (single_class(child)) {
      reached.insert(child.surface.sorted());
    }
    return false;
  });
  std::vector<Surface> out;
  out.reserve(reached.size());
  for (const auto& comps : reached) {
    out.emplace_back(comps);
  }
  return out;
}

std::vector<Surface> enumerate_surfaces(const SearchBounds& bounds) {
  std::vector<SurfaceComponent> kinds;
  for (int g = 0; g <= bounds.max_orientable_genus; ++g) {
    kinds.push_back(SurfaceComponent::orientable(g));
  }
  for (int k = 1; k <= bounds.max_nonorientable_genus; ++k) {
    kinds.push_back(SurfaceComponent::non_orientable(k));
  }
  std::vector<Surface> out;
  std::vector<std::size_t> pick;
  // Nondecreasing index sequences enumerate multisets exactly once.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t left) {
    if (left == 0) {
      std::vector<SurfaceComponent> comps;
      for (auto i : pick) {
        comps.push_back(kinds[i]);
      }
      out.emplace_back(std::move(comps));
      return;
    }
    for (std::size_t i = from; i < kinds.size(); ++i) {
      pick.push_back(i);
      extend(i, left - 1);
      pick.pop_back();
    }
  };
  for (int n = 1; n <= bounds.max_components; ++n) {
    extend(0, static_cast<std::size_t>(n));
  }
  return out;
}

std::string to_string(PairStatus status) {
  switch (status) {
    case PairStatus::Found:
      return "found";
    case PairStatus::Rejected:
      return "rejected";
    case PairStatus::Undecided:
      return "undecided";
    case PairStatus::Mismatch:
      return "mismatch";
  }
  return "?";
}

std::size_t VerifyReport::count(PairStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [&](const PairRecord& r) { return r.status == status; }));
}

std::size_t VerifyReport::mismatches() const {
  const auto invalid = std::count_if(records.begin(), records.end(),
                                     [](const PairRecord& r) { return !r.witness_valid; });
  return count(PairStatus::Mismatch) + necessity_violations.size() +
         static_cast<std::size_t>(invalid);
}

VerifyReport verify_theorem(const SearchBounds& bounds, unsigned threads) {
  bounds.check();
  const auto surfaces = enumerate_surfaces(bounds);
  const std::size_t n = surfaces.size();

  VerifyReport report;
  report.bounds = bounds;
  report.records.resize(n * n);
  std::vector<std::vector<NecessityViolation>> violations(n);

  auto check_pair = [&](std::size_t idx) {
    const auto& fa = surfaces[idx / n];
    const auto& fb = surfaces[idx % n];
    PairRecord rec;
    rec.fa = fa;
    rec.fb = fb;
    rec.exists = decide(fa, fb).exists;
    rec.budget = std::min(heuristic_budget(fa, fb), bounds.max_moves);
    auto sub = bounds;
    sub.max_moves = rec.budget;
    const auto witness = find_witness(fa, fb, sub);
    if (witness) {
      rec.witness_length = witness->moves.size();
      rec.witness_valid = static_cast<bool>(validate(*witness));
      rec.status = rec.exists ? PairStatus::Found : PairStatus::Mismatch;
    } else {
      rec.status = rec.exists ? PairStatus::Undecided : PairStatus::Rejected;
    }
    report.records[idx] = std::move(rec);
  };

  auto check_necessity = [&](std::size_t i) {
    const auto& fa = surfaces[i];
    int budget = 1;
    for (const auto& fb : surfaces) {
      budget = std::max(budget, std::min(heuristic_budget(fa, fb), bounds.max_moves));
    }
    auto sub = bounds;
    sub.max_moves = budget;
    for (const auto& reached : enumerate_reachable(fa, sub)) {
      if (!decide(fa, reached).exists) {
        violations[i].push_back({fa, reached});
      }
    }
  };

  const std::size_t jobs = n * n + n;
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (auto job = next++; job < jobs; job = next++) {
        if (job < n * n) {
          check_pair(job);
        } else {
          check_necessity(job - n * n);
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) {
        error = std::current_exception();
      }
      next = jobs;
    }
  };
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  pool.clear();
  if (error) {
    std::rethrow_exception(error);
  }

  for (auto& v : violations) {
    report.necessity_violations.insert(report.necessity_violations.end(), v.begin(), v.end());
  }
  return report;
}

}  // namespace morsecob
