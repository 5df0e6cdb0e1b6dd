#include "morsecob/handles.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace morsecob {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Components obtainable from `c` by one self-attached 1-handle. An
// orientation-preserving handle adds a torus; a reversing one adds a Klein
// bottle, which on a non-orientable surface is the same as two cross-caps.
std::vector<SurfaceComponent> self_attach_results(const SurfaceComponent& c) {
  if (c.is_orientable()) {
    return {SurfaceComponent::orientable(c.genus() + 1),
            SurfaceComponent::non_orientable(2 * c.genus() + 2)};
  }
  return {SurfaceComponent::non_orientable(c.genus() + 2)};
}

// Inverse of self_attach_results; sorted.
std::vector<SurfaceComponent> surger_results(const SurfaceComponent& c) {
  std::vector<SurfaceComponent> out;
  if (c.is_orientable()) {
    if (c.genus() >= 1) {
      out.push_back(SurfaceComponent::orientable(c.genus() - 1));
    }
    return out;
  }
  const int k = c.genus();
  if (k % 2 == 0) {
    out.push_back(SurfaceComponent::orientable((k - 2) / 2));
  }
  if (k >= 3) {
    out.push_back(SurfaceComponent::non_orientable(k - 2));
  }
  return out;
}

// Unordered connected-sum factorizations (left <= right) of `c`.
std::vector<std::pair<SurfaceComponent, SurfaceComponent>> factorizations(
    const SurfaceComponent& c) {
  std::vector<std::pair<SurfaceComponent, SurfaceComponent>> out;
  const int n = c.genus();
  if (c.is_orientable()) {
    for (int a = 0; 2 * a <= n; ++a) {
      out.emplace_back(SurfaceComponent::orientable(a), SurfaceComponent::orientable(n - a));
    }
    return out;
  }
  for (int g = 0; n - 2 * g >= 1; ++g) {
    out.emplace_back(SurfaceComponent::orientable(g), SurfaceComponent::non_orientable(n - 2 * g));
  }
  for (int a = 1; 2 * a <= n; ++a) {
    out.emplace_back(SurfaceComponent::non_orientable(a), SurfaceComponent::non_orientable(n - a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<SurfaceComponent>& v, const SurfaceComponent& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

std::string id_str(ComponentId id) { return "#" + std::to_string(id); }

std::optional<std::string> missing(const Surface& s, ComponentId id, std::string_view what) {
  if (id >= s.size()) {
    return std::string(what) + " target " + id_str(id) + " does not exist (surface has " +
           std::to_string(s.size()) + " components)";
  }
  return std::nullopt;
}

std::vector<std::vector<ComponentId>> identity_parents(std::size_t n) {
  std::vector<std::vector<ComponentId>> parents(n);
  for (ComponentId i = 0; i < n; ++i) {
    parents[i] = {i};
  }
  return parents;
}

}  // namespace

Phase phase_of(const HandleMove& move) {
  return std::holds_alternative<Split>(move) || std::holds_alternative<Surger>(move)
             ? Phase::TwoHandle
             : Phase::OneHandle;
}

bool ComponentCap::admits(const SurfaceComponent& c) const {
  return c.is_orientable() ? c.genus() <= max_orientable_genus
                           : c.genus() <= max_nonorientable_genus;
}

std::optional<std::string> check_legal(const Surface& s, const HandleMove& move) {
  return std::visit(
      overloaded{
          [&](const Split& m) -> std::optional<std::string> {
            if (auto err = missing(s, m.target, "split")) {
              return err;
            }
            const auto sum = connected_sum(m.left, m.right);
            if (sum != s.component(m.target)) {
              return "split factors " + m.left.to_string() + " # " + m.right.to_string() +
                     " = " + sum.to_string() + " do not recombine to target " +
                     s.component(m.target).to_string();
            }
            return std::nullopt;
          },
          [&](const Surger& m) -> std::optional<std::string> {
            if (auto err = missing(s, m.target, "surger")) {
              return err;
            }
            if (!contains(self_attach_results(m.result), s.component(m.target))) {
              return "surgery cannot turn " + s.component(m.target).to_string() + " into " +
                     m.result.to_string();
            }
            return std::nullopt;
          },
          [&](const Join& m) -> std::optional<std::string> {
            if (auto err = missing(s, m.first, "join")) {
              return err;
            }
            if (auto err = missing(s, m.second, "join")) {
              return err;
            }
            if (m.first == m.second) {
              return "join needs two distinct components, got " + id_str(m.first) + " twice";
            }
            return std::nullopt;
          },
          [&](const SelfAttach& m) -> std::optional<std::string> {
            if (auto err = missing(s, m.target, "self-attach")) {
              return err;
            }
            if (!contains(self_attach_results(s.component(m.target)), m.result)) {
              return "a self-attached 1-handle cannot turn " +
                     s.component(m.target).to_string() + " into " + m.result.to_string();
            }
            return std::nullopt;
          },
      },
      move);
}

std::vector<HandleMove> legal_moves(const Surface& s, Phase phase, const ComponentCap& cap) {
  std::vector<HandleMove> out;
  const auto& comps = s.components();
  if (phase == Phase::TwoHandle) {
    for (ComponentId id = 0; id < comps.size(); ++id) {
      for (const auto& [left, right] : factorizations(comps[id])) {
        if (cap.admits(left) && cap.admits(right)) {
          out.emplace_back(Split{id, left, right});
        }
      }
    }
    for (ComponentId id = 0; id < comps.size(); ++id) {
      for (const auto& result : surger_results(comps[id])) {
        if (cap.admits(result)) {
          out.emplace_back(Surger{id, result});
        }
      }
    }
    return out;
  }
  for (ComponentId i = 0; i < comps.size(); ++i) {
    for (ComponentId j = i + 1; j < comps.size(); ++j) {
      if (cap.admits(connected_sum(comps[i], comps[j]))) {
        out.emplace_back(Join{i, j});
      }
    }
  }
  for (ComponentId id = 0; id < comps.size(); ++id) {
    for (const auto& result : self_attach_results(comps[id])) {
      if (cap.admits(result)) {
        out.emplace_back(SelfAttach{id, result});
      }
    }
  }
  return out;
}

Application apply_move(const Surface& s, const HandleMove& move) {
  if (auto err = check_legal(s, move)) {
    throw IllegalMove(*err);
  }
  auto comps = s.components();
  auto parents = identity_parents(comps.size());
  std::visit(overloaded{
                 [&](const Split& m) {
                   comps[m.target] = m.left;
                   comps.push_back(m.right);
                   parents.push_back({m.target});
                 },
                 [&](const Surger& m) { comps[m.target] = m.result; },
                 [&](const Join& m) {
                   const auto lo = std::min(m.first, m.second);
                   const auto hi = std::max(m.first, m.second);
                   comps[lo] = connected_sum(comps[lo], comps[hi]);
                   comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(hi));
                   parents[lo] = {lo, hi};
                   parents.erase(parents.begin() + static_cast<std::ptrdiff_t>(hi));
                 },
                 [&](const SelfAttach& m) { comps[m.target] = m.result; },
             },
             move);
  return Application{Surface(std::move(comps)), std::move(parents)};
}

HandleMove inverse(const Surface& before, const HandleMove& move) {
  if (auto err = check_legal(before, move)) {
    throw IllegalMove(*err);
  }
  return std::visit(
      overloaded{
          [&](const Split& m) -> HandleMove { return Join{m.target, before.size()}; },
          [&](const Surger& m) -> HandleMove {
            return SelfAttach{m.target, before.component(m.target)};
          },
          [&](const Join& m) -> HandleMove {
            const auto lo = std::min(m.first, m.second);
            const auto hi = std::max(m.first, m.second);
            return Split{lo, before.component(lo), before.component(hi)};
          },
          [&](const SelfAttach& m) -> HandleMove {
            return Surger{m.target, before.component(m.target)};
          },
      },
      move);
}

TraceGraph TraceGraph::build(const std::vector<Surface>& states,
                             const std::vector<Application>& steps) {
  TraceGraph g;
  for (const auto& s : states) {
    g.layer_sizes_.push_back(s.size());
  }
  for (std::size_t step = 0; step < steps.size(); ++step) {
    const auto& parents = steps[step].parents;
    for (ComponentId child = 0; child < parents.size(); ++child) {
      for (ComponentId parent : parents[child]) {
        g.edges_.push_back({g.offset(step) + parent, g.offset(step + 1) + child});
      }
    }
  }
  return g;
}

std::size_t TraceGraph::node_count() const {
  return std::accumulate(layer_sizes_.begin(), layer_sizes_.end(), std::size_t{0});
}

std::size_t TraceGraph::offset(std::size_t step) const {
  return std::accumulate(layer_sizes_.begin(),
                         layer_sizes_.begin() + static_cast<std::ptrdiff_t>(step),
                         std::size_t{0});
}

bool TraceGraph::connected() const {
  const auto n = node_count();
  if (n == 0) {
    return true;
  }
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (root[x] != x) {
      root[x] = root[root[x]];
      x = root[x];
    }
    return x;
  };
  std::size_t groups = n;
  for (const auto& e : edges_) {
    if (e.parent >= n || e.child >= n) {
      return false;
    }
    const auto a = find(e.parent);
    const auto b = find(e.child);
    if (a != b) {
      root[a] = b;
      --groups;
    }
  }
  return groups == 1;
}

bool TraceGraph::every_node_parented() const {
  if (layer_sizes_.empty()) {
    return true;
  }
  std::vector<bool> has_parent(node_count(), false);
  for (const auto& e : edges_) {
    if (e.child < has_parent.size()) {
      has_parent[e.child] = true;
    }
  }
  return std::all_of(has_parent.begin() + static_cast<std::ptrdiff_t>(layer_sizes_.front()),
                     has_parent.end(), [](bool b) { return b; });
}

int count_phase(const std::vector<HandleMove>& moves, Phase phase) {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(), [&](const HandleMove& m) {
    return phase_of(m) == phase;
  }));
}

Witness make_witness(const Surface& start, std::vector<HandleMove> moves) {
  std::vector<Surface> states{start};
  std::vector<Application> steps;
  Surface middle = start;
  for (const auto& m : moves) {
    steps.push_back(apply_move(states.back(), m));
    states.push_back(steps.back().surface);
    if (phase_of(m) == Phase::TwoHandle) {
      middle = states.back();
    }
  }
  Witness w;
  w.start = start;
  w.end = states.back();
  w.middle = std::move(middle);
  w.trace = TraceGraph::build(states, steps);
  w.moves = std::move(moves);
  return w;
}

ValidationReport validate(const Witness& w) {
  auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };

  if (w.moves.empty()) {
    return fail("no moves: a single singular value needs at least one handle");
  }
  bool seen_one_handle = false;
  for (std::size_t i = 0; i < w.moves.size(); ++i) {
    const auto phase = phase_of(w.moves[i]);
    if (phase == Phase::OneHandle) {
      seen_one_handle = true;
    } else if (seen_one_handle) {
      return fail("phase order: move " + std::to_string(i + 1) +
                  " is a 2-handle after a 1-handle");
    }
  }

  std::vector<Surface> states{w.start};
  std::vector<Application> steps;
  Surface middle = w.start;
  for (std::size_t i = 0; i < w.moves.size(); ++i) {
    if (auto err = check_legal(states.back(), w.moves[i])) {
      return fail("replay: move " + std::to_string(i + 1) + ": " + *err);
    }
    steps.push_back(apply_move(states.back(), w.moves[i]));
    states.push_back(steps.back().surface);
    if (phase_of(w.moves[i]) == Phase::TwoHandle) {
      middle = states.back();
    }
  }
  if (!(middle == w.middle)) {
    return fail("middle surface: replay gives " + middle.to_string() + ", witness claims " +
                w.middle.to_string());
  }
  if (!(states.back() == w.end)) {
    return fail("endpoint: replay gives " + states.back().to_string() + ", witness claims " +
                w.end.to_string());
  }

  const int expected_chi = euler_char(w.start) + 2 * count_phase(w.moves, Phase::TwoHandle) -
                           2 * count_phase(w.moves, Phase::OneHandle);
  if (euler_char(w.end) != expected_chi) {
    return fail("Euler characteristic ledger: expected " + std::to_string(expected_chi) +
                ", end has " + std::to_string(euler_char(w.end)));
  }

  const auto& trace = w.trace;
  if (trace.step_count() != states.size()) {
    return fail("trace has " + std::to_string(trace.step_count()) + " layers, expected " +
                std::to_string(states.size()));
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (trace.layer_size(i) != states[i].size()) {
      return fail("trace layer " + std::to_string(i) + " has " +
                  std::to_string(trace.layer_size(i)) + " nodes, surface has " +
                  std::to_string(states[i].size()) + " components");
    }
  }
  const auto replayed = TraceGraph::build(states, steps);
  auto edge_key = [](const TraceGraph::Edge& e) { return std::pair{e.parent, e.child}; };
  std::vector<std::pair<std::size_t, std::size_t>> got, want;
  std::transform(trace.edges().begin(), trace.edges().end(), std::back_inserter(got), edge_key);
  std::transform(replayed.edges().begin(), replayed.edges().end(), std::back_inserter(want),
                 edge_key);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) {
    return fail("trace edges disagree with the replayed moves");
  }
  if (!trace.every_node_parented()) {
    return fail("trace has a node without a parent");
  }
  if (!trace.connected()) {
    return fail("trace is disconnected: the singular level would not be connected");
  }
  return {};
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    const auto begin = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      ++i;
    }
    if (i > begin) {
      out.push_back(line.substr(begin, i - begin));
    }
  }
  return out;
}

int parse_uint(std::string_view digits, std::string_view what) {
  int value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc{} || ptr != end || value < 0) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(digits) + "'");
  }
  return value;
}

ComponentId parse_id(std::string_view tok) {
  if (tok.size() < 2 || tok.front() != '#') {
    throw std::invalid_argument("expected component id '#<n>', got '" + std::string(tok) + "'");
  }
  return static_cast<ComponentId>(parse_uint(tok.substr(1), "component id"));
}

SurfaceComponent parse_component(std::string_view tok) {
  if (tok.size() >= 2 && tok.front() == 'O') {
    return SurfaceComponent::orientable(parse_uint(tok.substr(1), "genus"));
  }
  if (tok.size() >= 2 && tok.front() == 'N') {
    const int k = parse_uint(tok.substr(1), "genus");
    if (k < 1) {
      throw std::invalid_argument("non-orientable genus must be >= 1 in '" + std::string(tok) +
                                  "'");
    }
    return SurfaceComponent::non_orientable(k);
  }
  throw std::invalid_argument("expected component 'O<g>' or 'N<k>', got '" + std::string(tok) +
                              "'");
}

void expect(std::string_view got, std::string_view want) {
  if (got != want) {
    throw std::invalid_argument("expected '" + std::string(want) + "', got '" +
                                std::string(got) + "'");
  }
}

}  // namespace

std::string format_move(const HandleMove& move) {
  return std::visit(
      overloaded{
          [](const Split& m) {
            return "2H split " + id_str(m.target) + " -> " + m.left.to_string() + " + " +
                   m.right.to_string();
          },
          [](const Surger& m) {
            return "2H surger " + id_str(m.target) + " -> " + m.result.to_string();
          },
          [](const Join& m) { return "1H join " + id_str(m.first) + " " + id_str(m.second); },
          [](const SelfAttach& m) {
            return "1H self " + id_str(m.target) + " -> " + m.result.to_string();
          },
      },
      move);
}

HandleMove parse_move(std::string_view line) {
  const auto tok = split_ws(line);
  if (tok.size() < 2) {
    throw std::invalid_argument("incomplete move '" + std::string(line) + "'");
  }
  const auto tag = tok[0];
  const auto verb = tok[1];
  auto arity = [&](std::size_t n) {
    if (tok.size() != n) {
      throw std::invalid_argument("'" + std::string(verb) + "' takes " + std::to_string(n) +
                                  " tokens, got " + std::to_string(tok.size()));
    }
  };
  if (verb == "split") {
    expect(tag, "2H");
    arity(7);
    expect(tok[3], "->");
    expect(tok[5], "+");
    return Split{parse_id(tok[2]), parse_component(tok[4]), parse_component(tok[6])};
  }
  if (verb == "surger") {
    expect(tag, "2H");
    arity(5);
    expect(tok[3], "->");
    return Surger{parse_id(tok[2]), parse_component(tok[4])};
  }
  if (verb == "join") {
    expect(tag, "1H");
    arity(4);
    return Join{parse_id(tok[2]), parse_id(tok[3])};
  }
  if (verb == "self") {
    expect(tag, "1H");
    arity(5);
    expect(tok[3], "->");
    return SelfAttach{parse_id(tok[2]), parse_component(tok[4])};
  }
  throw std::invalid_argument("unknown move '" + std::string(verb) + "'");
}

std::string format_moves(const std::vector<HandleMove>& moves) {
  std::string out;
  for (const auto& m : moves) {
    out += format_move(m);
    out += '\n';
  }
  return out;
}

std::vector<HandleMove> parse_moves(std::string_view text) {
  std::vector<HandleMove> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (split_ws(line).empty()) {
      continue;
    }
    try {
      out.push_back(parse_move(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace morsecob
