#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "morsecob/handles.hpp"

namespace morsecob {

/// Bounds of a finite search. The first three bound the *instances* (the
/// boundary surfaces); intermediate surfaces may hold up to
/// state_component_limit() components and orientable genus up to
/// state_component_cap().max_orientable_genus. `max_moves` bounds the
/// witness length.
struct SearchBounds {
  int max_components = 2;
  int max_nonorientable_genus = 3;
  int max_orientable_genus = 1;
  int max_moves = 8;

  /// Throws DomainError when a bound is below its minimum.
  void check() const;
  bool admits(const Surface& s) const;

  std::size_t state_component_limit() const;
  ComponentCap state_component_cap() const;
};

/// Default per-pair move budget for sufficiency runs.
int heuristic_budget(const Surface& fa, const Surface& fb);

/// Breadth-first search over phase-ordered move sequences. Returns a
/// shortest valid witness from `fa` to `fb` within `bounds`, or nullopt.
/// Absence is not a proof that no witness exists.
std::optional<Witness> find_witness(const Surface& fa, const Surface& fb,
                                    const SearchBounds& bounds);

/// Canonical forms of every surface reachable from `fa` by a valid witness
/// of at most `bounds.max_moves` moves, sorted.
std::vector<Surface> enumerate_reachable(const Surface& fa, const SearchBounds& bounds);

/// All canonical surfaces with 1..max_components components inside `bounds`.
std::vector<Surface> enumerate_surfaces(const SearchBounds& bounds);

enum class PairStatus {
  Found,      // decide says yes and a witness was found
  Rejected,   // decide says no and no witness was found
  Undecided,  // decide says yes but the move budget ran out
  Mismatch,   // a witness exists although decide says no
};

std::string to_string(PairStatus status);

struct PairRecord {
  Surface fa;
  Surface fb;
  bool exists = false;
  PairStatus status = PairStatus::Rejected;
  std::optional<std::size_t> witness_length;
  int budget = 0;
  bool witness_valid = true;
};

/// A surface reached from `fa` for which decide() answers no.
struct NecessityViolation {
  Surface fa;
  Surface reached;
};

struct VerifyReport {
  SearchBounds bounds;
  std::vector<PairRecord> records;  // in enumeration order
  std::vector<NecessityViolation> necessity_violations;

  std::size_t checked_pairs() const { return records.size(); }
  std::size_t count(PairStatus status) const;
  /// Pair mismatches plus necessity violations plus invalid witnesses.
  std::size_t mismatches() const;
  std::size_t undecided() const { return count(PairStatus::Undecided); }
};

/// Compares decide() with witness search on every pair inside `bounds`.
/// Per-pair budget is min(heuristic_budget, bounds.max_moves). Necessity is
/// also checked against the full reachable set of every lower surface.
/// `threads` == 0 picks the hardware concurrency; the report does not
/// depend on the thread count.
VerifyReport verify_theorem(const SearchBounds& bounds, unsigned threads = 0);

}  // namespace morsecob
