#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nivat/source.hpp"

namespace nivat {

using bigrational = boost::multiprecision::cpp_rational;

/// A claimed periodic decomposition eta = eta_1 + ... + eta_m with one
/// declared period per component.
struct Decomposition {
  struct Component {
    ConfigurationSource source;
    Vec2 period;
  };
  std::vector<Component> components;
  bool claimed_minimal = false;
};

struct DecompositionReport {
  bool sum_ok = false;
  std::optional<Vec2> sum_counterexample;
  std::vector<bool> period_ok;
  std::vector<std::optional<Vec2>> period_counterexample;
  bool independence_ok = true;  // only checked when claimed_minimal
  std::optional<std::pair<std::size_t, std::size_t>> dependent_pair;

  bool passed() const;
};

/// Checks sum equality, per-component periodicity, and (for claimed
/// minimal decompositions) pairwise independence of the periods, all on
/// the given finite region. Failures are report entries, not errors.
DecompositionReport verify_decomposition(const ConfigurationSource& src,
                                         const Decomposition& d,
                                         const std::vector<Vec2>& region);

/// Upper bound min{n,k} for the length of a minimal decomposition under
/// the complexity hypothesis at (n,k).
i64 minimality_bound(i64 n, i64 k);

/// Component value tables on a window, each h_i-periodic inside the
/// window, summing to eta. Components after the first are anchored to 0
/// at their canonical base coset representative.
struct WindowSolve {
  Vec2 base{0, 0};
  i64 width = 0, height = 0;
  std::vector<Vec2> periods;
  std::vector<std::map<Vec2, bigrational>> tables;  // window point -> value
  bool integral = true;
  std::string gauge;
};

struct WindowInfeasible {
  std::vector<Vec2> witness_points;  // an unsatisfiable constraint subset
};

using WindowSolveResult = std::variant<WindowSolve, WindowInfeasible>;

/// Solves the exact rational system for component values on coset
/// representatives within the window, with the sum constraint at every
/// window point.
WindowSolveResult decompose_window(const ConfigurationSource& src,
                                   const std::vector<Vec2>& periods, Vec2 base,
                                   i64 width, i64 height);

struct GaugeOffsets {
  std::vector<bigrational> offsets;  // per component, summing to zero
};
struct NotGaugeEquivalent {
  Vec2 witness{0, 0};
};
using GaugeResult = std::variant<GaugeOffsets, NotGaugeEquivalent>;

/// Per-component constants translating w1's tables onto w2's, or a
/// witness point where no such constants exist.
GaugeResult gauge_distance(const WindowSolve& w1, const WindowSolve& w2);

/// Ground-truth window solve read off from decomposition components
/// (for comparing solver output up to gauge).
WindowSolve ground_truth_solve(const Decomposition& d, Vec2 base, i64 width,
                               i64 height);

/// Restriction of a solve to a sub-window with the same base.
WindowSolve restrict_solve(const WindowSolve& w, Vec2 base, i64 width, i64 height);

}  // namespace nivat
