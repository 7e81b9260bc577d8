#pragma once

#include <map>
#include <string>
#include <vector>

#include "nivat/source.hpp"

namespace nivat {

/// How to scan translates when collecting pattern statistics.
/// Exact scanning is only available for exact-lattice sources (doubly
/// periodic); everything else yields lower bounds at a finite radius.
struct Sampling {
  bool exact = false;
  i64 radius = 64;

  static Sampling Exact() { return Sampling{true, 0}; }
  static Sampling Radius(i64 r) { return Sampling{false, r}; }
};

/// The set of observed S-patterns of a source. When exact, this is the
/// full pattern set; otherwise a lower bound labeled with the scanned
/// translate region.
struct PatternCensus {
  std::vector<Vec2> shape;
  std::map<std::string, Pattern> patterns;  // canonical key -> representative
  bool exact = false;
  std::string sample_region;

  std::size_t count() const { return patterns.size(); }
};

PatternCensus census(const ConfigurationSource& src, std::vector<Vec2> shape,
                     Sampling sampling);

/// P over the rectangle R_{n,k}.
std::size_t complexity_rect(const ConfigurationSource& src, i64 n, i64 k,
                            Sampling sampling);

/// g is generated by S when removing it does not change the census count
/// (every observed pattern on S \ {g} extends uniquely).
bool is_generated(const ConfigurationSource& src, const std::vector<Vec2>& shape,
                  Vec2 g, Sampling sampling);

bool is_generating_set(const ConfigurationSource& src, const ConvexLatticeSet& s,
                       Sampling sampling);

struct MinimalGenerating {
  ConvexLatticeSet set;
  std::size_t complexity = 0;
  bool exhaustive = true;  // false: greedy slice-removal descent
  struct BoundaryEntry {
    OrientedLine line;
    i64 drop = 0;   // P(S) - P(S \ l_S)
    i64 bound = 0;  // |S n l_S| - 1
  };
  std::vector<BoundaryEntry> boundary;
};

/// An inclusion-minimal convex T inside U with P(T) <= |T|, plus the
/// per-direction boundary report. Exhaustive for |U| <= 14, greedy
/// slice-removal descent above. Errors when P(U) > |U|.
MinimalGenerating find_minimal_generating(const ConfigurationSource& src,
                                          const ConvexLatticeSet& u,
                                          Sampling sampling);

/// Number of observed S-patterns restricting to gamma on S \ l_S.
/// Errors when gamma was never observed.
std::size_t extension_count(const ConfigurationSource& src,
                            const std::vector<Vec2>& shape, OrientedLine l,
                            const Pattern& gamma, Sampling sampling);

struct MorseHedlundVerdict {
  enum class Kind { periodic, preperiodic, no_bound };
  Kind kind = Kind::no_bound;
  i64 offset = 0;  // preperiod length (0 when fully periodic)
  i64 period = 0;
};

/// 1D periodicity detector on a one-sided windowed word: if the word
/// complexity at length n is at most n, locate an eventual period p <= n
/// verified across the horizon.
MorseHedlundVerdict morse_hedlund(const std::vector<i64>& word, i64 n, i64 horizon);

}  // namespace nivat
