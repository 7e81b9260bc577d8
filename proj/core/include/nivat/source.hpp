#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nivat/geometry.hpp"
#include "nivat/sequence.hpp"

namespace nivat {

/// Symbols are plain (unbounded in spirit, 64-bit checked in practice)
/// integers; sums of layers may leave any finite alphabet.
using Symbol = i64;

/// An evaluable model of a configuration on Z^2.
///
/// Kinds:
///  - doubly_periodic(h1, h2, table): values on a fundamental domain of
///    the sublattice <h1,h2>, extended by lattice invariance
///  - layer(h, s): value at g is s(det(h, g)); h is a period
///  - sum: integer linear combination of member sources
/// Shifting and mod-p reduction wrap a source without copying it.
class ConfigurationSource {
 public:
  enum class Kind { doubly_periodic, layer, sum };

  /// Hermite normal form of a rank-2 sublattice: basis (a,b), (0,c)
  /// with a > 0, c > 0, 0 <= b < c. Fundamental domain [0,a) x [0,c).
  struct Hnf {
    i64 a = 1, b = 0, c = 1;
    Vec2 reduce(Vec2 g) const;
    i64 index() const { return checked_mul(a, c); }  // |det|
  };

  static ConfigurationSource doubly_periodic(Vec2 h1, Vec2 h2,
                                             std::vector<std::vector<i64>> table);
  static ConfigurationSource constant(i64 value);
  static ConfigurationSource layer(Vec2 h, Sequence1D seq);
  static ConfigurationSource sum(
      std::vector<std::pair<i64, ConfigurationSource>> terms);

  Symbol eval(Vec2 g) const;
  /// eval(shifted(u), g) == eval(g + u).
  ConfigurationSource shifted(Vec2 u) const;
  /// Symbol-wise reduction mod a prime p.
  ConfigurationSource reduced_mod(i64 p) const;

  Kind kind() const;
  bool exact_lattice() const;  // complete pattern statistics computable
  const std::vector<Vec2>& declared_periods() const;
  /// Period lattice in HNF, present exactly for exact-lattice sources.
  std::optional<Hnf> period_lattice() const;
  std::optional<i64> modulus() const;
  const std::vector<std::pair<i64, ConfigurationSource>>& terms() const;
  Vec2 layer_period() const;
  const Sequence1D& layer_sequence() const;
  /// For a layer with period h: a vector w with det(h, w) == 1, so that
  /// translating by t*w shifts the driving sequence by t.
  Vec2 layer_transversal() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// A finite window of a configuration: a domain and its values.
/// Equality is up to translating the domain's minimal corner to the
/// origin; the canonical key scans points in (y, x) order.
struct Pattern {
  std::vector<Vec2> domain;   // sorted canonical
  std::vector<Symbol> values;  // aligned with domain

  std::string canonical_key() const;
  std::optional<Symbol> value_at(Vec2 g) const;
  /// Restriction to a sub-domain (points must belong to the domain).
  Pattern restrict(const std::vector<Vec2>& sub) const;
  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.canonical_key() == b.canonical_key();
  }
};

Pattern window(const ConfigurationSource& src, std::vector<Vec2> domain);

/// Restricted periodicity: p(g+h) == p(g) whenever both are in the
/// domain; vacuously true when the overlap is empty.
bool window_period_check(const Pattern& p, Vec2 h);

/// All h with ||h||_inf <= radius that are periods of the centered
/// (4*radius)^2 window. Sorted canonically.
std::vector<Vec2> detect_periods(const ConfigurationSource& src, i64 radius);

/// Rectangle R_{n,k} based at the origin.
std::vector<Vec2> rect(i64 n, i64 k);
/// Centered square {g : ||g||_inf <= r}.
std::vector<Vec2> centered_box(i64 r);

}  // namespace nivat
