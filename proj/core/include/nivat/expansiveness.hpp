#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nivat/complexity.hpp"
#include "nivat/decomposition.hpp"
#include "nivat/laurent.hpp"
#include "nivat/source.hpp"

namespace nivat {

/// Evidence that an oriented direction is expansive: a convex set whose
/// support line touches it in a single generated point.
struct ExpansiveCertificate {
  ConvexLatticeSet set;
  Vec2 contact{0, 0};
  i64 radius = 0;  // search radius at which the set was found
};

/// Evidence that an oriented direction is nonexpansive: two translates
/// agreeing on the half-plane side of a disk but differing outside it.
struct NonexpansiveWitness {
  Vec2 u1{0, 0}, u2{0, 0};
  i64 radius = 0;
  std::vector<Vec2> agreement;  // half-disk locus
  Vec2 disagreement{0, 0};
};

struct DirectionStatus {
  enum class Kind {
    certified_expansive,
    empirically_expansive,
    nonexpansive_witnessed,
    unknown
  };
  OrientedLine line;
  Kind kind = Kind::unknown;
  i64 radius = 0;
  bool probe = false;  // sanity probe, not an edge-derived candidate
  std::optional<ExpansiveCertificate> certificate;
  std::optional<NonexpansiveWitness> witness;
};

std::string to_string(DirectionStatus::Kind k);

struct AnalysisOptions {
  Sampling sampling = Sampling::Radius(64);
  i64 scan_budget = 0;  // 0: derive from the radius
};

/// Candidate nonexpansive directions: both orientations of every edge
/// direction of the reference convex set (the reflected support of a
/// verified annihilator, or a discovered minimal generating set).
/// Degenerate reference sets contribute the segment's two orientations.
std::vector<OrientedLine> candidate_directions(const ConfigurationSource& src,
                                               const std::optional<LaurentPoly>& phi,
                                               Sampling sampling);

std::optional<ExpansiveCertificate> expansive_certificate(
    const ConfigurationSource& src, OrientedLine l, i64 budget, Sampling sampling);

std::optional<NonexpansiveWitness> nonexpansive_witness(
    const ConfigurationSource& src, OrientedLine l, i64 radius,
    i64 scan_budget = 0);

/// Re-evaluates a stored witness from raw source evaluation.
bool verify_witness(const ConfigurationSource& src, OrientedLine l,
                    const NonexpansiveWitness& w);

/// The probe directions: the 8 primitive vectors with norm at most one.
std::vector<OrientedLine> probe_directions();

/// Full per-direction analysis: candidates plus probes, each classified
/// by certificate and witness searches with radii escalating up to the
/// budget. Doubly periodic sources short-circuit to certified expansive.
std::vector<DirectionStatus> classify(const ConfigurationSource& src, i64 budget,
                                      AnalysisOptions opts = {});

struct SzabadosReport {
  struct Verdict {
    std::string status;  // pass | fail | unknown | vacuous-pass | fail-expected: ...
    std::string detail;
  };
  std::vector<Vec2> period_lines;  // canonical unoriented representatives
  std::vector<DirectionStatus> statuses;
  Verdict witnessed_lines_are_period_lines;  // (A)
  Verdict period_lines_witnessed_both_ways;  // (B)
  Verdict non_period_lines_expansive;        // (C)
};

/// Empirical test of the correspondence between decomposition period
/// lines and detected nonexpansive lines.
SzabadosReport szabados_report(const ConfigurationSource& src,
                               const Decomposition& d, i64 budget,
                               AnalysisOptions opts = {});

}  // namespace nivat
