#include "nivat/expansiveness.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nivat/error.hpp"

namespace nivat {

std::string to_string(DirectionStatus::Kind k) {
  switch (k) {
    case DirectionStatus::Kind::certified_expansive: return "certified_expansive";
    case DirectionStatus::Kind::empirically_expansive: return "empirically_expansive";
    case DirectionStatus::Kind::nonexpansive_witnessed: return "nonexpansive_witnessed";
    case DirectionStatus::Kind::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

int angle_half(Vec2 v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

// Angular order starting at (1,0), counterclockwise.
bool angular_less(OrientedLine a, OrientedLine b) {
  if (angle_half(a.dir) != angle_half(b.dir))
    return angle_half(a.dir) < angle_half(b.dir);
  i64 c = cross(a.dir, b.dir);
  if (c != 0) return c > 0;
  return a.dir < b.dir;
}

std::vector<OrientedLine> directions_of(const ConvexLatticeSet& ref) {
  std::set<OrientedLine> dirs;
  if (ref.size() >= 2) {
    if (ref.degenerate()) {
      OrientedLine d = primitive(ref.vertices()[1] - ref.vertices()[0]).first;
      dirs.insert(d);
      dirs.insert(d.reversed());
    } else {
      for (const OrientedEdge& e : ref.edges()) {
        dirs.insert(e.direction());
        dirs.insert(e.direction().reversed());
      }
    }
  }
  std::vector<OrientedLine> out(dirs.begin(), dirs.end());
  std::sort(out.begin(), out.end(), angular_less);
  return out;
}

// Periods declared by the source itself or, for sums, by its members.
std::vector<Vec2> gather_periods(const ConfigurationSource& src) {
  if (src.kind() == ConfigurationSource::Kind::sum) {
    std::vector<Vec2> ps;
    for (const auto& [coef, member] : src.terms())
      for (Vec2 h : member.declared_periods()) ps.push_back(h);
    return ps;
  }
  return src.declared_periods();
}

std::optional<LaurentPoly> derive_annihilator(const ConfigurationSource& src) {
  std::vector<Vec2> ps = gather_periods(src);
  if (ps.empty()) return std::nullopt;
  LaurentPoly phi = difference_product(ps, Ring::integers());
  if (!annihilates(phi, src, centered_box(20)).holds) return std::nullopt;
  return phi;
}

}  // namespace

std::vector<OrientedLine> candidate_directions(const ConfigurationSource& src,
                                               const std::optional<LaurentPoly>& phi,
                                               Sampling sampling) {
  ConvexLatticeSet ref;
  if (phi) {
    ref = reflected_support(*phi);
  } else {
    bool found = false;
    for (i64 k = 2; k <= 5 && !found; ++k) {
      try {
        ref = find_minimal_generating(src, ConvexLatticeSet::hull(rect(k, k)),
                                      sampling)
                  .set;
        found = true;
      } catch (const error&) {
      }
    }
    if (!found) throw error("no candidates at this radius");
  }
  return directions_of(ref);
}

std::vector<OrientedLine> probe_directions() {
  std::vector<OrientedLine> out;
  for (i64 y = -1; y <= 1; ++y)
    for (i64 x = -1; x <= 1; ++x)
      if (x != 0 || y != 0) out.push_back(OrientedLine{Vec2{x, y}});
  std::sort(out.begin(), out.end(), angular_less);
  return out;
}

std::optional<ExpansiveCertificate> expansive_certificate(
    const ConfigurationSource& src, OrientedLine l, i64 budget, Sampling sampling) {
  if (budget < 1) throw error("budget must be positive");
  Vec2 n = l.normal();
  Vec2 origin{0, 0};

  auto single_contact = [&](const ConvexLatticeSet& s) {
    SupportContact sc = support_line(l, s);
    return sc.contact.size() == 1 && sc.contact[0] == origin;
  };

  // Thin two-point sets first, then half-plane slabs of growing radius.
  for (Vec2 p : centered_box(1)) {
    if (dot(p, n) < 1) continue;
    ConvexLatticeSet s = ConvexLatticeSet::hull({origin, p});
    if (!single_contact(s)) continue;
    if (is_generated(src, s.points(), origin, sampling))
      return ExpansiveCertificate{s, origin, 1};
  }
  for (i64 r = 1; r <= budget; ++r) {
    std::vector<Vec2> gen = {origin};
    for (Vec2 g : centered_box(r))
      if (dot(g, n) >= 1) gen.push_back(g);
    if (gen.size() < 2) continue;
    ConvexLatticeSet s = ConvexLatticeSet::hull(gen);
    if (!single_contact(s)) continue;
    if (is_generated(src, s.points(), origin, sampling))
      return ExpansiveCertificate{s, origin, r};
  }
  return std::nullopt;
}

namespace {

std::vector<i64> values_at(const ConfigurationSource& src,
                           const std::vector<Vec2>& pts, Vec2 u) {
  std::vector<i64> vs;
  vs.reserve(pts.size());
  for (Vec2 g : pts) vs.push_back(src.eval(g + u));
  return vs;
}

std::optional<NonexpansiveWitness> scan_for_witness(
    const ConfigurationSource& src, const std::vector<Vec2>& half,
    const std::vector<Vec2>& outside, const std::vector<Vec2>& translates,
    i64 radius) {
  std::map<std::vector<i64>, std::vector<std::pair<Vec2, std::vector<i64>>>> buckets;
  for (Vec2 u : translates) {
    std::vector<i64> key = values_at(src, half, u);
    std::vector<i64> out = values_at(src, outside, u);
    auto& bucket = buckets[key];
    for (const auto& [u0, out0] : bucket) {
      for (std::size_t i = 0; i < outside.size(); ++i) {
        if (out0[i] != out[i]) {
          NonexpansiveWitness w;
          w.u1 = u0;
          w.u2 = u;
          w.radius = radius;
          w.agreement = half;
          w.disagreement = outside[i];
          return w;
        }
      }
    }
    bucket.emplace_back(u, std::move(out));
  }
  return std::nullopt;
}

}  // namespace

std::optional<NonexpansiveWitness> nonexpansive_witness(
    const ConfigurationSource& src, OrientedLine l, i64 radius, i64 scan_budget) {
  if (radius < 1) throw error("radius must be positive");
  Vec2 n = l.normal();
  std::vector<Vec2> half, outside;
  for (Vec2 g : centered_box(radius))
    (dot(g, n) >= 0 ? half : outside).push_back(g);
  if (outside.empty()) return std::nullopt;

  std::vector<Vec2> translates;
  if (src.kind() == ConfigurationSource::Kind::layer) {
    // A layer window depends on the translate only through the shift of
    // its driving sequence; scan that 1D shift directly.
    i64 t_max = scan_budget > 0 ? scan_budget : std::max<i64>(1024, 64 * radius);
    Vec2 w = src.layer_transversal();
    for (i64 t = -t_max; t <= t_max; ++t) translates.push_back(t * w);
  } else if (src.exact_lattice()) {
    auto lat = *src.period_lattice();
    for (i64 y = 0; y < lat.c; ++y)
      for (i64 x = 0; x < lat.a; ++x) translates.push_back(Vec2{x, y});
  } else {
    i64 b = scan_budget > 0 ? scan_budget : std::max<i64>(128, 16 * radius);
    translates = centered_box(b);
  }
  return scan_for_witness(src, half, outside, translates, radius);
}

bool verify_witness(const ConfigurationSource& src, OrientedLine l,
                    const NonexpansiveWitness& w) {
  Vec2 n = l.normal();
  for (Vec2 g : w.agreement) {
    if (dot(g, n) < 0 || g.norm_inf() > w.radius) return false;
    if (src.eval(g + w.u1) != src.eval(g + w.u2)) return false;
  }
  if (dot(w.disagreement, n) >= 0 || w.disagreement.norm_inf() > w.radius)
    return false;
  return src.eval(w.disagreement + w.u1) != src.eval(w.disagreement + w.u2);
}

std::vector<DirectionStatus> classify(const ConfigurationSource& src, i64 budget,
                                      AnalysisOptions opts) {
  if (budget < 1) throw error("budget must be positive");

  std::optional<LaurentPoly> phi = derive_annihilator(src);
  std::vector<OrientedLine> candidates;
  try {
    candidates = candidate_directions(src, phi, opts.sampling);
  } catch (const error&) {
    // no reference set at this sampling; probes still run
  }
  std::set<OrientedLine> candidate_set(candidates.begin(), candidates.end());
  std::vector<OrientedLine> all = candidates;
  for (OrientedLine p : probe_directions())
    if (!candidate_set.count(p)) all.push_back(p);
  std::sort(all.begin(), all.end(), angular_less);

  // Doubly periodic: two independent verified periods make every
  // direction expansive; skip the searches.
  bool doubly_periodic = false;
  if (src.exact_lattice()) {
    const auto& ps = src.declared_periods();
    doubly_periodic = ps.size() >= 2 && cross(ps[0], ps[1]) != 0;
  }

  std::vector<DirectionStatus> out;
  for (OrientedLine l : all) {
    DirectionStatus st;
    st.line = l;
    st.probe = !candidate_set.count(l);
    if (doubly_periodic) {
      st.kind = DirectionStatus::Kind::certified_expansive;
      st.radius = 0;
      out.push_back(st);
      continue;
    }
    Sampling cert_sampling = src.exact_lattice() ? Sampling::Exact() : opts.sampling;
    auto cert = expansive_certificate(src, l, budget, cert_sampling);
    if (cert) {
      st.kind = src.exact_lattice() ? DirectionStatus::Kind::certified_expansive
                                    : DirectionStatus::Kind::empirically_expansive;
      st.radius = src.exact_lattice() ? cert->radius : opts.sampling.radius;
      st.certificate = cert;
      out.push_back(st);
      continue;
    }
    std::optional<NonexpansiveWitness> wit;
    for (i64 r = 1; r <= budget && !wit; ++r)
      wit = nonexpansive_witness(src, l, r, opts.scan_budget);
    if (wit) {
      st.kind = DirectionStatus::Kind::nonexpansive_witnessed;
      st.radius = wit->radius;
      st.witness = wit;
    } else {
      st.kind = DirectionStatus::Kind::unknown;
      st.radius = budget;
    }
    out.push_back(st);
  }
  return out;
}

namespace {

Vec2 unoriented_rep(Vec2 dir) {
  if (dir.x < 0 || (dir.x == 0 && dir.y < 0)) return -dir;
  return dir;
}

}  // namespace

SzabadosReport szabados_report(const ConfigurationSource& src,
                               const Decomposition& d, i64 budget,
                               AnalysisOptions opts) {
  SzabadosReport rep;
  std::set<Vec2> period_lines;
  for (const auto& comp : d.components)
    period_lines.insert(unoriented_rep(primitive(comp.period).first.dir));
  rep.period_lines.assign(period_lines.begin(), period_lines.end());

  rep.statuses = classify(src, budget, opts);

  auto parallel_to_period = [&](Vec2 dir) {
    return period_lines.count(unoriented_rep(dir)) != 0;
  };

  bool doubly_periodic = false;
  if (src.exact_lattice()) {
    const auto& ps = src.declared_periods();
    doubly_periodic = ps.size() >= 2 && cross(ps[0], ps[1]) != 0;
  }

  // (A) every witnessed line lies on a period line.
  {
    bool any = false, all_ok = true;
    std::string bad;
    for (const auto& st : rep.statuses) {
      if (st.kind != DirectionStatus::Kind::nonexpansive_witnessed) continue;
      any = true;
      if (!parallel_to_period(st.line.dir)) {
        all_ok = false;
        bad += to_string(st.line.dir) + " ";
      }
    }
    if (!any)
      rep.witnessed_lines_are_period_lines = {"vacuous-pass", "no witnesses found"};
    else if (all_ok)
      rep.witnessed_lines_are_period_lines = {"pass", ""};
    else
      rep.witnessed_lines_are_period_lines = {"fail",
                                              "witnessed off period lines: " + bad};
  }

  // (B) every period line is witnessed in both orientations.
  {
    if (doubly_periodic) {
      rep.period_lines_witnessed_both_ways = {"fail-expected: doubly periodic",
                                              "all directions expansive"};
    } else {
      std::map<Vec2, DirectionStatus::Kind> kind_of;
      for (const auto& st : rep.statuses) kind_of[st.line.dir] = st.kind;
      bool all_ok = true;
      std::string missing;
      for (Vec2 h : rep.period_lines) {
        for (Vec2 dir : {h, -h}) {
          auto it = kind_of.find(dir);
          if (it == kind_of.end() ||
              it->second != DirectionStatus::Kind::nonexpansive_witnessed) {
            all_ok = false;
            missing += to_string(dir) + " ";
          }
        }
      }
      if (all_ok)
        rep.period_lines_witnessed_both_ways = {"pass", ""};
      else
        rep.period_lines_witnessed_both_ways = {"unknown",
                                                "not witnessed within budget: " +
                                                    missing};
    }
  }

  // (C) every non-period direction acquires an expansiveness certificate.
  {
    bool all_ok = true, any_unknown = false;
    std::string bad;
    for (const auto& st : rep.statuses) {
      if (parallel_to_period(st.line.dir)) continue;
      if (st.kind == DirectionStatus::Kind::nonexpansive_witnessed) {
        all_ok = false;
        bad += to_string(st.line.dir) + " ";
      } else if (st.kind == DirectionStatus::Kind::unknown) {
        any_unknown = true;
        bad += to_string(st.line.dir) + " ";
      }
    }
    if (!all_ok)
      rep.non_period_lines_expansive = {"fail", "witnessed non-period lines: " + bad};
    else if (any_unknown)
      rep.non_period_lines_expansive = {"unknown", "no certificate within budget: " + bad};
    else
      rep.non_period_lines_expansive = {"pass", ""};
  }

  return rep;
}

}  // namespace nivat
