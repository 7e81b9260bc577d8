#include "nivat/complexity.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <thread>

#include "nivat/error.hpp"

namespace nivat {

namespace {

unsigned worker_count() {
  if (const char* env = std::getenv("NIVAT_THREADS")) {
    long n = std::atol(env);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

Pattern pattern_at(const ConfigurationSource& src, const std::vector<Vec2>& shape,
                   Vec2 u) {
  Pattern p;
  p.domain = shape;
  p.values.reserve(shape.size());
  for (Vec2 g : shape) p.values.push_back(src.eval(g + u));
  return p;
}

void scan_translates(const ConfigurationSource& src, const std::vector<Vec2>& shape,
                     const std::vector<Vec2>& translates,
                     std::map<std::string, Pattern>& out) {
  unsigned workers = worker_count();
  if (workers <= 1 || translates.size() < 256) {
    for (Vec2 u : translates) {
      Pattern p = pattern_at(src, shape, u);
      out.emplace(p.canonical_key(), std::move(p));
    }
    return;
  }
  workers = std::min<unsigned>(workers, 16);
  std::vector<std::map<std::string, Pattern>> partial(workers);
  std::vector<std::thread> threads;
  std::size_t chunk = (translates.size() + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(translates.size(), lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, lo, hi, w] {
      for (std::size_t i = lo; i < hi; ++i) {
        Pattern p = pattern_at(src, shape, translates[i]);
        partial[w].emplace(p.canonical_key(), std::move(p));
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& m : partial)
    for (auto& [k, p] : m) out.emplace(k, std::move(p));
}

std::string points_key(const std::vector<Vec2>& pts) {
  std::string k;
  for (Vec2 g : pts) k += to_string(g);
  return k;
}

}  // namespace

PatternCensus census(const ConfigurationSource& src, std::vector<Vec2> shape,
                     Sampling sampling) {
  std::sort(shape.begin(), shape.end());
  shape.erase(std::unique(shape.begin(), shape.end()), shape.end());
  PatternCensus c;
  c.shape = shape;
  if (shape.empty()) {
    c.patterns.emplace("", Pattern{});
    c.exact = true;
    c.sample_region = "empty shape";
    return c;
  }
  std::vector<Vec2> translates;
  if (sampling.exact) {
    auto lat = src.period_lattice();
    if (!lat) throw error("exactness unavailable for sampled sources");
    for (i64 y = 0; y < lat->c; ++y)
      for (i64 x = 0; x < lat->a; ++x) translates.push_back(Vec2{x, y});
    c.exact = true;
    c.sample_region = "fundamental domain " + std::to_string(lat->a) + "x" +
                      std::to_string(lat->c);
  } else {
    translates = centered_box(sampling.radius);
    c.exact = false;
    c.sample_region = "centered box radius " + std::to_string(sampling.radius);
  }
  scan_translates(src, shape, translates, c.patterns);
  return c;
}

std::size_t complexity_rect(const ConfigurationSource& src, i64 n, i64 k,
                            Sampling sampling) {
  return census(src, rect(n, k), sampling).count();
}

bool is_generated(const ConfigurationSource& src, const std::vector<Vec2>& shape,
                  Vec2 g, Sampling sampling) {
  if (shape.size() < 2) throw error("is_generated needs |S| >= 2");
  if (std::find(shape.begin(), shape.end(), g) == shape.end())
    throw error("point not in shape");
  std::vector<Vec2> rest;
  for (Vec2 p : shape)
    if (p != g) rest.push_back(p);
  return census(src, shape, sampling).count() == census(src, rest, sampling).count();
}

bool is_generating_set(const ConfigurationSource& src, const ConvexLatticeSet& s,
                       Sampling sampling) {
  if (s.size() < 2) return true;  // singleton: nothing to remove
  for (Vec2 v : s.vertices())
    if (!is_generated(src, s.points(), v, sampling)) return false;
  return true;
}

namespace {

struct SearchCtx {
  const ConfigurationSource& src;
  Sampling sampling;
  std::map<std::string, std::size_t> count_memo;
  std::set<std::string> visited;
  // qualifying convex subsets: (points, complexity)
  std::vector<std::pair<std::vector<Vec2>, std::size_t>> qualifying;

  std::size_t complexity_of(const std::vector<Vec2>& pts) {
    std::string k = points_key(pts);
    auto it = count_memo.find(k);
    if (it != count_memo.end()) return it->second;
    std::size_t c = census(src, pts, sampling).count();
    count_memo.emplace(k, c);
    return c;
  }

  void dfs(const ConvexLatticeSet& t) {
    std::string k = points_key(t.points());
    if (!visited.insert(k).second) return;
    if (complexity_of(t.points()) <= t.size())
      qualifying.emplace_back(t.points(), complexity_of(t.points()));
    if (t.size() <= 1) return;
    for (Vec2 v : t.vertices()) {
      std::vector<Vec2> rest;
      for (Vec2 p : t.points())
        if (p != v) rest.push_back(p);
      if (rest.empty()) continue;
      dfs(ConvexLatticeSet::hull(rest));
    }
  }
};

std::vector<OrientedLine> boundary_directions(const ConvexLatticeSet& s) {
  std::set<OrientedLine> dirs;
  if (s.size() == 1) return {};
  if (s.degenerate()) {
    OrientedLine d = primitive(s.vertices()[1] - s.vertices()[0]).first;
    dirs.insert(d);
    dirs.insert(d.reversed());
  } else {
    for (const OrientedEdge& e : s.edges()) {
      dirs.insert(e.direction());
      dirs.insert(e.direction().reversed());
    }
  }
  return {dirs.begin(), dirs.end()};
}

}  // namespace

MinimalGenerating find_minimal_generating(const ConfigurationSource& src,
                                          const ConvexLatticeSet& u,
                                          Sampling sampling) {
  SearchCtx ctx{src, sampling, {}, {}, {}};
  if (ctx.complexity_of(u.points()) > u.size())
    throw error("complexity precondition violated");

  MinimalGenerating out;
  if (u.size() <= 14) {
    ctx.dfs(u);
    // Inclusion-minimal among qualifying sets, ties by canonical key.
    std::vector<std::pair<std::vector<Vec2>, std::size_t>> minimal;
    for (const auto& [pts, cx] : ctx.qualifying) {
      bool has_smaller = false;
      for (const auto& [other, ocx] : ctx.qualifying) {
        if (other.size() < pts.size() &&
            std::includes(pts.begin(), pts.end(), other.begin(), other.end())) {
          has_smaller = true;
          break;
        }
      }
      if (!has_smaller) minimal.emplace_back(pts, cx);
    }
    auto best = std::min_element(minimal.begin(), minimal.end(),
                                 [](const auto& a, const auto& b) {
                                   return points_key(a.first) < points_key(b.first);
                                 });
    out.set = ConvexLatticeSet::hull(best->first);
    out.complexity = best->second;
    out.exhaustive = true;
  } else {
    // Greedy descent: keep removing a support-line slice while the
    // complexity inequality persists.
    ConvexLatticeSet t = u;
    bool progress = true;
    while (progress) {
      progress = false;
      for (OrientedLine l : boundary_directions(t)) {
        SupportContact sc = support_line(l, t);
        std::vector<Vec2> rest;
        for (Vec2 p : t.points())
          if (!std::binary_search(sc.contact.begin(), sc.contact.end(), p))
            rest.push_back(p);
        if (rest.empty()) continue;
        if (ctx.complexity_of(rest) <= rest.size()) {
          t = ConvexLatticeSet::hull(rest);
          progress = true;
          break;
        }
      }
    }
    out.set = t;
    out.complexity = ctx.complexity_of(t.points());
    out.exhaustive = false;
  }

  for (OrientedLine l : boundary_directions(out.set)) {
    SupportContact sc = support_line(l, out.set);
    std::vector<Vec2> rest;
    for (Vec2 p : out.set.points())
      if (!std::binary_search(sc.contact.begin(), sc.contact.end(), p))
        rest.push_back(p);
    MinimalGenerating::BoundaryEntry e;
    e.line = l;
    e.drop = static_cast<i64>(out.complexity) -
             static_cast<i64>(ctx.complexity_of(rest));
    e.bound = static_cast<i64>(sc.contact.size()) - 1;
    out.boundary.push_back(e);
  }
  return out;
}

std::size_t extension_count(const ConfigurationSource& src,
                            const std::vector<Vec2>& shape, OrientedLine l,
                            const Pattern& gamma, Sampling sampling) {
  PatternCensus full = census(src, shape, sampling);
  SupportContact sc = support_line(l, full.shape);
  std::vector<Vec2> rest;
  for (Vec2 p : full.shape)
    if (!std::binary_search(sc.contact.begin(), sc.contact.end(), p))
      rest.push_back(p);
  std::string want = gamma.canonical_key();
  std::size_t n = 0;
  for (const auto& [key, pat] : full.patterns)
    if (pat.restrict(rest).canonical_key() == want) ++n;
  if (n == 0) throw error("pattern not in language");
  return n;
}

MorseHedlundVerdict morse_hedlund(const std::vector<i64>& word, i64 n, i64 horizon) {
  if (n < 1) throw error("factor length must be positive");
  if (horizon < 3 * n) throw error("horizon must be at least 3n");
  if (static_cast<i64>(word.size()) < horizon) throw error("word shorter than horizon");

  std::set<std::vector<i64>> factors;
  for (i64 i = 0; i + n <= horizon; ++i)
    factors.insert(std::vector<i64>(word.begin() + i, word.begin() + i + n));
  MorseHedlundVerdict v;
  if (static_cast<i64>(factors.size()) > n) {
    v.kind = MorseHedlundVerdict::Kind::no_bound;
    return v;
  }
  for (i64 p = 1; p <= n; ++p) {
    i64 m = 0;
    for (i64 i = horizon - p - 1; i >= 0; --i) {
      if (word[static_cast<std::size_t>(i)] != word[static_cast<std::size_t>(i + p)]) {
        m = i + 1;
        break;
      }
    }
    if (m + 2 * p <= horizon) {
      v.kind = m == 0 ? MorseHedlundVerdict::Kind::periodic
                      : MorseHedlundVerdict::Kind::preperiodic;
      v.offset = m;
      v.period = p;
      return v;
    }
  }
  v.kind = MorseHedlundVerdict::Kind::no_bound;
  return v;
}

}  // namespace nivat
