#include "nivat/decomposition.hpp"

#include <algorithm>
#include <set>

#include "nivat/error.hpp"

namespace nivat {

bool DecompositionReport::passed() const {
  if (!sum_ok || !independence_ok) return false;
  for (bool ok : period_ok)
    if (!ok) return false;
  return true;
}

DecompositionReport verify_decomposition(const ConfigurationSource& src,
                                         const Decomposition& d,
                                         const std::vector<Vec2>& region) {
  if (d.components.empty()) throw error("empty decomposition");
  std::vector<Vec2> pts = region;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  DecompositionReport rep;
  rep.sum_ok = true;
  for (Vec2 g : pts) {
    i64 s = 0;
    for (const auto& comp : d.components) s = checked_add(s, comp.source.eval(g));
    if (s != src.eval(g)) {
      rep.sum_ok = false;
      rep.sum_counterexample = g;
      break;
    }
  }

  std::set<Vec2> in_region(pts.begin(), pts.end());
  for (const auto& comp : d.components) {
    bool ok = true;
    std::optional<Vec2> cex;
    if (comp.period.is_zero()) {
      ok = false;
    } else {
      for (Vec2 g : pts) {
        if (!in_region.count(g + comp.period)) continue;
        if (comp.source.eval(g + comp.period) != comp.source.eval(g)) {
          ok = false;
          cex = g;
          break;
        }
      }
    }
    rep.period_ok.push_back(ok);
    rep.period_counterexample.push_back(cex);
  }

  if (d.claimed_minimal) {
    for (std::size_t i = 0; i < d.components.size() && rep.independence_ok; ++i)
      for (std::size_t j = i + 1; j < d.components.size(); ++j)
        if (cross(d.components[i].period, d.components[j].period) == 0) {
          rep.independence_ok = false;
          rep.dependent_pair = {i, j};
          break;
        }
  }
  return rep;
}

i64 minimality_bound(i64 n, i64 k) {
  if (n < 1 || k < 1) throw error("dimensions must be positive");
  return std::min(n, k);
}

namespace {

std::vector<Vec2> window_points(Vec2 base, i64 w, i64 h) {
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(w * h));
  for (i64 y = 0; y < h; ++y)
    for (i64 x = 0; x < w; ++x) pts.push_back(base + Vec2{x, y});
  return pts;
}

bool in_window(Vec2 p, Vec2 base, i64 w, i64 h) {
  return p.x >= base.x && p.x < base.x + w && p.y >= base.y && p.y < base.y + h;
}

// Canonical representative of the h-coset of p within the window: the
// least window point of {p + t h}.
Vec2 coset_rep(Vec2 p, Vec2 h, Vec2 base, i64 w, i64 h_dim) {
  Vec2 best = p;
  i64 span = std::max(w, h_dim) + 1;
  for (i64 t = -span; t <= span; ++t) {
    Vec2 q = p + t * h;
    if (in_window(q, base, w, h_dim) && q < best) best = q;
  }
  return best;
}

}  // namespace

WindowSolveResult decompose_window(const ConfigurationSource& src,
                                   const std::vector<Vec2>& periods, Vec2 base,
                                   i64 width, i64 height) {
  if (periods.empty()) throw error("no periods given");
  if (width < 1 || height < 1) throw error("window dimensions must be positive");
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (periods[i].is_zero()) throw error("zero period");
    for (std::size_t j = i + 1; j < periods.size(); ++j)
      if (cross(periods[i], periods[j]) == 0)
        throw error("periods must be pairwise independent");
  }

  std::size_t m = periods.size();
  std::vector<Vec2> pts = window_points(base, width, height);

  // Variables: per component, one per coset class within the window.
  std::vector<std::map<Vec2, std::size_t>> var_of(m);
  std::size_t nvars = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (Vec2 p : pts) {
      Vec2 r = coset_rep(p, periods[i], base, width, height);
      if (!var_of[i].count(r)) var_of[i].emplace(r, nvars++);
    }

  struct Row {
    std::vector<bigrational> a;
    bigrational rhs;
    std::set<std::size_t> from;  // constraint ids
  };
  std::vector<Row> rows;
  std::vector<Vec2> labels;  // constraint id -> window point
  for (Vec2 p : pts) {
    Row row;
    row.a.assign(nvars, 0);
    for (std::size_t i = 0; i < m; ++i) {
      Vec2 r = coset_rep(p, periods[i], base, width, height);
      row.a[var_of[i].at(r)] += 1;
    }
    row.rhs = src.eval(p);
    row.from = {labels.size()};
    labels.push_back(p);
    rows.push_back(std::move(row));
  }
  // Gauge: components after the first anchored to 0 at the class of the
  // canonically least window point.
  for (std::size_t i = 1; i < m; ++i) {
    Row row;
    row.a.assign(nvars, 0);
    Vec2 r = coset_rep(pts.front(), periods[i], base, width, height);
    row.a[var_of[i].at(r)] = 1;
    row.rhs = 0;
    row.from = {};  // gauge rows carry no source point
    rows.push_back(std::move(row));
  }

  // Gauss-Jordan with provenance tracking.
  std::vector<std::size_t> pivot_row_of(nvars, static_cast<std::size_t>(-1));
  std::size_t next = 0;
  for (std::size_t col = 0; col < nvars && next < rows.size(); ++col) {
    std::size_t pr = next;
    while (pr < rows.size() && rows[pr].a[col] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[next], rows[pr]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next || rows[i].a[col] == 0) continue;
      bigrational f = rows[i].a[col] / rows[next].a[col];
      for (std::size_t j = col; j < nvars; ++j)
        rows[i].a[j] -= f * rows[next].a[j];
      rows[i].rhs -= f * rows[next].rhs;
      rows[i].from.insert(rows[next].from.begin(), rows[next].from.end());
    }
    pivot_row_of[col] = next;
    ++next;
  }
  for (std::size_t i = next; i < rows.size(); ++i) {
    bool all_zero = true;
    for (const auto& a : rows[i].a)
      if (a != 0) {
        all_zero = false;
        break;
      }
    if (all_zero && rows[i].rhs != 0) {
      WindowInfeasible inf;
      for (std::size_t id : rows[i].from) inf.witness_points.push_back(labels[id]);
      std::sort(inf.witness_points.begin(), inf.witness_points.end());
      return inf;
    }
  }

  std::vector<bigrational> val(nvars, 0);  // free variables pinned to 0
  for (std::size_t col = 0; col < nvars; ++col) {
    std::size_t r = pivot_row_of[col];
    if (r == static_cast<std::size_t>(-1)) continue;
    bigrational s = rows[r].rhs;
    for (std::size_t j = col + 1; j < nvars; ++j)
      if (rows[r].a[j] != 0) s -= rows[r].a[j] * val[j];
    val[col] = s / rows[r].a[col];
  }

  WindowSolve ws;
  ws.base = base;
  ws.width = width;
  ws.height = height;
  ws.periods = periods;
  ws.tables.resize(m);
  ws.gauge = "components 2.." + std::to_string(m) +
             " anchored to 0 at their base coset representative";
  for (std::size_t i = 0; i < m; ++i)
    for (Vec2 p : pts) {
      Vec2 r = coset_rep(p, periods[i], base, width, height);
      bigrational v = val[var_of[i].at(r)];
      if (denominator(v) != 1) ws.integral = false;
      ws.tables[i][p] = v;
    }
  return ws;
}

GaugeResult gauge_distance(const WindowSolve& w1, const WindowSolve& w2) {
  if (w1.base != w2.base || w1.width != w2.width || w1.height != w2.height ||
      w1.periods != w2.periods)
    throw error("gauge comparison needs identical windows and periods");
  GaugeOffsets out;
  for (std::size_t i = 0; i < w1.tables.size(); ++i) {
    auto it1 = w1.tables[i].begin();
    auto it2 = w2.tables[i].begin();
    bigrational c = it2->second - it1->second;
    for (; it1 != w1.tables[i].end(); ++it1, ++it2)
      if (it2->second - it1->second != c) return NotGaugeEquivalent{it1->first};
    out.offsets.push_back(c);
  }
  bigrational total = 0;
  for (const auto& c : out.offsets) total += c;
  if (total != 0) return NotGaugeEquivalent{w1.tables[0].begin()->first};
  return out;
}

WindowSolve ground_truth_solve(const Decomposition& d, Vec2 base, i64 width,
                               i64 height) {
  WindowSolve ws;
  ws.base = base;
  ws.width = width;
  ws.height = height;
  ws.gauge = "ground truth (no anchoring)";
  for (const auto& comp : d.components) {
    ws.periods.push_back(comp.period);
    std::map<Vec2, bigrational> table;
    for (Vec2 p : window_points(base, width, height)) table[p] = comp.source.eval(p);
    ws.tables.push_back(std::move(table));
  }
  return ws;
}

WindowSolve restrict_solve(const WindowSolve& w, Vec2 base, i64 width, i64 height) {
  if (base.x < w.base.x || base.y < w.base.y ||
      base.x + width > w.base.x + w.width || base.y + height > w.base.y + w.height)
    throw error("restriction window not contained in solve window");
  WindowSolve out;
  out.base = base;
  out.width = width;
  out.height = height;
  out.periods = w.periods;
  out.integral = w.integral;
  out.gauge = w.gauge + " (restricted)";
  out.tables.resize(w.tables.size());
  for (std::size_t i = 0; i < w.tables.size(); ++i)
    for (Vec2 p : window_points(base, width, height))
      out.tables[i][p] = w.tables[i].at(p);
  return out;
}

}  // namespace nivat
