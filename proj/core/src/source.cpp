#include "nivat/source.hpp"

#include <algorithm>

#include "nivat/error.hpp"

namespace nivat {

namespace {

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Extended gcd: returns g and (u, v) with a*u + b*v == g.
void egcd(i64 a, i64 b, i64& g, i64& u, i64& v) {
  if (b == 0) {
    g = a < 0 ? -a : a;
    u = a < 0 ? -1 : 1;
    v = 0;
    return;
  }
  i64 g1, u1, v1;
  egcd(b, a % b, g1, u1, v1);
  g = g1;
  u = v1;
  v = u1 - (a / b) * v1;
}

}  // namespace

struct ConfigurationSource::Impl {
  Kind kind;
  Vec2 offset{0, 0};
  std::optional<i64> mod;
  std::vector<Vec2> periods;

  // doubly periodic
  Hnf hnf;
  std::vector<std::vector<i64>> table;

  // layer
  Vec2 h{0, 0};
  Vec2 transversal{0, 0};
  std::optional<Sequence1D> seq;

  // sum
  std::vector<std::pair<i64, ConfigurationSource>> terms;

  Symbol raw_eval(Vec2 g) const {
    switch (kind) {
      case Kind::doubly_periodic: {
        Vec2 r = hnf.reduce(g);
        return table[static_cast<std::size_t>(r.y)][static_cast<std::size_t>(r.x)];
      }
      case Kind::layer:
        return seq->at(cross(h, g));
      case Kind::sum: {
        Symbol s = 0;
        for (const auto& [coef, src] : terms)
          s = checked_add(s, checked_mul(coef, src.eval(g)));
        return s;
      }
    }
    throw error("unreachable source kind");
  }
};

Vec2 ConfigurationSource::Hnf::reduce(Vec2 g) const {
  i64 q = floor_div(g.x, a);
  i64 x = g.x - q * a;
  i64 y = g.y - q * b;
  y -= c * floor_div(y, c);
  return Vec2{x, y};
}

ConfigurationSource ConfigurationSource::doubly_periodic(
    Vec2 h1, Vec2 h2, std::vector<std::vector<i64>> table) {
  if (cross(h1, h2) == 0) throw error("doubly periodic source needs independent periods");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::doubly_periodic;
  impl->periods = {h1, h2};

  // Hermite normal form of <h1, h2>: basis (a,b), (0,c).
  Vec2 g1 = h1, g2 = h2;
  while (g2.x != 0) {
    i64 q = g1.x / g2.x;
    g1 = g1 - q * g2;
    std::swap(g1, g2);
  }
  if (g1.x < 0) g1 = -g1;
  if (g2.y < 0) g2 = -g2;
  Hnf hnf;
  hnf.a = g1.x;
  hnf.c = g2.y;
  hnf.b = ((g1.y % hnf.c) + hnf.c) % hnf.c;
  impl->hnf = hnf;

  if (static_cast<i64>(table.size()) != hnf.c)
    throw error("table must have " + std::to_string(hnf.c) + " rows (fundamental domain " +
                std::to_string(hnf.a) + "x" + std::to_string(hnf.c) + ")");
  for (const auto& row : table)
    if (static_cast<i64>(row.size()) != hnf.a)
      throw error("table rows must have " + std::to_string(hnf.a) +
                  " entries (fundamental domain " + std::to_string(hnf.a) + "x" +
                  std::to_string(hnf.c) + ")");
  impl->table = std::move(table);

  ConfigurationSource s;
  s.impl_ = impl;
  return s;
}

ConfigurationSource ConfigurationSource::constant(i64 value) {
  return doubly_periodic(Vec2{1, 0}, Vec2{0, 1}, {{value}});
}

ConfigurationSource ConfigurationSource::layer(Vec2 h, Sequence1D seq) {
  if (h.is_zero()) throw error("zero layer period");
  auto [dir, mult] = primitive(h);
  if (mult != 1) throw error("layer period must be primitive");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::layer;
  impl->h = h;
  impl->periods = {h};
  impl->seq = std::move(seq);
  i64 g, u, v;
  egcd(h.x, -h.y, g, u, v);  // h.x*u - h.y*v == 1 for primitive h
  impl->transversal = Vec2{v, u};
  ConfigurationSource s;
  s.impl_ = impl;
  return s;
}

ConfigurationSource ConfigurationSource::sum(
    std::vector<std::pair<i64, ConfigurationSource>> terms) {
  if (terms.empty()) throw error("empty sum source");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::sum;
  impl->terms = std::move(terms);
  ConfigurationSource s;
  s.impl_ = impl;
  return s;
}

Symbol ConfigurationSource::eval(Vec2 g) const {
  const Impl& im = *impl_;
  Symbol v = im.raw_eval(g + im.offset);
  if (im.mod) v = ((v % *im.mod) + *im.mod) % *im.mod;
  return v;
}

ConfigurationSource ConfigurationSource::shifted(Vec2 u) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->offset = impl->offset + u;
  ConfigurationSource s;
  s.impl_ = impl;
  return s;
}

ConfigurationSource ConfigurationSource::reduced_mod(i64 p) const {
  if (!is_prime(p)) throw error("modulus must be prime");
  auto impl = std::make_shared<Impl>(*impl_);
  impl->mod = p;
  ConfigurationSource s;
  s.impl_ = impl;
  return s;
}

ConfigurationSource::Kind ConfigurationSource::kind() const { return impl_->kind; }

bool ConfigurationSource::exact_lattice() const {
  return impl_->kind == Kind::doubly_periodic;
}

const std::vector<Vec2>& ConfigurationSource::declared_periods() const {
  return impl_->periods;
}

std::optional<ConfigurationSource::Hnf> ConfigurationSource::period_lattice() const {
  if (!exact_lattice()) return std::nullopt;
  return impl_->hnf;
}

std::optional<i64> ConfigurationSource::modulus() const { return impl_->mod; }

const std::vector<std::pair<i64, ConfigurationSource>>& ConfigurationSource::terms()
    const {
  return impl_->terms;
}

Vec2 ConfigurationSource::layer_period() const {
  if (impl_->kind != Kind::layer) throw error("not a layer source");
  return impl_->h;
}

const Sequence1D& ConfigurationSource::layer_sequence() const {
  if (impl_->kind != Kind::layer) throw error("not a layer source");
  return *impl_->seq;
}

Vec2 ConfigurationSource::layer_transversal() const {
  if (impl_->kind != Kind::layer) throw error("not a layer source");
  return impl_->transversal;
}

std::string Pattern::canonical_key() const {
  i64 minx = 0, miny = 0;
  if (!domain.empty()) {
    minx = domain[0].x;
    miny = domain[0].y;
    for (Vec2 g : domain) {
      minx = std::min(minx, g.x);
      miny = std::min(miny, g.y);
    }
  }
  std::string key;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    key += std::to_string(domain[i].x - minx);
    key += ',';
    key += std::to_string(domain[i].y - miny);
    key += '=';
    key += std::to_string(values[i]);
    key += ';';
  }
  return key;
}

std::optional<Symbol> Pattern::value_at(Vec2 g) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), g);
  if (it == domain.end() || *it != g) return std::nullopt;
  return values[static_cast<std::size_t>(it - domain.begin())];
}

Pattern Pattern::restrict(const std::vector<Vec2>& sub) const {
  Pattern p;
  p.domain = sub;
  std::sort(p.domain.begin(), p.domain.end());
  for (Vec2 g : p.domain) {
    auto v = value_at(g);
    if (!v) throw error("restriction point outside pattern domain");
    p.values.push_back(*v);
  }
  return p;
}

Pattern window(const ConfigurationSource& src, std::vector<Vec2> domain) {
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  Pattern p;
  p.domain = std::move(domain);
  p.values.reserve(p.domain.size());
  for (Vec2 g : p.domain) p.values.push_back(src.eval(g));
  return p;
}

bool window_period_check(const Pattern& p, Vec2 h) {
  if (h.is_zero()) throw error("zero period vector");
  for (std::size_t i = 0; i < p.domain.size(); ++i) {
    auto v = p.value_at(p.domain[i] + h);
    if (v && *v != p.values[i]) return false;
  }
  return true;
}

std::vector<Vec2> detect_periods(const ConfigurationSource& src, i64 radius) {
  if (radius < 1) throw error("radius must be positive");
  Pattern w = window(src, centered_box(2 * radius));
  std::vector<Vec2> out;
  for (i64 y = -radius; y <= radius; ++y)
    for (i64 x = -radius; x <= radius; ++x) {
      Vec2 h{x, y};
      if (h.is_zero()) continue;
      if (window_period_check(w, h)) out.push_back(h);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec2> rect(i64 n, i64 k) {
  if (n < 1 || k < 1) throw error("rectangle dimensions must be positive");
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(n * k));
  for (i64 y = 0; y < k; ++y)
    for (i64 x = 0; x < n; ++x) pts.push_back(Vec2{x, y});
  return pts;
}

std::vector<Vec2> centered_box(i64 r) {
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>((2 * r + 1) * (2 * r + 1)));
  for (i64 y = -r; y <= r; ++y)
    for (i64 x = -r; x <= r; ++x) pts.push_back(Vec2{x, y});
  return pts;
}

}  // namespace nivat
