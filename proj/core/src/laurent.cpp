#include "nivat/laurent.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <set>

#include "nivat/error.hpp"

namespace nivat {

using boost::multiprecision::cpp_rational;

namespace {

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Ring Ring::prime_field(i64 p) {
  if (!is_prime(p)) throw error("ring modulus must be prime");
  return Ring{p};
}

bigint Ring::normalize(bigint v) const {
  if (p == 0) return v;
  bigint r = v % p;
  if (r < 0) r += p;
  return r;
}

LaurentPoly LaurentPoly::monomial(Ring ring, bigint coef, Vec2 exp) {
  LaurentPoly p(ring);
  p.add_term(exp, std::move(coef));
  return p;
}

std::vector<Vec2> LaurentPoly::support() const {
  std::vector<Vec2> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

void LaurentPoly::add_term(Vec2 exp, bigint coef) {
  bigint v = ring_.normalize(terms_[exp] + std::move(coef));
  if (v == 0)
    terms_.erase(exp);
  else
    terms_[exp] = std::move(v);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.ring_ == b.ring_)) throw error("ring mismatch");
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.ring_ == b.ring_)) throw error("ring mismatch");
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.ring_ == b.ring_)) throw error("ring mismatch");
  LaurentPoly r(a.ring_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bigint a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
      first = false;
    } else {
      if (a < 0) {
        out += " - ";
        a = -a;
      } else {
        out += " + ";
      }
    }
    out += a.str() + "*" + to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(const std::string& text, Ring ring) {
  LaurentPoly p(ring);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> i64 {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw error("polynomial parse error: expected integer at position " +
                  std::to_string(start));
    return std::stoll(text.substr(start, i - start));
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw error(std::string("polynomial parse error: expected '") + c +
                  "' at position " + std::to_string(i));
    ++i;
  };
  skip_ws();
  if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size())
    return p;  // literal zero polynomial
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) {
      if (first) throw error("polynomial parse error: empty input");
      break;
    }
    i64 sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw error("polynomial parse error: expected '+' or '-' at position " +
                  std::to_string(i));
    }
    i64 coef = parse_int();
    expect('*');
    expect('(');
    i64 x = parse_int();
    expect(',');
    i64 y = parse_int();
    expect(')');
    p.add_term(Vec2{x, y}, bigint(sign) * coef);
    first = false;
  }
  return p;
}

bigint apply(const LaurentPoly& phi, const ConfigurationSource& src, Vec2 g) {
  Ring ring = phi.ring();
  bigint acc = 0;
  for (const auto& [u, a] : phi.terms()) {
    bigint sym = ring.normalize(bigint(src.eval(g - u)));
    acc += a * sym;
  }
  return ring.normalize(acc);
}

AnnihilationVerdict annihilates(const LaurentPoly& phi,
                                const ConfigurationSource& src,
                                const std::vector<Vec2>& region) {
  std::vector<Vec2> pts = region;
  std::sort(pts.begin(), pts.end());
  AnnihilationVerdict v;
  v.tested_region = std::to_string(pts.size()) + " points";
  if (!pts.empty())
    v.tested_region += " from " + to_string(pts.front()) + " to " + to_string(pts.back());
  for (Vec2 g : pts) {
    bigint val = apply(phi, src, g);
    if (val != 0) {
      v.holds = false;
      v.counterexample = {g, val};
      return v;
    }
  }
  v.holds = true;
  return v;
}

LaurentPoly difference_product(const std::vector<Vec2>& periods, Ring ring) {
  LaurentPoly acc = LaurentPoly::monomial(ring, 1, Vec2{0, 0});
  for (Vec2 h : periods) {
    if (h.is_zero()) throw error("zero period in difference product");
    LaurentPoly f(ring);
    f.add_term(h, 1);
    f.add_term(Vec2{0, 0}, -1);
    acc = acc * f;
  }
  return acc;
}

ConvexLatticeSet reflected_support(const LaurentPoly& phi) {
  if (phi.is_zero()) throw error("reflected support of zero polynomial");
  std::vector<Vec2> neg;
  for (Vec2 u : phi.support()) neg.push_back(-u);
  return ConvexLatticeSet::hull(neg);
}

LaurentPoly reduce_mod(const LaurentPoly& phi, i64 p) {
  Ring fp = Ring::prime_field(p);
  LaurentPoly r(fp);
  for (const auto& [e, c] : phi.terms()) r.add_term(e, c);
  return r;
}

namespace {

// Fraction-free (Bareiss) forward elimination. Returns pivot
// (row, column) pairs; the matrix is left in echelon form.
std::vector<std::pair<std::size_t, std::size_t>> bareiss(
    std::vector<std::vector<bigint>>& m) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  bigint prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pr = r;
    while (pr < rows && m[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[r][col];
    pivots.emplace_back(r, col);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<bigint>> sample_rows(const ConfigurationSource& src,
                                             const std::vector<Vec2>& shape,
                                             i64 radius) {
  std::set<std::vector<bigint>> seen;
  std::vector<std::vector<bigint>> rows;
  for (Vec2 g : centered_box(radius)) {
    std::vector<bigint> row;
    row.reserve(shape.size() + 1);
    row.push_back(1);
    for (Vec2 u : shape) row.push_back(bigint(src.eval(u + g)));
    if (seen.insert(row).second) rows.push_back(std::move(row));
  }
  return rows;
}

// Exact nullspace vector for the first free column: integer entries,
// content 1, first nonzero entry positive.
std::optional<std::vector<bigint>> nullspace_vector(std::vector<std::vector<bigint>> m) {
  if (m.empty()) return std::nullopt;
  std::size_t cols = m[0].size();
  auto pivots = bareiss(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto [r, c] : pivots) is_pivot[c] = true;
  std::size_t free_col = cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col == cols) return std::nullopt;

  std::vector<cpp_rational> v(cols, 0);
  v[free_col] = 1;
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [r, c] = *it;
    cpp_rational s = 0;
    for (std::size_t j = c + 1; j < cols; ++j)
      if (m[r][j] != 0) s += cpp_rational(m[r][j]) * v[j];
    v[c] = -s / cpp_rational(m[r][c]);
  }
  bigint lcm = 1;
  for (const auto& q : v) lcm = boost::multiprecision::lcm(lcm, denominator(q));
  std::vector<bigint> out(cols);
  bigint content = 0;
  for (std::size_t i = 0; i < cols; ++i) {
    out[i] = numerator(v[i]) * (lcm / denominator(v[i]));
    content = boost::multiprecision::gcd(content, out[i]);
  }
  if (content > 1)
    for (auto& x : out) x /= content;
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

bool lex_xy_less(Vec2 a, Vec2 b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }

}  // namespace

AffineAnnihilator find_affine_annihilator(const ConfigurationSource& src,
                                          const std::vector<Vec2>& shape_in,
                                          i64 sampling_radius) {
  if (shape_in.empty()) throw error("empty shape");
  if (sampling_radius < 2) throw error("sampling radius must be at least 2");
  std::vector<Vec2> shape = shape_in;
  std::sort(shape.begin(), shape.end());
  shape.erase(std::unique(shape.begin(), shape.end()), shape.end());

  // Monitor rank growth with the radius; record where it stabilizes.
  i64 stable_radius = sampling_radius;
  std::size_t prev_rank = 0;
  for (i64 r = 2; r <= sampling_radius; ++r) {
    auto rows = sample_rows(src, shape, r);
    auto m = rows;
    std::size_t rank = bareiss(m).size();
    if (r > 2 && rank == prev_rank) {
      stable_radius = r;
      break;
    }
    prev_rank = rank;
    stable_radius = r;
  }

  auto rows = sample_rows(src, shape, sampling_radius);
  auto vec = nullspace_vector(rows);
  if (!vec) throw error("no annihilator at this sampling radius");
  const auto& a = *vec;

  AffineAnnihilator out;
  out.stable_radius = stable_radius;
  out.verified_radius = sampling_radius;
  out.sigma = LaurentPoly(Ring::integers());
  for (std::size_t i = 0; i < shape.size(); ++i)
    if (a[i + 1] != 0) out.sigma.add_term(-shape[i], a[i + 1]);
  out.c = -a[0];
  if (out.sigma.is_zero()) throw error("no annihilator at this sampling radius");

  for (Vec2 g : centered_box(sampling_radius))
    if (apply(out.sigma, src, g) != out.c)
      throw error("no annihilator at this sampling radius");

  // Shift direction: the lexicographically smallest (x, then y) edge
  // direction of the reflected support of sigma.
  ConvexLatticeSet s_sigma = reflected_support(out.sigma);
  Vec2 u{1, 0};
  if (s_sigma.size() >= 2) {
    if (s_sigma.degenerate()) {
      Vec2 d = primitive(s_sigma.vertices()[1] - s_sigma.vertices()[0]).first.dir;
      u = lex_xy_less(d, -d) ? d : -d;
    } else {
      bool have = false;
      for (const OrientedEdge& e : s_sigma.edges()) {
        Vec2 d = e.direction().dir;
        if (!have || lex_xy_less(d, u)) {
          u = d;
          have = true;
        }
      }
    }
  }
  out.shift_dir = u;
  LaurentPoly shift(Ring::integers());
  shift.add_term(u, 1);
  shift.add_term(Vec2{0, 0}, -1);
  out.psi = shift * out.sigma;

  AnnihilationVerdict v = annihilates(out.psi, src, centered_box(sampling_radius));
  if (!v.holds) throw error("no annihilator at this sampling radius");
  return out;
}

}  // namespace nivat
