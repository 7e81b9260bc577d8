#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nivat/complexity.hpp"
#include "nivat/source.hpp"

namespace nivat {

using bigint = boost::multiprecision::cpp_int;

/// Coefficient ring: the integers (p == 0) or a prime field F_p.
struct Ring {
  i64 p = 0;

  static Ring integers() { return Ring{0}; }
  static Ring prime_field(i64 p);
  bool is_field() const { return p != 0; }
  bigint normalize(bigint v) const;
  friend bool operator==(Ring a, Ring b) { return a.p == b.p; }
};

/// Sparse Laurent polynomial over Z or F_p: exponent vector -> nonzero
/// coefficient. Terms are kept in canonical (y, x) exponent order.
class LaurentPoly {
 public:
  explicit LaurentPoly(Ring ring = Ring::integers()) : ring_(ring) {}
  static LaurentPoly monomial(Ring ring, bigint coef, Vec2 exp);

  Ring ring() const { return ring_; }
  const std::map<Vec2, bigint>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<Vec2> support() const;
  void add_term(Vec2 exp, bigint coef);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Text syntax: `c*(x,y)` terms joined by +/-, e.g.
  /// `1*(1,1) - 1*(1,0) - 1*(0,1) + 1*(0,0)`. Round-trips with parse().
  std::string str() const;
  static LaurentPoly parse(const std::string& text, Ring ring);

 private:
  Ring ring_;
  std::map<Vec2, bigint> terms_;
};

/// (phi eta)_g = sum over terms a_u * eta_{g - u}, in exact ring
/// arithmetic (symbols reduced first over a prime field).
bigint apply(const LaurentPoly& phi, const ConfigurationSource& src, Vec2 g);

struct AnnihilationVerdict {
  bool holds = false;
  std::string tested_region;
  std::optional<std::pair<Vec2, bigint>> counterexample;
};

/// Checks phi eta == 0 on every point of the region (canonical scan;
/// first failure becomes the counterexample).
AnnihilationVerdict annihilates(const LaurentPoly& phi,
                                const ConfigurationSource& src,
                                const std::vector<Vec2>& region);

/// Expanded product (X^{h_1} - 1) ... (X^{h_m} - 1).
LaurentPoly difference_product(const std::vector<Vec2>& periods, Ring ring);

/// S_phi = conv(-supp(phi)) n Z^2.
ConvexLatticeSet reflected_support(const LaurentPoly& phi);

LaurentPoly reduce_mod(const LaurentPoly& phi, i64 p);

struct AffineAnnihilator {
  LaurentPoly sigma;  // sigma eta == c on the sampled region
  bigint c;
  LaurentPoly psi;  // (X^u - 1) sigma, annihilating on the region
  Vec2 shift_dir{0, 0};
  i64 stable_radius = 0;  // radius at which the sample rank stabilized
  i64 verified_radius = 0;
};

/// Affine-annihilator discovery: builds the integer matrix with rows
/// (1, eta_{u_1+g}, ..., eta_{u_s+g}) over sampled g, extracts an exact
/// content-1 integer nullspace vector, and verifies sigma eta == c and
/// psi eta == 0 on the sampled region. Throws when the nullspace is
/// trivial at this radius.
AffineAnnihilator find_affine_annihilator(const ConfigurationSource& src,
                                          const std::vector<Vec2>& shape,
                                          i64 sampling_radius);

}  // namespace nivat
