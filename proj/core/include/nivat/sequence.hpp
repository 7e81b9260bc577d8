#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nivat/geometry.hpp"

namespace nivat {

/// A two-sided integer sequence, evaluable at any index of Z.
///
/// Kinds:
///  - periodic word: s(i) = word[i mod n]
///  - substitution fixed point: non-negative indices come from iterating
///    the substitution on the seed letter; negative indices use the fixed
///    point of the alternate seed (s(-n-1) = s'(n)), falling back to the
///    seed's own fixed point when no other letter admits one
///  - eventually periodic: explicit preperiod then period for i >= 0,
///    periodic continuation for i < 0
class Sequence1D {
 public:
  enum class Kind { word, substitution, eventual };

  static Sequence1D periodic_word(std::vector<i64> word);
  static Sequence1D substitution(std::map<i64, std::vector<i64>> rules, i64 seed);
  static Sequence1D eventually_periodic(std::vector<i64> preperiod,
                                        std::vector<i64> period);

  i64 at(i64 i) const;
  Kind kind() const;

  const std::vector<i64>& word() const;
  const std::map<i64, std::vector<i64>>& rules() const;
  i64 seed() const;
  const std::vector<i64>& preperiod() const;
  const std::vector<i64>& period() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

}  // namespace nivat
