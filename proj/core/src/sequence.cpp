#include "nivat/sequence.hpp"

#include <mutex>

#include "nivat/error.hpp"

namespace nivat {

struct Sequence1D::Impl {
  Kind kind;
  std::vector<i64> word;
  std::map<i64, std::vector<i64>> rules;
  i64 seed = 0;
  i64 alt_seed = 0;
  std::vector<i64> preperiod, period;

  mutable std::mutex mu;
  mutable std::vector<i64> pos_fp;  // fixed point from seed
  mutable std::vector<i64> neg_fp;  // fixed point from alt seed

  void extend(std::vector<i64>& fp, i64 start, std::size_t need) const {
    if (fp.empty()) fp.push_back(start);
    while (fp.size() < need) {
      std::size_t before = fp.size();
      std::vector<i64> next;
      next.reserve(before * 2);
      for (i64 c : fp) {
        auto it = rules.find(c);
        if (it == rules.end()) throw error("substitution has no rule for letter " + std::to_string(c));
        next.insert(next.end(), it->second.begin(), it->second.end());
      }
      if (next.size() <= before) throw error("substitution does not grow");
      fp = std::move(next);
    }
  }
};

Sequence1D Sequence1D::periodic_word(std::vector<i64> word) {
  if (word.empty()) throw error("empty periodic word");
  Sequence1D s;
  s.impl_ = std::make_shared<Impl>();
  s.impl_->kind = Kind::word;
  s.impl_->word = std::move(word);
  return s;
}

Sequence1D Sequence1D::substitution(std::map<i64, std::vector<i64>> rules, i64 seed) {
  auto it = rules.find(seed);
  if (it == rules.end() || it->second.empty() || it->second.front() != seed)
    throw error("substitution seed is not extendable (rule must start with the seed)");
  Sequence1D s;
  s.impl_ = std::make_shared<Impl>();
  s.impl_->kind = Kind::substitution;
  s.impl_->seed = seed;
  // Alternate seed for the negative side: smallest other letter whose
  // rule starts with itself; fall back to the seed.
  s.impl_->alt_seed = seed;
  for (const auto& [c, w] : rules)
    if (c != seed && !w.empty() && w.front() == c) {
      s.impl_->alt_seed = c;
      break;
    }
  s.impl_->rules = std::move(rules);
  return s;
}

Sequence1D Sequence1D::eventually_periodic(std::vector<i64> preperiod,
                                           std::vector<i64> period) {
  if (period.empty()) throw error("empty period word");
  Sequence1D s;
  s.impl_ = std::make_shared<Impl>();
  s.impl_->kind = Kind::eventual;
  s.impl_->preperiod = std::move(preperiod);
  s.impl_->period = std::move(period);
  return s;
}

i64 Sequence1D::at(i64 i) const {
  const Impl& im = *impl_;
  switch (im.kind) {
    case Kind::word: {
      i64 n = static_cast<i64>(im.word.size());
      i64 r = ((i % n) + n) % n;
      return im.word[static_cast<std::size_t>(r)];
    }
    case Kind::substitution: {
      std::lock_guard<std::mutex> lock(im.mu);
      if (i >= 0) {
        im.extend(im.pos_fp, im.seed, static_cast<std::size_t>(i) + 1);
        return im.pos_fp[static_cast<std::size_t>(i)];
      }
      std::size_t k = static_cast<std::size_t>(-i - 1);
      im.extend(im.neg_fp, im.alt_seed, k + 1);
      return im.neg_fp[k];
    }
    case Kind::eventual: {
      i64 pre = static_cast<i64>(im.preperiod.size());
      i64 per = static_cast<i64>(im.period.size());
      if (i >= 0 && i < pre) return im.preperiod[static_cast<std::size_t>(i)];
      i64 r = (((i - pre) % per) + per) % per;
      return im.period[static_cast<std::size_t>(r)];
    }
  }
  throw error("unreachable sequence kind");
}

Sequence1D::Kind Sequence1D::kind() const { return impl_->kind; }
const std::vector<i64>& Sequence1D::word() const { return impl_->word; }
const std::map<i64, std::vector<i64>>& Sequence1D::rules() const { return impl_->rules; }
i64 Sequence1D::seed() const { return impl_->seed; }
const std::vector<i64>& Sequence1D::preperiod() const { return impl_->preperiod; }
const std::vector<i64>& Sequence1D::period() const { return impl_->period; }

}  // namespace nivat
