#pragma once

#include <map>
#include <string>
#include <vector>

#include "charcrf/text.hpp"

namespace charcrf::eval {

struct TypeScore {
  long tp = 0;
  long predicted = 0;
  long gold = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Entity-level exact-match scores, micro-averaged overall plus a per-type
// breakdown.
struct EvalReport {
  std::map<std::string, TypeScore> per_type;
  TypeScore overall;

  std::string to_table() const;
  std::string to_json() const;
};

// A predicted span counts iff the gold document holds an identical
// (start, end, type) span. P = tp/pred, R = tp/gold, F1 = 2PR/(P+R); a zero
// denominator yields 0, except that 0 predicted and 0 gold score as 1.
// Documents must be index-aligned with identical texts.
EvalReport score(const std::vector<AnnotatedDocument>& gold,
                 const std::vector<AnnotatedDocument>& pred);

}  // namespace charcrf::eval
