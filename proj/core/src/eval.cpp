#include "charcrf/eval.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "charcrf/error.hpp"
#include "charcrf/kv.hpp"

#include "json.hpp"

namespace charcrf::eval {

namespace {

void finish(TypeScore& s) {
  const bool empty = s.predicted == 0 && s.gold == 0;
  s.precision = empty ? 1.0 : (s.predicted == 0 ? 0.0 : static_cast<double>(s.tp) / s.predicted);
  s.recall = empty ? 1.0 : (s.gold == 0 ? 0.0 : static_cast<double>(s.tp) / s.gold);
  s.f1 = empty ? 1.0
               : (s.precision + s.recall == 0.0
                      ? 0.0
                      : 2.0 * s.precision * s.recall / (s.precision + s.recall));
}

}  // namespace

EvalReport score(const std::vector<AnnotatedDocument>& gold,
                 const std::vector<AnnotatedDocument>& pred) {
  if (gold.size() != pred.size()) {
    throw Error(errkind::invalid_argument,
                "document count mismatch: " + std::to_string(gold.size()) + " gold vs " +
                    std::to_string(pred.size()) + " predicted");
  }
  EvalReport report;
  for (std::size_t d = 0; d < gold.size(); ++d) {
    if (gold[d].text != pred[d].text) {
      throw Error(errkind::invalid_argument,
                  "document " + std::to_string(d) + " texts differ");
    }
    std::set<std::tuple<int, int, std::string>> gold_set;
    for (const auto& s : gold[d].entities) {
      gold_set.emplace(s.start, s.end, s.type);
      ++report.per_type[s.type].gold;
    }
    for (const auto& s : pred[d].entities) {
      auto& ts = report.per_type[s.type];
      ++ts.predicted;
      if (gold_set.count({s.start, s.end, s.type})) ++ts.tp;
    }
  }
  for (auto& [type, ts] : report.per_type) {
    finish(ts);
    report.overall.tp += ts.tp;
    report.overall.predicted += ts.predicted;
    report.overall.gold += ts.gold;
  }
  finish(report.overall);
  return report;
}

namespace {

std::string fixed4(double v) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(4);
  s << v;
  return s.str();
}

void row(std::ostringstream& out, const std::string& name, const TypeScore& s) {
  out << name;
  for (std::size_t i = name.size(); i < 12; ++i) out << ' ';
  out << fixed4(s.precision) << "  " << fixed4(s.recall) << "  " << fixed4(s.f1) << "  "
      << s.tp << "/" << s.predicted << "/" << s.gold << "\n";
}

}  // namespace

std::string EvalReport::to_table() const {
  std::ostringstream out;
  out << "type        prec    recall  f1      tp/pred/gold\n";
  for (const auto& [type, s] : per_type) row(out, type, s);
  row(out, "overall", overall);
  return out.str();
}

std::string EvalReport::to_json() const {
  nlohmann::json j;
  auto put = [](const TypeScore& s) {
    return nlohmann::json{{"tp", s.tp},
                          {"predicted", s.predicted},
                          {"gold", s.gold},
                          {"precision", s.precision},
                          {"recall", s.recall},
                          {"f1", s.f1}};
  };
  j["overall"] = put(overall);
  j["types"] = nlohmann::json::object();
  for (const auto& [type, s] : per_type) j["types"][type] = put(s);
  return j.dump(2);
}

}  // namespace charcrf::eval
