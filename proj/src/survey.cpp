#include "cwb/survey.hpp"

#include <algorithm>
#include <set>

#include "cwb/linalg.hpp"

namespace cwb {

namespace {

std::string point_key(const std::map<Sym, Rat>& p) {
  std::string s;
  for (const auto& [sym, q] : p) s += sym.text() + "=" + to_string(q) + ";";
  return s;
}

}  // namespace

SurveyClosure survey_closure(
    const LcaPresentation& a,
    const std::function<std::vector<Poly>(const LcaPresentation&)>& pivots_of,
    int max_rounds) {
  SurveyClosure out;
  GenericityCollector merged;
  std::map<Sym, std::vector<Rat>> values;
  std::set<std::string> solved;

  std::vector<Sym> ps(a.params.begin(), a.params.end());

  auto enumerate_points = [&]() {
    std::vector<std::map<Sym, Rat>> pts;
    std::vector<size_t> idx(ps.size(), 0);
    while (true) {
      size_t d = 0;
      while (d < ps.size()) {
        size_t limit = values.count(ps[d]) ? values[ps[d]].size() : 0;
        if (idx[d] < limit) {
          ++idx[d];
          break;
        }
        idx[d] = 0;
        ++d;
      }
      if (d == ps.size()) break;
      std::map<Sym, Rat> point;
      for (size_t i = 0; i < ps.size(); ++i)
        if (idx[i] > 0) point.emplace(ps[i], values[ps[i]][idx[i] - 1]);
      if (!point.empty()) pts.push_back(std::move(point));
    }
    return pts;
  };

  auto ingest = [&](const std::vector<Poly>& pivots) {
    bool grew = false;
    for (const Poly& p : pivots) merged.note(p);
    std::map<Sym, std::vector<Rat>> cand = candidate_special_values(pivots, ps);
    for (const auto& [s, vals] : cand)
      for (const Rat& v : vals) {
        auto& known = values[s];
        if (std::find(known.begin(), known.end(), v) == known.end()) {
          known.push_back(v);
          std::sort(known.begin(), known.end());
          grew = true;
        }
      }
    return grew;
  };

  ingest(pivots_of(a));
  for (int round = 0; round < max_rounds; ++round) {
    bool grew = false;
    for (const std::map<Sym, Rat>& pt : enumerate_points()) {
      std::string key = point_key(pt);
      if (solved.count(key)) continue;
      solved.insert(key);
      grew = ingest(pivots_of(a.specialized(pt))) || grew;
    }
    if (!grew) break;
  }
  out.points = enumerate_points();
  out.merged_genericity = merged.conditions;
  return out;
}

}  // namespace cwb
