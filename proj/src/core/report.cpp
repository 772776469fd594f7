#include "algmat/report.hpp"

namespace algmat {

using nlohmann::json;

json subset_json(Subset s) {
  json a = json::array();
  for (auto i : subset_indices(s)) a.push_back(i);
  return a;
}

json matroid_json(const Matroid& m) {
  json bases = json::array(), circuits = json::array();
  for (Subset b : m.bases()) bases.push_back(subset_json(b));
  for (Subset c : m.circuits()) circuits.push_back(subset_json(c));
  return json{{"schema", kJsonSchema}, {"n", m.size()},         {"labels", m.labels()},
              {"rank", m.rank()},      {"bases", std::move(bases)}, {"circuits", std::move(circuits)}};
}

json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_json(const FieldMatrix& m) {
  json rows = json::array();
  for (const auto& r : m.rows) {
    json row = json::array();
    for (const auto& x : r) row.push_back(x.to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json polys_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json ideal_json(const IdealPresentation& ideal) {
  return json{{"field", ideal.ring().field().to_string()},
              {"vars", ideal.ring().vars()},
              {"generators", polys_json(ideal.generators())}};
}

json specialization_json(const SpecializationReport& r) {
  json point = json::array();
  for (const auto& x : r.point) point.push_back(x.to_string());
  json denoms = json::array();
  for (auto [i, j] : r.denominator_failures) denoms.push_back(json::array({i, j}));
  json minors = json::array();
  for (Subset b : r.basis_minor_failures) minors.push_back(subset_json(b));
  json out{{"point", std::move(point)},
           {"on_variety", r.on_variety},
           {"denominator_failures", std::move(denoms)},
           {"basis_minor_failures", std::move(minors)},
           {"matches", r.matches ? json(*r.matches) : json(nullptr)},
           {"matrix", r.specialized ? matrix_json(*r.specialized) : json(nullptr)},
           {"matroid_at_point", r.matroid_at_point ? matroid_json(*r.matroid_at_point) : json(nullptr)}};
  return out;
}

json counters_json(const GbCounters& c) {
  return json{{"gb_runs", c.runs.load()},
              {"gb_cache_hits", c.cache_hits.load()},
              {"pairs", c.pairs.load()},
              {"reductions", c.reductions.load()}};
}

}  // namespace algmat
