#ifndef ALGMAT_REPORT_HPP
#define ALGMAT_REPORT_HPP

#include "json.hpp"

#include "algmat/idealfile.hpp"

namespace algmat {

inline constexpr int kJsonSchema = 1;

/// Ascending 0-based element indices.
nlohmann::json subset_json(Subset s);
/// {schema, n, labels, rank, bases, circuits}; bases and circuits in canonical order.
nlohmann::json matroid_json(const Matroid& m);
nlohmann::json matrix_json(const QMatrix& m);
nlohmann::json matrix_json(const FieldMatrix& m);
nlohmann::json polys_json(const std::vector<Polynomial>& ps);
nlohmann::json ideal_json(const IdealPresentation& ideal);
nlohmann::json specialization_json(const SpecializationReport& r);
nlohmann::json counters_json(const GbCounters& c);

}  // namespace algmat

#endif
