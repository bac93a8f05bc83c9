#ifndef FAN_SERIALIZE_HPP
#define FAN_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "fan/funcalc.hpp"
#include "fan/measure.hpp"
#include "fan/realization.hpp"
#include "fan/series.hpp"

namespace fan {

using Json = nlohmann::json;

/// {"dim":2,"max_degree":6,"coeffs":[{"alpha":[1,0],"re":1.0,"im":0.0},...]}
/// Writers emit coefficients in canonical order.
Json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const Json& j);

/// {"dim":2,"atoms":[{"point":[[re,im],...],"weight":w},...]}
Json measure_to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const Json& j);

/// {"n":2,"d":2,"matrices":[[[[re,im],...row...],...],...]} row-major entries.
Json tuple_to_json(const OperatorTuple& tuple);
OperatorTuple tuple_from_json(const Json& j);

Json realization_to_json(const RealizationData& r);
RealizationData realization_from_json(const Json& j);

/// 17 significant digits, the CLI float format.
std::string format_double(double v);

/// Raised on schema violations; carries a pointer to the offending field.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fan

#endif
