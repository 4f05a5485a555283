#pragma once

// JSON forms shared by the command line tool and the Python module. Object
// keys come out sorted and arrays in a fixed order, so dumps are byte-stable.

#include <string>

#include <json.hpp>

#include "wonderful/cohomology.hpp"
#include "wonderful/faces.hpp"
#include "wonderful/formulas.hpp"
#include "wonderful/series.hpp"

namespace wonderful {

using Json = nlohmann::json;

/// Machine integer when it fits in int64, decimal string otherwise.
Json to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

/// Records {q, t, z, w, numerator, denominator} ordered by (t, z, w, q).
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j, unsigned trunc);

/// [[k, coeff], ...] in increasing degree.
Json to_json(const QPolynomial& p);

Json poincare_report(const GroupId& g, const std::string& method, const QPolynomial& p);
Json fvector_report(FaceFamily family, unsigned n, const std::vector<BigInt>& entries);

Json to_json(const Graph& g);
Json to_json(const AdmissibleFunction& f);
Json to_json(const WeightedPartition& p);
WeightedPartition partition_from_json(const Json& j, unsigned ground);

}  // namespace wonderful
