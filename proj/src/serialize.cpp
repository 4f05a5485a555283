#include "wonderful/serialize.hpp"

#include <limits>
#include <stdexcept>

namespace wonderful {

Json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json to_json(const TruncatedSeries& s) {
  Json out = Json::array();
  for (const auto& [m, c] : s.terms()) {
    out.push_back({{"q", m.q},
                   {"t", m.t},
                   {"z", m.z},
                   {"w", m.w},
                   {"numerator", to_json(c.get_num())},
                   {"denominator", to_json(c.get_den())}});
  }
  return out;
}

TruncatedSeries series_from_json(const Json& j, unsigned trunc) {
  TruncatedSeries out(trunc);
  for (const auto& rec : j) {
    Monomial m{rec.at("q").get<unsigned>(), rec.at("t").get<unsigned>(), rec.at("z").get<unsigned>(),
               rec.at("w").get<unsigned>()};
    const BigInt den = bigint_from_json(rec.at("denominator"));
    if (den == 0) throw std::invalid_argument("zero denominator in series record");
    Rational c(bigint_from_json(rec.at("numerator")), den);
    c.canonicalize();
    out.add_term(m, c);
  }
  return out;
}

Json to_json(const QPolynomial& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.coefficients()) out.push_back({k, to_json(c)});
  return out;
}

Json poincare_report(const GroupId& g, const std::string& method, const QPolynomial& p) {
  return {{"group", {{"r", g.r()}, {"p", g.p()}, {"n", g.n()}}}, {"method", method}, {"poincare", to_json(p)}};
}

Json fvector_report(FaceFamily family, unsigned n, const std::vector<BigInt>& entries) {
  Json f = Json::array();
  for (const auto& e : entries) f.push_back(to_json(e));
  return {{"type", to_string(family)}, {"n", n}, {"fvector", f}};
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return {{"nodes", g.nodes()}, {"edges", edges}};
}

Json to_json(const AdmissibleFunction& f) {
  Json support = Json::array(), exponents = Json::array();
  for (const auto& [e, k] : f.assignment) {
    support.push_back(e.to_string());
    exponents.push_back(k);
  }
  return {{"support", support}, {"exponents", exponents}};
}

Json to_json(const WeightedPartition& p) {
  Json out = Json::array();
  for (const auto& part : p.parts) {
    Json members = Json::array(), weights = Json::array();
    for (const auto& m : part.members) {
      members.push_back(m.label);
      weights.push_back(m.weight);
    }
    out.push_back({{"members", members}, {"weights", weights}, {"exponent", part.exponent}});
  }
  return out;
}

WeightedPartition partition_from_json(const Json& j, unsigned ground) {
  WeightedPartition p;
  p.ground = ground;
  for (const auto& rec : j) {
    const auto& members = rec.at("members");
    const auto& weights = rec.at("weights");
    if (members.size() != weights.size()) {
      throw std::invalid_argument("members and weights differ in length");
    }
    WeightedPart part;
    part.exponent = rec.at("exponent").get<unsigned>();
    for (std::size_t i = 0; i < members.size(); ++i) {
      part.members.push_back({members[i].get<unsigned>(), weights[i].get<unsigned>()});
    }
    p.parts.push_back(std::move(part));
  }
  return p;
}

}  // namespace wonderful
