#include <doctest.h>

#include "wonderful/serialize.hpp"

using namespace wonderful;

TEST_CASE("integers") {
  CHECK(to_json(BigInt(42)) == Json(42));
  const BigInt big = factorial(25);
  CHECK(to_json(big) == Json(big.get_str()));
  CHECK(bigint_from_json(to_json(big)) == big);
  CHECK(bigint_from_json(Json(-7)) == -7);
  CHECK_THROWS_AS(bigint_from_json(Json(1.5)), std::invalid_argument);
}

TEST_CASE("series round trip") {
  const TruncatedSeries s = psi(6) + phi_full_monomial(2, 6);
  const Json j = to_json(s);
  CHECK(series_from_json(j, 6) == s);
  CHECK(series_from_json(Json::parse(j.dump()), 6) == s);
  const TruncatedSeries big = scale_t(exp(TruncatedSeries::monomial(12, {0, 1, 0, 0})), Rational(1) / Rational(factorial(20)));
  CHECK(series_from_json(Json::parse(to_json(big).dump()), 12) == big);

  const Json rec = to_json(TruncatedSeries::monomial(3, {1, 2, 1, 0}, Rational(-3, 4)))[0];
  CHECK(rec.dump() == R"({"denominator":4,"numerator":-3,"q":1,"t":2,"w":0,"z":1})");

  Json bad = j;
  bad[0]["denominator"] = 0;
  CHECK_THROWS_AS(series_from_json(bad, 6), std::invalid_argument);
}

TEST_CASE("reports") {
  const Json p = poincare_report(GroupId(2, 1, 3), "series", QPolynomial{1, 8, 1});
  CHECK(p.dump() == R"({"group":{"n":3,"p":1,"r":2},"method":"series","poincare":[[0,1],[1,8],[2,1]]})");
  const Json f = fvector_report(FaceFamily::D, 4, {1, 10, 24, 16});
  CHECK(f.dump() == R"({"fvector":[1,10,24,16],"n":4,"type":"D"})");
  CHECK(to_json(dynkin_graph(FaceFamily::D, 4)).dump() == R"({"edges":[[1,2],[2,3],[2,4]],"nodes":4})");
}

TEST_CASE("monomials and partitions") {
  const GroupId g(2, 1, 3);
  const AdmissibleFunction f{g, {{BuildingElement::weak({1, 2, 3}, {0, 1, 0}, 2), 1}}};
  CHECK(to_json(f).dump() == R"({"exponents":[1],"support":["{1, 2^1, 3}"]})");

  const WeightedPartition p = encode_partition(f);
  const Json j = to_json(p);
  CHECK(j.dump() == R"([{"exponent":1,"members":[1,2,3],"weights":[0,1,0]}])");
  CHECK(partition_from_json(j, 3) == p);
  CHECK(decode_partition(partition_from_json(j, 3), g) == f);

  Json bad = j;
  bad[0]["weights"] = Json::array({0, 1});
  CHECK_THROWS_AS(partition_from_json(bad, 3), std::invalid_argument);
}
