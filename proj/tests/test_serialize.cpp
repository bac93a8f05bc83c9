#include <doctest.h>

#include "fan/realization.hpp"
#include "fan/rng.hpp"
#include "fan/serialize.hpp"

using namespace fan;

TEST_CASE("series JSON schema") {
  const Json j = Json::parse(R"({"dim":2,"max_degree":6,
    "coeffs":[{"alpha":[1,0],"re":1.0,"im":0.0},{"alpha":[0,2],"re":-0.5,"im":2.0}]})");
  const TruncatedSeries f = series_from_json(j);
  CHECK(f.dim() == 2);
  CHECK(f.max_degree() == 6);
  CHECK(f.coeff(MultiIndex({1, 0})) == Complex(1.0, 0.0));
  CHECK(f.coeff(MultiIndex({0, 2})) == Complex(-0.5, 2.0));

  // Round trip preserves everything; writer emits canonical order.
  const Json back = series_to_json(f);
  CHECK(series_from_json(back).coeffs() == f.coeffs());
  CHECK(back.at("coeffs")[0].at("alpha")[0] == 1);

  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"dim":0,"max_degree":2})")), SchemaError);
  CHECK_THROWS_AS(
      series_from_json(Json::parse(R"({"dim":2,"max_degree":1,"coeffs":[{"alpha":[1,1]}]})")),
      SchemaError);
  CHECK_THROWS_AS(
      series_from_json(Json::parse(R"({"dim":2,"max_degree":3,"coeffs":[{"alpha":[1]}]})")),
      SchemaError);
}

TEST_CASE("measure JSON schema") {
  const Json j = Json::parse(
      R"({"dim":2,"atoms":[{"point":[[1.0,0.0],[0.0,0.0]],"weight":1.0}]})");
  const DiscreteMeasure mu = measure_from_json(j);
  CHECK(mu.dim() == 2);
  REQUIRE(mu.size() == 1);
  CHECK(mu.atoms()[0].weight == 1.0);
  CHECK(measure_from_json(measure_to_json(mu)).total_mass() == mu.total_mass());

  CHECK_THROWS_AS(measure_from_json(Json::parse(
                      R"({"dim":2,"atoms":[{"point":[[2.0,0.0],[0.0,0.0]],"weight":1.0}]})")),
                  SchemaError);
  CHECK_THROWS_AS(measure_from_json(Json::parse(
                      R"({"dim":2,"atoms":[{"point":[[0.5,0.0],[0.0,0.0]],"weight":-1.0}]})")),
                  SchemaError);
}

TEST_CASE("tuple JSON schema") {
  const Json j = Json::parse(R"({"n":2,"d":2,"matrices":[
    [[[0,0],[1.41421356,0]],[[0,0],[0,0]]],
    [[[0,0],[0,0]]]]})");
  CHECK_THROWS_AS(tuple_from_json(j), SchemaError);  // second matrix lacks a row

  const Json good = Json::parse(R"({"n":2,"d":2,"matrices":[
    [[[0,0],[1.41421356,0]],[[0,0],[0,0]]],
    [[[0,0],[0,0]],[[1.41421356,0],[0,0]]]]})");
  const OperatorTuple t = tuple_from_json(good);
  CHECK(t.n() == 2);
  CHECK(t.d() == 2);
  CHECK(t.matrices[0](0, 1).real() == doctest::Approx(1.41421356));
  const OperatorTuple back = tuple_from_json(tuple_to_json(t));
  CHECK((back.matrices[0] - t.matrices[0]).norm() == 0.0);
}

TEST_CASE("realization JSON round trip") {
  Rng rng(91);
  DiscreteMeasure mu(2);
  mu.add_atom(rng.unit_vector(2), 0.8);
  const RealizationData r = build_f2_realization(mu, 0.25);
  const RealizationData back = realization_from_json(realization_to_json(r));
  CHECK(back.form == r.form);
  CHECK(back.space_dim == r.space_dim);
  CHECK(back.t == r.t);
  const auto z = rng.ball_point(2, 0.5);
  CHECK(std::abs(realization_eval(back, z) - realization_eval(r, z)) < 1e-14);
}

TEST_CASE("floating format carries 17 significant digits") {
  CHECK(format_double(1.0) == "1");
  const std::string pi = format_double(3.14159265358979312);
  CHECK(pi.substr(0, 10) == "3.14159265");
  CHECK(std::stod(format_double(0.1)) == 0.1);
}
