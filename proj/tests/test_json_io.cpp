#include <doctest.h>

#include "unavoidable/errors.hpp"
#include "unavoidable/generators.hpp"
#include "unavoidable/json_io.hpp"

using namespace unav;

TEST_CASE("rationals travel as strings") {
  CHECK(rational_json(Rational(3, 5)) == "3/5");
  CHECK(rational_json(Rational(-2)) == "-2");
  CHECK(rational_from_json(Json("3/5")) == Rational(3, 5));
  CHECK(rational_from_json(Json(7)) == Rational(7));
  CHECK(rational_from_json(Json("6/4")) == Rational(3, 2));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json("x")), ParseError);
}

TEST_CASE("subsets as vertex lists") {
  CHECK(subset_json(Subset::of({4, 1, 3})).dump() == "[1,3,4]");
  CHECK(subset_json(Subset{}).dump() == "[]");
  const std::vector sets{Subset::of({1}), Subset::of({2, 3})};
  CHECK(subsets_json(sets).dump() == "[[1],[2,3]]");
}

TEST_CASE("witness records") {
  const auto k = points(5);
  const auto w = is_r_unavoidable(k, 3);
  CHECK(to_json(*is_r_unavoidable(points(6), 3).witness).dump() ==
        R"({"blocks":[[1,2],[3,4],[5,6]],"offending":[true,true,true]})");
  CHECK(w.unavoidable);
  const auto packing = max_disjoint_min_nonfaces(k).witness;
  CHECK(to_json(packing).dump() == R"({"nonfaces":[[1,2],[3,4]],"leftover":[5]})");
}

TEST_CASE("LP verdicts") {
  const auto v = is_linearly_realizable(points(5), 3);
  const Json j = to_json(v);
  CHECK(j["feasible"] == true);
  CHECK(j["margin"] == "1/15");
  CHECK(j["witness"].dump() == R"(["1/5","1/5","1/5","1/5","1/5"])");
  CHECK(j["note"] == "");
  const auto keys = std::vector<std::string>{"feasible", "margin", "witness", "note",
                                             "constraints", "pivots"};
  std::vector<std::string> got;
  for (auto it = j.begin(); it != j.end(); ++it) got.push_back(it.key());
  CHECK(got == keys);

  const Json no = to_json(is_linearly_realizable(points(6), 3));
  CHECK(no["feasible"] == false);
  CHECK(no["witness"].is_null());
  CHECK(no["margin"].is_null());
}

TEST_CASE("certificate JSON") {
  const auto c = certify_single_nonembeddable(skeleton(1, 7), 6, 1);
  const Json j = to_json(c);
  CHECK(j["kind"] == "single_nonembeddable");
  CHECK(j["verdict"] == "abstained");
  CHECK(j["r"]["value"] == 6);
  CHECK(j["r"]["prime_power"] == false);
  CHECK(j["r"]["p"].is_null());
  CHECK(j["bound"].is_null());
  CHECK(j["inputs"][0]["m"] == 7);

  const Json ok = to_json(certify_join_nonembeddable({skeleton(1, 5)}, 2, 2));
  CHECK(ok["verdict"] == "certified");
  CHECK(ok["r"]["p"] == 2);
  CHECK(ok["r"]["k"] == 1);
  CHECK(ok["schild_form"]["left"] == 2);
  CHECK(ok["schild_form"]["right"] == 2);
  CHECK(ok["inputs"][0]["witness"].is_null());
}

TEST_CASE("weight files") {
  const auto h = parse_weights_json(R"({"m": 4, "family": [[1, 2], [3]], "omega": ["1/2", 1]})");
  CHECK(h.ground_size() == 4);
  CHECK(h.members().size() == 2);
  CHECK(to_json(h).dump() == R"({"m":4,"family":[[1,2],[3]],"omega":["1/2","1"]})");
  CHECK(parse_weights_json(to_json(h).dump()).members().size() == 2);

  CHECK_THROWS_AS(parse_weights_json("{"), ParseError);
  CHECK_THROWS_AS(parse_weights_json(R"({"family": [], "omega": []})"), ParseError);
  CHECK_THROWS_AS(parse_weights_json(R"({"m": 3, "family": [[4]], "omega": [1]})"), ParseError);
  CHECK_THROWS_AS(parse_weights_json(R"({"m": 3, "family": [[1]], "omega": []})"), ParseError);
  CHECK_THROWS_AS(parse_weights_json(R"({"m": 3, "family": [[1]], "omega": ["-1"]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_weights_json(R"({"m": 99, "family": [[70]], "omega": [1]})"), ParseError);
  CHECK_THROWS_AS(parse_weights_json(R"({"m": 3, "family": [["a"]], "omega": [1]})"), ParseError);
}

TEST_CASE("measure files") {
  const auto mu = parse_measure_json(R"({"weights": ["1/5", "2/5", "2/5"]})");
  CHECK(mu.ground_size() == 3);
  CHECK(mu.is_probability());
  CHECK(to_json(mu).dump() == R"({"weights":["1/5","2/5","2/5"]})");
  CHECK_THROWS_AS(parse_measure_json(R"({"weights": []})"), ParseError);
  CHECK_THROWS_AS(parse_measure_json(R"({"weights": ["0"]})"), ParseError);
  CHECK_THROWS_AS(parse_measure_json(R"({"w": []})"), ParseError);
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/weights.json"), ParseError);
}
