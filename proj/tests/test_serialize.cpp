#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lrhorn/serialize.hpp"

using namespace lrhorn;

TEST_CASE("partition strings", "[serialize]") {
  const auto p = make_partition({Int(2), Int(1)}, 3);
  CHECK(partition_to_string(p) == "2,1,0");
  CHECK(parse_partition("2,1,0") == p);
  CHECK(parse_partition("2,1", 3) == p);
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("a,b"), std::invalid_argument);
}

TEST_CASE("triple json uses the three canonical keys", "[serialize]") {
  const auto t = make_partition_triple({Int(2), Int(1), Int(0)}, {Int(1), Int(1), Int(0)},
                                       {Int(1), Int(0), Int(0)}, 3);
  const auto j = triple_to_json(t);
  CHECK(j.at("lambda") == "2,1,0");
  CHECK(j.at("mu") == "1,1,0");
  CHECK(j.at("nu") == "1,0,0");
  CHECK(triple_from_json(j) == t);
}

TEST_CASE("rational vectors", "[serialize]") {
  const auto v = parse_rational_vector("3/2,1,-1/3");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Rat(3, 2));
  CHECK(v[1] == 1);
  CHECK(v[2] == Rat(-1, 3));
  CHECK(rational_to_string(Rat(4, 6)) == "2/3");
  CHECK(rational_to_string(Rat(-8, 4)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("triangle arrays round-trip in canonical order", "[serialize]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 4);
    std::vector<Int> values(position_count(r));
    for (auto& v : values) v = static_cast<long>(rng() % 21) - 10;
    const auto y = make_triangle_array(r, values);
    const auto j = triangle_array_to_json(y);
    CHECK(j.at("r") == r);
    CHECK(j.at("values").size() == position_count(r));
    CHECK(triangle_array_from_json(j) == y);
  }
  // canonical order pins the first entry of the rank-two layout
  const auto j2 = triangle_array_to_json(make_triangle_array(2, {Int(5), Int(-1), Int(0)}));
  CHECK(j2.at("values")[0] == json::array({0, 1, 1, 5}));
  CHECK(j2.at("values")[1] == json::array({1, 0, 1, -1}));
}

TEST_CASE("certificates serialize rationals exactly", "[serialize]") {
  TailCertificate cert;
  cert.combination.emplace_back(TailIdentifier{TailDirection::M, 1, 1}, Rat(1));
  cert.combination.emplace_back(TailIdentifier{TailDirection::L, 0, 2}, Rat(7, 3));
  const auto j = certificate_to_json(cert);
  CHECK(j.at("tails")[0] == json({{"dir", "M"}, {"t", 1}, {"s", 1}, {"coeff", "1"}}));
  CHECK(j.at("tails")[1] == json({{"dir", "L"}, {"t", 0}, {"s", 2}, {"coeff", "7/3"}}));
  const auto back = certificate_from_json(j);
  REQUIRE(back.combination.size() == 2);
  CHECK(back.combination[1].second == Rat(7, 3));
}

TEST_CASE("inequality rendering matches the subscript convention", "[serialize]") {
  const HornInequality worked{make_subset_triple(3, {2, 3}, {1, 3}, {1, 3})};
  CHECK(horn_inequality_to_text(worked) ==
        "λ2+λ3 ≤ μ1+μ3+ν1+ν3");
  const auto j = horn_inequality_to_json(worked);
  CHECK(j.at("I") == std::vector<int>{2, 3});
  CHECK(j.at("J") == std::vector<int>{1, 3});
  CHECK(j.at("K") == std::vector<int>{1, 3});
}
