#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "maw/generate.hpp"
#include "maw/graph.hpp"
#include "maw/problems.hpp"
#include "maw/protocols/walks.hpp"
#include "maw/view.hpp"

using namespace maw;

TEST_CASE("small decimal decode accepts one to nine digits") {
  CHECK(decode_small_uint("0") == 0);
  CHECK(decode_small_uint("7") == 7);
  CHECK(decode_small_uint("007") == 7);
  CHECK(decode_small_uint("123456789") == 123456789);
  CHECK_FALSE(decode_small_uint("").has_value());
  CHECK_FALSE(decode_small_uint("12a").has_value());
  CHECK_FALSE(decode_small_uint("-1").has_value());
  CHECK_FALSE(decode_small_uint("1234567890").has_value());
}

TEST_CASE("wide decimal decode accepts up to eighteen digits") {
  CHECK(detail::decode_uint("0") == 0);
  CHECK(detail::decode_uint("123456789012345678") == 123456789012345678LL);
  CHECK_FALSE(detail::decode_uint("1234567890123456789").has_value());
  CHECK_FALSE(detail::decode_uint("").has_value());
  CHECK_FALSE(detail::decode_uint("ten").has_value());
}

TEST_CASE("line packing swaps newlines for semicolons and back") {
  std::string text = "quotient 2\nedge 0 1 0 2\nedge 0 3 1 1\n";
  std::string packed = detail::pack_lines(text);
  CHECK(packed.find('\n') == std::string::npos);
  CHECK(packed == "quotient 2;edge 0 1 0 2;edge 0 3 1 1;");
  CHECK(detail::unpack_lines(packed) == text);
  CHECK(detail::pack_lines("no newlines") == "no newlines");
}

TEST_CASE("packed decoding recovers graphs and rejects mismatched headers") {
  auto g = path(3);
  auto packed_g = detail::pack_lines(serialize_graph(g));
  auto decoded_g = detail::decode_graph(packed_g);
  REQUIRE(decoded_g.has_value());
  CHECK(*decoded_g == g);
  CHECK_FALSE(detail::decode_quotient(packed_g).has_value());

  QuotientGraph q = quotient(sun(3));
  auto packed_q = detail::pack_lines(serialize_graph(q));
  auto decoded_q = detail::decode_quotient(packed_q);
  REQUIRE(decoded_q.has_value());
  CHECK(*decoded_q == q);
  CHECK_FALSE(detail::decode_graph(packed_q).has_value());

  CHECK_FALSE(detail::decode_graph("garbage").has_value());
  CHECK_FALSE(detail::decode_quotient("").has_value());
}

TEST_CASE("loop and parallel edges survive the text round trip") {
  QuotientGraph one_loop;
  one_loop.node_count = 1;
  one_loop.add_edge(0, 1, 0, 2);
  one_loop.normalize();

  QuotientGraph parallel;
  parallel.node_count = 2;
  parallel.add_edge(0, 1, 1, 1);
  parallel.add_edge(0, 2, 1, 2);
  parallel.normalize();

  QuotientGraph self_paired;
  self_paired.node_count = 1;
  self_paired.add_edge(0, 1, 0, 1);
  self_paired.normalize();

  for (const auto& q : {one_loop, parallel, self_paired}) {
    REQUIRE(validate(q).ok);
    auto parsed = parse_quotient(serialize_graph(q));
    REQUIRE(parsed.ok());
    CHECK(parsed.value == q);
  }
}
