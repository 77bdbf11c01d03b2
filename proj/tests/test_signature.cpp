#include <gtest/gtest.h>

#include "common.hpp"

using namespace fuchsian;

TEST(Signature, ParsesWithWhitespaceAndEmptyOrders) {
  auto s = parse_signature(" 1 ; ; 1 ");
  EXPECT_EQ(s.genus, 1);
  EXPECT_TRUE(s.orders.empty());
  EXPECT_EQ(s.cusps, 1);
  EXPECT_EQ(s.to_string(), "1;;1");
  auto t = parse_signature("2; 8, 2,5 ;2");
  EXPECT_EQ(t.orders, (std::vector<int>{2, 5, 8}));
  EXPECT_EQ(t.to_string(), "2;2,5,8;2");
}

TEST(Signature, RecordsInputPermutation) {
  auto s = make_signature(0, {7, 2, 3}, 1);
  EXPECT_EQ(s.orders, (std::vector<int>{2, 3, 7}));
  ASSERT_EQ(s.input_order.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(s.orders[i], (std::vector<int>{7, 2, 3})[s.input_order[i]]);
}

TEST(Signature, RejectsMalformedText) {
  for (const char* bad : {"", "1", "1;2", "a;2;1", "1;2,,3;1", "1;2;1;4", "-1;2,3;2", "0;1;2"}) {
    try {
      parse_signature(bad);
      ADD_FAILURE() << bad;
    } catch (const error& e) {
      EXPECT_TRUE(e.code() == errc::parse_error || e.code() == errc::invalid_signature) << bad;
    }
  }
}

TEST(Signature, AreaConditionViolationNamesTheExpression) {
  try {
    parse_signature("0;2;1");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_signature);
    EXPECT_NE(std::string(e.what()).find("-1/2"), std::string::npos) << e.what();
  }
}

TEST(Signature, CuspIsRequired) {
  try {
    parse_signature("2;;0");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_signature);
    EXPECT_NE(std::string(e.what()).find("t >= 1"), std::string::npos);
  }
}

TEST(Signature, BlockCountAndSides) {
  auto s = parse_signature("1;2,3,7;2");
  EXPECT_EQ(s.ell(), 5);
  EXPECT_EQ(s.sides(), 4 + 2 * 4);
  auto t = parse_signature("2;2,5,8;2");
  EXPECT_EQ(t.ell(), 6);
  EXPECT_EQ(t.sides(), 16);
}

TEST(Signature, AreaMatchesReference) {
  const double ref[] = {oracle::area_0, oracle::area_1, oracle::area_2,
                        oracle::area_3, oracle::area_4, oracle::area_5};
  for (std::size_t i = 0; i < testing_support::signatures().size(); ++i)
    EXPECT_NEAR(parse_signature(testing_support::signatures()[i]).area(), ref[i], 1e-12);
  EXPECT_NEAR(parse_signature("0;2,3;1").area(), pi / 3, 1e-12);
  EXPECT_NEAR(parse_signature("1;2,3,7;2").area(), two_pi * 169.0 / 42.0, 1e-12);
}

TEST(Signature, ExactEulerExcess) {
  auto r = parse_signature("0;2,3;1").euler_excess();
  EXPECT_EQ(r.num, 1);
  EXPECT_EQ(r.den, 6);
}

TEST(SignatureString, SymbolsInBlockOrder) {
  EXPECT_EQ(to_string(signature_string(parse_signature("2;2,5,8;2"))), "□□258∞");
  EXPECT_EQ(to_string(signature_string(parse_signature("0;2,12;2"))), "2(12)∞");
  auto syms = signature_string(parse_signature("1;3;3"));
  ASSERT_EQ(syms.size(), 4u);
  EXPECT_EQ(syms[0].kind, symbol_kind::square);
  EXPECT_EQ(syms[1].kind, symbol_kind::finite);
  EXPECT_EQ(syms[1].order, 3);
  EXPECT_EQ(syms[3].kind, symbol_kind::infinity);
}
