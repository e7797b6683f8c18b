#include <gtest/gtest.h>

#include "goorbit/error.hpp"
#include "goorbit/rootsys.hpp"

using namespace goorbit;

namespace {
const Family kFamilies[] = {Family::A2, Family::A1xA1, Family::C2, Family::G2};
}

TEST(RootSystem, PositiveRootCounts) {
  EXPECT_EQ(build_root_system(Family::A2).positive.size(), 3u);
  EXPECT_EQ(build_root_system(Family::A1xA1).positive.size(), 2u);
  EXPECT_EQ(build_root_system(Family::C2).positive.size(), 4u);
  auto g2 = build_root_system("G2");
  ASSERT_EQ(g2.positive.size(), 6u);
  std::vector<std::string> labels;
  for (auto& r : g2.positive) labels.push_back(root_label(r));
  EXPECT_EQ(labels, (std::vector<std::string>{"a", "b", "a+b", "2a+b", "3a+b", "3a+2b"}));
}

TEST(RootSystem, GramValues) {
  EXPECT_EQ(build_root_system(Family::C2).bb, Rational(1, 2));
  EXPECT_EQ(build_root_system(Family::A1xA1).ab, Rational(0));
  auto g2 = build_root_system(Family::G2);
  EXPECT_EQ(g2.bb, Rational(3));
  EXPECT_EQ(g2.inner({1, 1}, {1, 1}), Rational(1));
  EXPECT_EQ(build_root_system(Family::C2).inner({1, 2}, {1, 2}), Rational(1));
  EXPECT_EQ(build_root_system(Family::A2).inner({1, 1}, {1, 1}), Rational(1));
}

TEST(RootSystem, CartanNumbers) {
  auto g2 = build_root_system(Family::G2);
  EXPECT_EQ(g2.cartan_int(RootSystem::beta, RootSystem::alpha), -3);
  EXPECT_EQ(g2.cartan_int(RootSystem::alpha, RootSystem::beta), -1);
  auto c2 = build_root_system(Family::C2);
  EXPECT_EQ(c2.cartan_int(RootSystem::alpha, RootSystem::beta), -2);
  for (auto f : kFamilies) EXPECT_EQ(build_root_system(f).cartan_int(RootSystem::alpha, RootSystem::alpha), 2);
}

TEST(RootSystem, CorootOfLongCombination) {
  auto g2 = build_root_system(Family::G2);
  auto [x, y] = g2.coroot({9, 5});
  EXPECT_EQ(Rational(14) * x, Rational(6));
  EXPECT_EQ(Rational(14) * y, Rational(10));
  auto [u, v] = g2.coroot({3, 1});
  EXPECT_EQ(u, Rational(1));
  EXPECT_EQ(v, Rational(1));
}

TEST(RootSystem, UnknownFamily) { EXPECT_THROW(build_root_system("E8"), Error); }

TEST(RootSystemProperty, ReflectionsPreserveRoots) {
  for (auto f : kFamilies) {
    auto rs = build_root_system(f);
    for (const auto& g : rs.roots())
      for (const auto& d : rs.roots()) {
        Root s = g - d * rs.cartan_int(g, d);
        EXPECT_TRUE(rs.is_root(s)) << family_name(f) << " " << root_label(g) << " " << root_label(d);
      }
  }
}

TEST(RootSystemProperty, AtMostTwoLengths) {
  for (auto f : kFamilies) {
    auto rs = build_root_system(f);
    std::vector<Rational> lengths;
    for (const auto& g : rs.positive) {
      Rational l = rs.inner(g, g);
      if (std::find(lengths.begin(), lengths.end(), l) == lengths.end()) lengths.push_back(l);
    }
    EXPECT_LE(lengths.size(), 2u) << family_name(f);
  }
  auto g2 = build_root_system(Family::G2);
  EXPECT_TRUE(g2.is_long(RootSystem::beta));
  EXPECT_FALSE(g2.is_long(RootSystem::alpha));
  auto c2 = build_root_system(Family::C2);
  EXPECT_TRUE(c2.is_long(RootSystem::alpha));
  EXPECT_FALSE(c2.is_long(RootSystem::beta));
}
