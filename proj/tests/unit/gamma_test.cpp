#include <gtest/gtest.h>

#include <stdexcept>

#include "maxqc/gamma.hpp"

using maxqc::Gamma;

TEST(Gamma, ParsesDecimalsExactly) {
  const Gamma g = Gamma::parse("0.75");
  EXPECT_EQ(g.num(), 3);
  EXPECT_EQ(g.den(), 4);
  EXPECT_EQ(Gamma::parse("1"), Gamma::from_fraction(1, 1));
  EXPECT_EQ(Gamma::parse("1.00"), Gamma::from_fraction(1, 1));
  EXPECT_EQ(Gamma::parse(".6"), Gamma::from_fraction(3, 5));
  EXPECT_EQ(Gamma::parse("0.55").str(), "0.55");
}

TEST(Gamma, RejectsGarbage) {
  for (const char* bad : {"", "abc", "0", "1.5", "-0.5", "0.5.1", "1e-1", " 0.5"}) {
    EXPECT_THROW(Gamma::parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(Gamma::from_fraction(3, 2), std::invalid_argument);
}

// Boundaries where floating point would round the wrong way.
TEST(Gamma, IntegerThresholds) {
  const Gamma g = Gamma::parse("0.75");
  EXPECT_EQ(g.ceil_times(4), 3);
  EXPECT_EQ(g.ceil_times(3), 3);  // 2.25
  EXPECT_EQ(g.floor_times(3), 2);
  EXPECT_EQ(g.floor_complement_times(4), 1);
  EXPECT_EQ(g.ceil_divided(3), 4);
  EXPECT_EQ(g.ceil_divided(2), 3);
  EXPECT_EQ(g.min_degree(3), 2);  // ceil(1.5)
  EXPECT_EQ(g.min_degree(4), 3);  // ceil(2.25)
  EXPECT_EQ(g.min_degree(1), 0);

  const Gamma h = Gamma::parse("0.55");
  EXPECT_EQ(h.floor_complement_times(7), 3);  // 3.15
  EXPECT_EQ(h.floor_complement_times(5), 2);  // 2.25
  EXPECT_EQ(h.min_degree(6), 3);              // 2.75
}

TEST(Gamma, SolverRange) {
  EXPECT_TRUE(Gamma::parse("0.5").in_solver_range());
  EXPECT_TRUE(Gamma::parse("1").in_solver_range());
  EXPECT_FALSE(Gamma::parse("0.49").in_solver_range());
}
