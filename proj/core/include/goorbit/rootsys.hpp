#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "goorbit/rational.hpp"

namespace goorbit {

enum class Family { A2, A1xA1, C2, G2 };

Family parse_family(std::string_view name);
std::string family_name(Family f);

// m*alpha + n*beta.
struct Root {
  int m = 0;
  int n = 0;

  Root operator-() const { return {-m, -n}; }
  Root operator+(const Root& o) const { return {m + o.m, n + o.n}; }
  Root operator-(const Root& o) const { return {m - o.m, n - o.n}; }
  Root operator*(int k) const { return {k * m, k * n}; }
  bool is_zero() const { return m == 0 && n == 0; }
  auto operator<=>(const Root&) const = default;
};

// "a", "-b", "3a+2b", "a-b".
std::string root_label(const Root& r);

struct RootSystem {
  Family family;
  std::vector<Root> positive;  // fixed listing order, simple roots first
  Rational aa, ab, bb;         // (a,a), (a,b), (b,b)

  static constexpr Root alpha{1, 0};
  static constexpr Root beta{0, 1};

  // Positive roots followed by their negatives, in listing order.
  std::vector<Root> roots() const;
  bool is_root(const Root& r) const;
  bool is_positive(const Root& r) const;
  // Position of a positive root in the listing.
  size_t positive_index(const Root& r) const;

  Rational inner(const Root& g, const Root& d) const;
  // 2(g,d)/(d,d); throws when g, d are roots and the value is not an integer.
  Rational cartan(const Root& g, const Root& d) const;
  int cartan_int(const Root& g, const Root& d) const;

  // Coordinates (x, y) of the coroot H_g = x H_a + y H_b.
  std::pair<Rational, Rational> coroot(const Root& g) const;

  // Length of the g-string through d on the negative side: largest p with d - p g a root.
  int string_down(const Root& g, const Root& d) const;
  bool is_long(const Root& r) const;
};

RootSystem build_root_system(Family f);
RootSystem build_root_system(std::string_view name);

}  // namespace goorbit
