#include "goorbit/rootsys.hpp"

#include <algorithm>
#include <cctype>

#include "goorbit/error.hpp"

namespace goorbit {

Family parse_family(std::string_view name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "a2" || s == "su3") return Family::A2;
  if (s == "a1xa1" || s == "a1a1" || s == "so4") return Family::A1xA1;
  if (s == "c2" || s == "b2" || s == "sp2") return Family::C2;
  if (s == "g2") return Family::G2;
  throw Error("unknown root system family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A2: return "A2";
    case Family::A1xA1: return "A1xA1";
    case Family::C2: return "C2";
    case Family::G2: return "G2";
  }
  return "?";
}

std::string root_label(const Root& r) {
  if (r.is_zero()) return "0";
  auto term = [](int k, const char* sym, bool first) {
    std::string out;
    if (k == 0) return out;
    if (k < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    int a = k < 0 ? -k : k;
    if (a != 1) out += std::to_string(a);
    out += sym;
    return out;
  };
  std::string s = term(r.m, "a", true);
  s += term(r.n, "b", s.empty());
  return s;
}

std::vector<Root> RootSystem::roots() const {
  std::vector<Root> out(positive);
  for (const auto& r : positive) out.push_back(-r);
  return out;
}

bool RootSystem::is_positive(const Root& r) const {
  return std::find(positive.begin(), positive.end(), r) != positive.end();
}

bool RootSystem::is_root(const Root& r) const { return is_positive(r) || is_positive(-r); }

size_t RootSystem::positive_index(const Root& r) const {
  auto it = std::find(positive.begin(), positive.end(), r);
  if (it == positive.end()) throw Error("not a positive root: " + root_label(r));
  return static_cast<size_t>(it - positive.begin());
}

Rational RootSystem::inner(const Root& g, const Root& d) const {
  return Rational(g.m * d.m) * aa + Rational(g.m * d.n + g.n * d.m) * ab + Rational(g.n * d.n) * bb;
}

Rational RootSystem::cartan(const Root& g, const Root& d) const {
  if (d.is_zero()) throw Error("cartan integer with zero root");
  Rational v = Rational(2) * inner(g, d) / inner(d, d);
  if (is_root(g) && is_root(d) && !v.is_integer())
    throw ConsistencyError("non-integral Cartan number <" + root_label(g) + "," + root_label(d) + ">");
  return v;
}

int RootSystem::cartan_int(const Root& g, const Root& d) const {
  Rational v = cartan(g, d);
  if (!v.is_integer()) throw ConsistencyError("Cartan number is not an integer");
  return static_cast<int>(v.num().get_si());
}

std::pair<Rational, Rational> RootSystem::coroot(const Root& g) const {
  Rational gg = inner(g, g);
  if (gg.is_zero()) throw Error("coroot of zero");
  return {Rational(g.m) * aa / gg, Rational(g.n) * bb / gg};
}

int RootSystem::string_down(const Root& g, const Root& d) const {
  int p = 0;
  while (is_root(d - g * (p + 1))) ++p;
  return p;
}

bool RootSystem::is_long(const Root& r) const {
  Rational mx;
  for (const auto& p : positive) mx = std::max(mx, inner(p, p));
  return inner(r, r) == mx;
}

RootSystem build_root_system(Family f) {
  RootSystem rs{f, {}, Rational(1), Rational(0), Rational(1)};
  switch (f) {
    case Family::A2:
      rs.positive = {{1, 0}, {0, 1}, {1, 1}};
      rs.ab = Rational(-1, 2);
      break;
    case Family::A1xA1:
      rs.positive = {{1, 0}, {0, 1}};
      break;
    case Family::C2:
      rs.positive = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
      rs.ab = Rational(-1, 2);
      rs.bb = Rational(1, 2);
      break;
    case Family::G2:
      rs.positive = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
      rs.ab = Rational(-3, 2);
      rs.bb = Rational(3);
      break;
  }
  return rs;
}

RootSystem build_root_system(std::string_view name) { return build_root_system(parse_family(name)); }

}  // namespace goorbit
