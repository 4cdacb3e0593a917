#pragma once
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "normalcol/multigraph.hpp"

namespace normalcol {

// Exact fraction; normalized with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;
  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

// Total edge coloring with colors 1..k. Properness is checked, never assumed.
struct EdgeColoring {
  int k = 0;
  std::vector<int> assignment;  // assignment[e] in 1..k
};

enum class EdgeClass { Poor, Rich, Neither };

struct NormalityReport {
  std::vector<EdgeClass> classes;
  int poor = 0, rich = 0, neither = 0;
  bool proper = false;
  Rational normal_fraction{0, 1};
  bool is_normal() const { return proper && neither == 0; }
};

// Set of colors on the edges at v (including duplicates collapsing).
std::set<int> color_set(const Multigraph& g, const EdgeColoring& c, int v);

bool is_proper(const Multigraph& g, const EdgeColoring& c);

// Poor iff the two endpoint color sets unite to 3 colors, Rich iff to 5.
EdgeClass classify_edge(const Multigraph& g, const EdgeColoring& c, int e);

// Full classification; requires a cubic graph and a total coloring.
NormalityReport report(const Multigraph& g, const EdgeColoring& c);

const char* edge_class_name(EdgeClass cl);

}  // namespace normalcol
