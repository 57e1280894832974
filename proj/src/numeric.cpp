#include "diffalg/numeric.hpp"

#include <cmath>
#include <random>

#include "diffalg/error.hpp"

namespace diffalg {

namespace {

struct Reading {
  NumericMode mode;

  double op(double x, double y) const { return mode == NumericMode::mod ? std::fabs(x - y) : x + y; }
  static bool eq(double x, double y) { return std::fabs(x - y) <= kNumericTolerance; }
  static bool le(double x, double y) { return x <= y + kNumericTolerance; }
};

constexpr std::array<std::string_view, kPropertyCount> kLabels = {
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
constexpr std::array<std::string_view, kPropertyCount> kNames = {
    "equality",    "annihilation", "commutativity",        "associativity", "distributivity",
    "identity",    "inclusion",    "triangular-inclusion", "dual-inclusion"};
constexpr std::array<std::size_t, kPropertyCount> kArity = {2, 1, 2, 3, 3, 1, 2, 3, 3};

void check_property(std::size_t property) {
  if (property < 1 || property > kPropertyCount) {
    throw Error(ErrorKind::precondition, "property number must be in 1..9");
  }
}

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::string_view to_string(NumericMode mode) { return mode == NumericMode::mod ? "mod" : "sum"; }

std::string_view property_label(std::size_t property) {
  check_property(property);
  return kLabels[property - 1];
}

std::string_view property_name(std::size_t property) {
  check_property(property);
  return kNames[property - 1];
}

std::size_t property_arity(std::size_t property) {
  check_property(property);
  return kArity[property - 1];
}

bool numeric_property_holds(NumericMode mode, std::size_t property, std::span<const double> args) {
  if (args.size() != property_arity(property)) {
    throw Error(ErrorKind::precondition, "wrong number of arguments for property");
  }
  const Reading m{mode};
  const double a = args[0];
  const double b = args.size() > 1 ? args[1] : 0.0;
  const double c = args.size() > 2 ? args[2] : 0.0;
  switch (property) {
    case 1: return Reading::eq(m.op(a, b), 0.0) == Reading::eq(a, b);
    case 2: return Reading::eq(m.op(a, a), 0.0);
    case 3: return Reading::eq(m.op(a, b), m.op(b, a));
    case 4: return Reading::eq(m.op(m.op(a, b), c), m.op(a, m.op(b, c)));
    case 5: return Reading::eq(m.op(a, b) * c, m.op(a * c, b * c));
    case 6: return Reading::eq(m.op(a, 0.0), a);
    case 7: return Reading::le(a - b, m.op(a, b));
    case 8: return Reading::le(m.op(a, b), m.op(a, c) + m.op(c, b));
    case 9: return Reading::le(m.op(a, b), c) == (Reading::le(a - b, c) && Reading::le(b - a, c));
  }
  return false;
}

NumericMatrix numeric_matrix(NumericMode mode, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorKind::precondition, "samples must be at least 1");
  NumericMatrix matrix;
  matrix.mode = mode;
  matrix.samples = samples;
  matrix.seed = seed;
  for (std::size_t p = 1; p <= kPropertyCount; ++p) {
    auto& verdict = matrix.verdicts[p - 1];
    verdict.property = p;
    const std::size_t arity = property_arity(p);
    std::vector<double> tuple(arity);

    auto probe = [&](const std::vector<double>& args) {
      if (verdict.holds && !numeric_property_holds(mode, p, args)) {
        verdict.holds = false;
        verdict.counterexample = args;
      }
    };

    // Grid in lexicographic order, first variable most significant.
    std::size_t grid_points = 1;
    for (std::size_t i = 0; i < arity; ++i) grid_points *= kProbeGrid.size();
    for (std::size_t g = 0; g < grid_points && verdict.holds; ++g) {
      std::size_t rest = g;
      for (std::size_t i = arity; i-- > 0;) {
        tuple[i] = kProbeGrid[rest % kProbeGrid.size()];
        rest /= kProbeGrid.size();
      }
      probe(tuple);
    }

    // Each property draws from its own stream so verdicts do not depend on
    // evaluation order.
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * p));
    for (std::size_t s = 0; s < samples && verdict.holds; ++s) {
      for (auto& x : tuple) x = unit(rng);
      probe(tuple);
    }
  }
  return matrix;
}

}  // namespace diffalg
