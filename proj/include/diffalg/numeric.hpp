#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

// Real-number readings of the nine modular-difference properties:
//   (i)    |a-b| = 0  <=>  a = b
//   (ii)   |a-a| = 0
//   (iii)  |a-b| = |b-a|
//   (iv)   ||a-b|-c| = |a-|b-c||
//   (v)    |a-b|*c = |a*c-b*c|
//   (vi)   |a-0| = a
//   (vii)  a-b <= |a-b|
//   (viii) |a-b| <= |a-c| + |c-b|
//   (ix)   |a-b| <= c  <=>  a-b <= c and b-a <= c
// `mod` reads |x-y| as the absolute difference, `sum` as x+y. Every other
// symbol keeps its real meaning; variables range over [0, 1].
namespace diffalg {

enum class NumericMode { mod, sum };

inline constexpr std::size_t kPropertyCount = 9;
inline constexpr double kNumericTolerance = 1e-9;
inline constexpr std::array<double, 5> kProbeGrid = {0.0, 0.25, 0.5, 0.75, 1.0};

std::string_view to_string(NumericMode mode);

// 1-based property number to roman label ("i".."ix") and name.
std::string_view property_label(std::size_t property);
std::string_view property_name(std::size_t property);
std::size_t property_arity(std::size_t property);

// Evaluates one property at one tuple (length = arity).
bool numeric_property_holds(NumericMode mode, std::size_t property, std::span<const double> args);

struct PropertyVerdict {
  std::size_t property = 0;
  bool holds = true;
  // First violating tuple; empty when `holds`.
  std::vector<double> counterexample;
};

struct NumericMatrix {
  NumericMode mode = NumericMode::mod;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::array<PropertyVerdict, kPropertyCount> verdicts;
};

// Probe grid kProbeGrid^arity first, then `samples` seeded uniform tuples.
NumericMatrix numeric_matrix(NumericMode mode, std::size_t samples, std::uint64_t seed);

}  // namespace diffalg
