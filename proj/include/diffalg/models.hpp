#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diffalg {

// Carrier {0..size-1} with designated constants and the full difference
// table, table[x * size + y] = x - y.
struct FiniteModel {
  std::size_t size = 2;
  std::size_t zero = 0;
  std::size_t one = 1;
  std::vector<std::uint8_t> table;

  std::size_t diff(std::size_t x, std::size_t y) const { return table[x * size + y]; }
  friend bool operator==(const FiniteModel&, const FiniteModel&) = default;
};

// Validates the carrier, constants and entries; throws Error(precondition).
FiniteModel make_model(std::size_t size, std::size_t zero, std::size_t one,
                       std::vector<std::uint8_t> table);

enum class Axiom { I, II, III, zero_law };

inline constexpr std::array<Axiom, 4> kAllAxioms = {Axiom::I, Axiom::II, Axiom::III, Axiom::zero_law};

std::string_view to_string(Axiom axiom);
// Accepts I, II, III, Z / zero-law.
std::optional<Axiom> parse_axiom(std::string_view text);

struct LawVerdict {
  bool holds = true;
  // First violating tuple of element indices in lexicographic order.
  std::vector<std::size_t> witness;
};

// I:    x - x = 0
// II:   1 - (1 - x) = x
// III:  (1-(c-(a-b)))-d = ((1-(c-a))-d)-(c-(1-b)), tuples (a, b, c, d)
// zero: x == y exactly when x - y = 0 and y - x = 0
struct AxiomReport {
  std::array<LawVerdict, 4> verdicts;

  const LawVerdict& operator[](Axiom a) const { return verdicts[static_cast<std::size_t>(a)]; }
  LawVerdict& operator[](Axiom a) { return verdicts[static_cast<std::size_t>(a)]; }
  // Bit i set when kAllAxioms[i] holds.
  unsigned mask() const;
};

// Powerset algebra on k bits (1 <= k <= 4) with bitwise and-not.
FiniteModel standard_model(unsigned k);

AxiomReport check_axioms(const FiniteModel& m);

// True when `witness` is a genuine violation of `axiom` in `m`.
bool violates(const FiniteModel& m, Axiom axiom, std::span<const std::size_t> witness);

inline constexpr std::size_t kMaxExhaustiveSize = 3;

// size^(size^2)
std::uint64_t model_count(std::size_t size);
// The index-th table in lexicographic order (entry (0,0) most significant),
// with zero = 0 and one = 1.
FiniteModel model_at(std::size_t size, std::uint64_t index);

// Visits every model of the given size in index order. Throws
// Error(capacity_exceeded) above kMaxExhaustiveSize.
void enumerate(std::size_t size, const std::function<void(std::uint64_t, const FiniteModel&)>& visit);

struct ModelSummary {
  std::size_t size = 0;
  std::uint64_t total = 0;
  // Model count per AxiomReport::mask().
  std::array<std::uint64_t, 16> by_mask{};

  // Models in which every axiom of `required` holds.
  std::uint64_t satisfying(std::span<const Axiom> required) const;
};

ModelSummary summarize_models(std::size_t size);

struct IndependenceResult {
  Axiom target = Axiom::I;
  std::size_t size = 0;
  bool exhaustive = false;
  std::uint64_t examined = 0;
  std::optional<FiniteModel> model;
  // Enumeration index (exhaustive) or sample number (random).
  std::uint64_t position = 0;
  AxiomReport report;
};

// Looks for a model where `target` fails while the other two axioms and
// the zero law hold. Exhaustive up to kMaxExhaustiveSize, seeded random
// tables (up to `budget`) above it.
IndependenceResult independence_search(Axiom target, std::size_t size, std::uint64_t budget,
                                       std::uint64_t seed);

// Ring laws for symmetric difference (as the sum) and meet (as the product)
// computed from the difference table: (x-y)+(y-x) with x+y = 1-((1-x)-y)
// and x*y = x-(1-y).
struct RingAuditReport {
  unsigned width = 0;
  LawVerdict add_associative;
  LawVerdict add_commutative;
  LawVerdict add_identity;
  LawVerdict add_inverse;
  LawVerdict mul_associative;
  LawVerdict distributive;
  LawVerdict sym_self_zero;   // x (+) x = 0
  LawVerdict diff_self_zero;  // x - x = 0
  // Ring subtraction x (+) (-y) against the difference x*y'.
  LawVerdict subtraction_is_difference;
  std::string notes;

  std::vector<std::pair<std::string_view, const LawVerdict*>> laws() const;
};

// 1 <= k <= 3.
RingAuditReport ring_audit(unsigned k);

}  // namespace diffalg
