#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffalg/kernels.hpp"
#include "diffalg/relation.hpp"
#include "diffalg/term.hpp"

namespace diffalg {

using Assignment = std::map<std::string, bool>;

// Two-element algebra: x - y = x AND NOT y. Requires a core term; throws
// Error(unbound_variable) if `sigma` misses a variable.
bool eval_core(const Term& t, const Assignment& sigma);

// Algebra of subsets of a k-element universe, elements as bitmasks.
using PowersetAssignment = std::map<std::string, std::uint64_t>;
std::uint64_t eval_powerset(const Term& t, unsigned k, const PowersetAssignment& sigma);

// Row r assigns vars[i] = (r >> i) & 1, so vars[0] is the least
// significant bit. Bits are packed 64 rows per word, unused high bits zero.
struct TruthTable {
  std::vector<std::string> vars;
  std::vector<kernels::Word> words;

  std::size_t rows() const { return std::size_t{1} << vars.size(); }
  bool bit(std::size_t row) const { return (words[row / 64] >> (row % 64)) & 1; }
  // One character per row, row 0 first.
  std::string bit_string() const;
  Assignment assignment(std::size_t row) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

inline constexpr std::size_t kMaxTableVars = 24;

// Sorted union of two sorted variable lists.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

TruthTable truth_table(const Term& t);
// `vars` must be sorted and contain every free variable of `t`.
TruthTable truth_table(const Term& t, std::vector<std::string> vars);
TruthTable truth_table(const Term& t, std::vector<std::string> vars, kernels::Isa isa);
// Row-at-a-time evaluation through eval_core; the reference the word
// kernels are checked against.
TruthTable truth_table_reference(const Term& t, std::vector<std::string> vars);

// Validity in every Boolean algebra, decided on the two-element one.
bool valid_identity(const Term& lhs, const Term& rhs);
// Least-index row where the two sides differ.
std::optional<Assignment> identity_counterexample(const Term& lhs, const Term& rhs);

bool relation_holds(const Relation& r, const Assignment& sigma);
// Least-index row (over free_vars(r)) where `r` fails.
std::optional<Assignment> relation_counterexample(const Relation& r);
bool relation_valid(const Relation& r);

}  // namespace diffalg
