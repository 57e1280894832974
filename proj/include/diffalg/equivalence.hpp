#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diffalg/relation.hpp"
#include "diffalg/semantics.hpp"
#include "diffalg/term.hpp"

namespace diffalg {

// The relation holds exactly where `body` evaluates to 0.
struct Equation {
  Term body;
};

// Product of literals. A variable never appears in both sets.
class Implicant {
 public:
  Implicant() = default;  // the empty product, 1
  // Throws Error(precondition) if the sets intersect.
  Implicant(std::set<std::string> positive, std::set<std::string> negative);

  const std::set<std::string>& positive() const { return positive_; }
  const std::set<std::string>& negative() const { return negative_; }
  std::size_t literal_count() const { return positive_.size() + negative_.size(); }
  bool is_one() const { return literal_count() == 0; }

  // Literals in variable order, e.g. "a*b'"; "1" for the empty product.
  std::string to_string() const;

  // Cube order: per variable in name order, a negative literal sorts before
  // a positive one, which sorts before an absent variable.
  friend bool operator<(const Implicant& a, const Implicant& b);
  friend bool operator==(const Implicant&, const Implicant&) = default;

 private:
  std::set<std::string> positive_;
  std::set<std::string> negative_;
};

// Sum of implicants in cube order. No implicants is the constant 0.
struct Dnf {
  std::vector<Implicant> implicants;

  bool is_zero() const { return implicants.empty(); }
  bool is_one() const;
  std::vector<std::string> vars() const;
  std::size_t literal_count() const;

  friend bool operator==(const Dnf&, const Dnf&) = default;
};

inline constexpr std::size_t kMaxMinimizeVars = 12;

// Sorts into cube order and drops duplicates.
Dnf make_dnf(std::vector<Implicant> implicants);

// a <= b gives a-b, a = b gives |a-b|, conjunction sums the parts,
// disjunction multiplies them.
Equation equation_of(const Relation& r);

// Minimized sum of products with the same table as `e.body`.
Dnf to_dnf(const Equation& e);

// Exact two-level minimization: all prime implicants, then a cover with the
// fewest implicants, then the fewest literals, then the least in cube order.
// Throws Error(capacity_exceeded) beyond kMaxMinimizeVars variables.
Dnf minimize(const Dnf& d);

// A product as a term: a*b for positives only, a'*b' for negatives only,
// otherwise the positives minus each negative, (a*b)-c.
Term implicant_term(const Implicant& i);
// Sum of implicant terms; 0 for the empty DNF.
Term dnf_term(const Dnf& d);

// Conjunction of inclusions equivalent to `d = 0`. Throws
// Error(unsatisfiable_relation) when `d` is the constant 1.
Relation relation_of(const Dnf& d);

struct EquivalenceVerdict {
  bool equivalent = false;
  // Least-index row where exactly one relation holds.
  std::optional<Assignment> counterexample;
  bool first_holds = false;
};

// Compares the truth tables of both equations over the merged variables.
EquivalenceVerdict equivalent(const Relation& a, const Relation& b);

}  // namespace diffalg
