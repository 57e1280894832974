#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace diffalg {

// Core constructors are zero, one, var and diff. The rest are sugar that
// `desugar` rewrites away.
enum class Op : std::uint8_t { zero, one, var, diff, sum, prod, complement, mod_diff };

// Letters and digits, starting with a letter.
bool is_valid_var_name(std::string_view name);

// Single uppercase letters are reserved for rule schemata.
bool is_metavariable(std::string_view name);

// Immutable term tree shared by the core language (0, 1, variables, `-`)
// and the surface language (`+`, `*`, postfix `'`, `|x-y|`). Copies share
// structure.
class Term {
 public:
  Term();  // 0

  static Term zero();
  static Term one();
  static Term var(std::string name);
  static Term diff(Term left, Term right);
  static Term sum(Term left, Term right);
  static Term prod(Term left, Term right);
  static Term complement(Term operand);
  static Term mod_diff(Term left, Term right);

  Op op() const;
  // Empty unless op() == Op::var.
  const std::string& name() const;
  std::size_t arity() const;
  const Term& child(std::size_t index) const;
  const Term& left() const { return child(0); }
  const Term& right() const { return child(1); }

  // Number of nodes.
  std::size_t size() const;
  // True when no sugar constructor occurs anywhere in the tree.
  bool is_core() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  // Structural total order; used for deterministic containers.
  friend bool operator<(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Address of a subterm: child indices from the root. Binary nodes have
// children 0 and 1, complement has only 0.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<std::uint8_t> indices);

  const std::vector<std::uint8_t>& indices() const { return indices_; }
  bool is_root() const { return indices_.empty(); }
  std::size_t depth() const { return indices_.size(); }
  Path child(std::uint8_t index) const;

  // "." for the root, ".0.1" for the right child of the left child.
  std::string to_string() const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<std::uint8_t> indices_;
};

using Substitution = std::map<std::string, Term>;

Term desugar(const Term& t);

// Sorted, deduplicated variable names (metavariables included).
std::vector<std::string> free_vars(const Term& t);

// Sorted, deduplicated metavariable names.
std::vector<std::string> metavariables(const Term& t);

// Throws Error(invalid_path) when `p` leaves the tree.
const Term& subterm_at(const Term& t, const Path& p);
Term replace_at(const Term& t, const Path& p, Term replacement);

// Every metavariable of `pattern` is bound so that applying the result to
// `pattern` reproduces `t`; repeated metavariables must match identical
// subterms. Object variables and constants match only themselves.
std::optional<Substitution> match_pattern(const Term& pattern, const Term& t);

// Throws Error(unbound_metavariable) for a metavariable without a binding.
Term apply_substitution(const Term& pattern, const Substitution& sigma);

// All valid paths in preorder.
std::vector<Path> all_paths(const Term& t);

}  // namespace diffalg
