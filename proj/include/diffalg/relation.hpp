#pragma once

#include <memory>
#include <string>
#include <vector>

#include "diffalg/term.hpp"

namespace diffalg {

enum class RelOp : std::uint8_t { eq, leq, conj, disj };

// Atoms `l = r` (mutual zero difference) and `l <= r` (l - r = 0) combined
// with conjunction and disjunction.
class Relation {
 public:
  static Relation eq(Term left, Term right);
  static Relation leq(Term left, Term right);
  static Relation conj(Relation left, Relation right);
  static Relation disj(Relation left, Relation right);

  RelOp op() const;
  bool is_atom() const { return op() == RelOp::eq || op() == RelOp::leq; }

  // Atoms only.
  const Term& lhs() const;
  const Term& rhs() const;
  // Connectives only.
  const Relation& left() const;
  const Relation& right() const;

  friend bool operator==(const Relation& a, const Relation& b);

 private:
  struct Node;
  explicit Relation(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

std::vector<std::string> free_vars(const Relation& r);

}  // namespace diffalg
