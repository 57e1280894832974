#include "diffalg/relation.hpp"

#include <set>
#include <utility>

#include "diffalg/error.hpp"

namespace diffalg {

struct Relation::Node {
  RelOp op;
  Term lhs;
  Term rhs;
  std::vector<Relation> parts;
};

Relation::Relation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Relation Relation::eq(Term left, Term right) {
  return Relation(std::make_shared<const Node>(Node{RelOp::eq, std::move(left), std::move(right), {}}));
}

Relation Relation::leq(Term left, Term right) {
  return Relation(std::make_shared<const Node>(Node{RelOp::leq, std::move(left), std::move(right), {}}));
}

Relation Relation::conj(Relation left, Relation right) {
  return Relation(std::make_shared<const Node>(Node{RelOp::conj, {}, {}, {std::move(left), std::move(right)}}));
}

Relation Relation::disj(Relation left, Relation right) {
  return Relation(std::make_shared<const Node>(Node{RelOp::disj, {}, {}, {std::move(left), std::move(right)}}));
}

RelOp Relation::op() const { return node_->op; }

const Term& Relation::lhs() const {
  if (!is_atom()) throw Error(ErrorKind::precondition, "connective has no terms");
  return node_->lhs;
}

const Term& Relation::rhs() const {
  if (!is_atom()) throw Error(ErrorKind::precondition, "connective has no terms");
  return node_->rhs;
}

const Relation& Relation::left() const {
  if (is_atom()) throw Error(ErrorKind::precondition, "atom has no subrelations");
  return node_->parts[0];
}

const Relation& Relation::right() const {
  if (is_atom()) throw Error(ErrorKind::precondition, "atom has no subrelations");
  return node_->parts[1];
}

bool operator==(const Relation& a, const Relation& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  if (a.is_atom()) return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  return a.left() == b.left() && a.right() == b.right();
}

namespace {

void collect(const Relation& r, std::set<std::string>& out) {
  if (r.is_atom()) {
    for (auto& v : free_vars(r.lhs())) out.insert(v);
    for (auto& v : free_vars(r.rhs())) out.insert(v);
    return;
  }
  collect(r.left(), out);
  collect(r.right(), out);
}

}  // namespace

std::vector<std::string> free_vars(const Relation& r) {
  std::set<std::string> names;
  collect(r, names);
  return {names.begin(), names.end()};
}

}  // namespace diffalg
