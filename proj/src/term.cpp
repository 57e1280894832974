#include "diffalg/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "diffalg/error.hpp"

namespace diffalg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_path: return "invalid-path";
    case ErrorKind::invalid_name: return "invalid-name";
    case ErrorKind::unbound_metavariable: return "unbound-metavariable";
    case ErrorKind::unbound_variable: return "unbound-variable";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::unknown_rule: return "unknown-rule";
    case ErrorKind::pattern_mismatch: return "pattern-mismatch";
    case ErrorKind::result_mismatch: return "result-mismatch";
    case ErrorKind::missing_binding: return "missing-binding";
    case ErrorKind::duplicate_name: return "duplicate-name";
    case ErrorKind::not_proved: return "not-proved";
    case ErrorKind::capacity_exceeded: return "capacity-exceeded";
    case ErrorKind::unsatisfiable_relation: return "unsatisfiable-relation";
    case ErrorKind::precondition: return "precondition";
  }
  return "unknown";
}

bool is_valid_var_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
  });
}

bool is_metavariable(std::string_view name) {
  return name.size() == 1 && name[0] >= 'A' && name[0] <= 'Z';
}

struct Term::Node {
  Op op = Op::zero;
  std::string name;
  std::vector<Term> children;
  std::size_t size = 1;
  bool core = true;
};

namespace {

std::size_t arity_of(Op op) {
  switch (op) {
    case Op::zero:
    case Op::one:
    case Op::var: return 0;
    case Op::complement: return 1;
    default: return 2;
  }
}

bool is_sugar(Op op) {
  return op == Op::sum || op == Op::prod || op == Op::complement ||
         op == Op::mod_diff;
}

const std::string& empty_name() {
  static const std::string empty;
  return empty;
}

}  // namespace

Term::Term() : Term(zero()) {}

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term Term::zero() {
  static const Term z{std::make_shared<const Node>(Node{Op::zero, {}, {}, 1, true})};
  return z;
}

Term Term::one() {
  static const Term o{std::make_shared<const Node>(Node{Op::one, {}, {}, 1, true})};
  return o;
}

Term Term::var(std::string name) {
  if (!is_valid_var_name(name)) {
    throw Error(ErrorKind::invalid_name, "invalid variable name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->op = Op::var;
  node->name = std::move(name);
  return Term(std::move(node));
}

namespace {

template <typename NodeT, typename TermT>
std::shared_ptr<const NodeT> make_node(Op op, TermT a, TermT b) {
  auto node = std::make_shared<NodeT>();
  node->op = op;
  node->size = 1 + a.size() + b.size();
  node->core = !is_sugar(op) && a.is_core() && b.is_core();
  node->children.reserve(2);
  node->children.push_back(std::move(a));
  node->children.push_back(std::move(b));
  return node;
}

}  // namespace

Term Term::diff(Term left, Term right) {
  return Term(make_node<Node>(Op::diff, std::move(left), std::move(right)));
}

Term Term::sum(Term left, Term right) {
  return Term(make_node<Node>(Op::sum, std::move(left), std::move(right)));
}

Term Term::prod(Term left, Term right) {
  return Term(make_node<Node>(Op::prod, std::move(left), std::move(right)));
}

Term Term::mod_diff(Term left, Term right) {
  return Term(make_node<Node>(Op::mod_diff, std::move(left), std::move(right)));
}

Term Term::complement(Term operand) {
  auto node = std::make_shared<Node>();
  node->op = Op::complement;
  node->size = 1 + operand.size();
  node->core = false;
  node->children.push_back(std::move(operand));
  return Term(std::move(node));
}

Op Term::op() const { return node_->op; }

const std::string& Term::name() const {
  return node_->op == Op::var ? node_->name : empty_name();
}

std::size_t Term::arity() const { return arity_of(node_->op); }

const Term& Term::child(std::size_t index) const {
  if (index >= arity()) {
    throw Error(ErrorKind::invalid_path, "child index out of range");
  }
  return node_->children[index];
}

std::size_t Term::size() const { return node_->size; }

bool Term::is_core() const { return node_->core; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->op != b.node_->op || a.node_->size != b.node_->size) return false;
  if (a.node_->op == Op::var) return a.node_->name == b.node_->name;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.node_->children[i] == b.node_->children[i])) return false;
  }
  return true;
}

bool operator<(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return false;
  if (a.node_->op != b.node_->op) return a.node_->op < b.node_->op;
  if (a.node_->op == Op::var) return a.node_->name < b.node_->name;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    const Term& x = a.node_->children[i];
    const Term& y = b.node_->children[i];
    if (x < y) return true;
    if (y < x) return false;
  }
  return false;
}

Path::Path(std::vector<std::uint8_t> indices) : indices_(std::move(indices)) {
  for (auto i : indices_) {
    if (i > 1) throw Error(ErrorKind::invalid_path, "child index must be 0 or 1");
  }
}

Path Path::child(std::uint8_t index) const {
  auto next = indices_;
  next.push_back(index);
  return Path(std::move(next));
}

std::string Path::to_string() const {
  if (indices_.empty()) return ".";
  std::string out;
  for (auto i : indices_) {
    out += '.';
    out += static_cast<char>('0' + i);
  }
  return out;
}

Term desugar(const Term& t) {
  if (t.is_core()) return t;
  switch (t.op()) {
    case Op::diff:
      return Term::diff(desugar(t.left()), desugar(t.right()));
    case Op::complement:
      return Term::diff(Term::one(), desugar(t.child(0)));
    case Op::sum: {
      // a+b = 1-((1-a)-b)
      auto a = desugar(t.left());
      auto b = desugar(t.right());
      return Term::diff(Term::one(), Term::diff(Term::diff(Term::one(), std::move(a)), std::move(b)));
    }
    case Op::prod:
      // a*b = a-(1-b)
      return Term::diff(desugar(t.left()), Term::diff(Term::one(), desugar(t.right())));
    case Op::mod_diff: {
      // |a-b| = (a-b)+(b-a)
      const auto& a = t.left();
      const auto& b = t.right();
      return desugar(Term::sum(Term::diff(a, b), Term::diff(b, a)));
    }
    default:
      return t;
  }
}

namespace {

void collect_vars(const Term& t, std::set<std::string>& out, bool metas_only) {
  if (t.op() == Op::var) {
    if (!metas_only || is_metavariable(t.name())) out.insert(t.name());
    return;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) collect_vars(t.child(i), out, metas_only);
}

}  // namespace

std::vector<std::string> free_vars(const Term& t) {
  std::set<std::string> names;
  collect_vars(t, names, false);
  return {names.begin(), names.end()};
}

std::vector<std::string> metavariables(const Term& t) {
  std::set<std::string> names;
  collect_vars(t, names, true);
  return {names.begin(), names.end()};
}

const Term& subterm_at(const Term& t, const Path& p) {
  const Term* cur = &t;
  for (auto i : p.indices()) {
    if (i >= cur->arity()) {
      throw Error(ErrorKind::invalid_path, "path " + p.to_string() + " leaves the term");
    }
    cur = &cur->child(i);
  }
  return *cur;
}

namespace {

Term rebuild(const Term& t, std::size_t i, Term child) {
  switch (t.op()) {
    case Op::complement: return Term::complement(std::move(child));
    case Op::diff:
      return i == 0 ? Term::diff(std::move(child), t.right()) : Term::diff(t.left(), std::move(child));
    case Op::sum:
      return i == 0 ? Term::sum(std::move(child), t.right()) : Term::sum(t.left(), std::move(child));
    case Op::prod:
      return i == 0 ? Term::prod(std::move(child), t.right()) : Term::prod(t.left(), std::move(child));
    case Op::mod_diff:
      return i == 0 ? Term::mod_diff(std::move(child), t.right())
                    : Term::mod_diff(t.left(), std::move(child));
    default: throw Error(ErrorKind::invalid_path, "leaf has no children");
  }
}

Term replace_rec(const Term& t, const Path& p, std::size_t depth, Term replacement) {
  if (depth == p.depth()) return replacement;
  auto i = p.indices()[depth];
  if (i >= t.arity()) {
    throw Error(ErrorKind::invalid_path, "path " + p.to_string() + " leaves the term");
  }
  return rebuild(t, i, replace_rec(t.child(i), p, depth + 1, std::move(replacement)));
}

bool match_rec(const Term& pattern, const Term& t, Substitution& sigma) {
  if (pattern.op() == Op::var && is_metavariable(pattern.name())) {
    auto [it, inserted] = sigma.try_emplace(pattern.name(), t);
    return inserted || it->second == t;
  }
  if (pattern.op() != t.op()) return false;
  if (pattern.op() == Op::var) return pattern.name() == t.name();
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_rec(pattern.child(i), t.child(i), sigma)) return false;
  }
  return true;
}

void paths_rec(const Term& t, const Path& here, std::vector<Path>& out) {
  out.push_back(here);
  for (std::size_t i = 0; i < t.arity(); ++i) {
    paths_rec(t.child(i), here.child(static_cast<std::uint8_t>(i)), out);
  }
}

}  // namespace

Term replace_at(const Term& t, const Path& p, Term replacement) {
  return replace_rec(t, p, 0, std::move(replacement));
}

std::optional<Substitution> match_pattern(const Term& pattern, const Term& t) {
  Substitution sigma;
  if (!match_rec(pattern, t, sigma)) return std::nullopt;
  return sigma;
}

Term apply_substitution(const Term& pattern, const Substitution& sigma) {
  switch (pattern.op()) {
    case Op::zero:
    case Op::one: return pattern;
    case Op::var: {
      if (!is_metavariable(pattern.name())) return pattern;
      auto it = sigma.find(pattern.name());
      if (it == sigma.end()) {
        throw Error(ErrorKind::unbound_metavariable,
                    "metavariable " + pattern.name() + " is not bound");
      }
      return it->second;
    }
    case Op::complement: return Term::complement(apply_substitution(pattern.child(0), sigma));
    default: {
      auto l = apply_substitution(pattern.left(), sigma);
      auto r = apply_substitution(pattern.right(), sigma);
      switch (pattern.op()) {
        case Op::diff: return Term::diff(std::move(l), std::move(r));
        case Op::sum: return Term::sum(std::move(l), std::move(r));
        case Op::prod: return Term::prod(std::move(l), std::move(r));
        default: return Term::mod_diff(std::move(l), std::move(r));
      }
    }
  }
}

std::vector<Path> all_paths(const Term& t) {
  std::vector<Path> out;
  paths_rec(t, Path{}, out);
  return out;
}

}  // namespace diffalg
