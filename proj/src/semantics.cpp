#include "diffalg/semantics.hpp"

#include <algorithm>
#include <iterator>

#include "diffalg/error.hpp"

namespace diffalg {

namespace {

bool eval_bit(const Term& t, const Assignment& sigma) {
  switch (t.op()) {
    case Op::zero: return false;
    case Op::one: return true;
    case Op::var: {
      auto it = sigma.find(t.name());
      if (it == sigma.end()) {
        throw Error(ErrorKind::unbound_variable, "variable " + t.name() + " is unassigned");
      }
      return it->second;
    }
    case Op::diff: return eval_bit(t.left(), sigma) && !eval_bit(t.right(), sigma);
    default: throw Error(ErrorKind::precondition, "eval_core needs a core term");
  }
}

std::uint64_t eval_mask(const Term& t, std::uint64_t top, const PowersetAssignment& sigma) {
  switch (t.op()) {
    case Op::zero: return 0;
    case Op::one: return top;
    case Op::var: {
      auto it = sigma.find(t.name());
      if (it == sigma.end()) {
        throw Error(ErrorKind::unbound_variable, "variable " + t.name() + " is unassigned");
      }
      return it->second & top;
    }
    case Op::diff: return eval_mask(t.left(), top, sigma) & ~eval_mask(t.right(), top, sigma);
    default: throw Error(ErrorKind::precondition, "eval_powerset needs a core term");
  }
}

std::size_t word_count(std::size_t nvars) {
  return nvars <= 6 ? 1 : std::size_t{1} << (nvars - 6);
}

kernels::Word tail_mask(std::size_t nvars) {
  return nvars >= 6 ? ~kernels::Word{0} : ((kernels::Word{1} << (std::size_t{1} << nvars)) - 1);
}

void check_vars(const Term& t, const std::vector<std::string>& vars) {
  if (vars.size() > kMaxTableVars) {
    throw Error(ErrorKind::capacity_exceeded, "truth tables are limited to " +
                                                  std::to_string(kMaxTableVars) + " variables");
  }
  if (!std::is_sorted(vars.begin(), vars.end()) ||
      std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
    throw Error(ErrorKind::precondition, "table variables must be sorted and distinct");
  }
  for (const auto& v : free_vars(t)) {
    if (!std::binary_search(vars.begin(), vars.end(), v)) {
      throw Error(ErrorKind::unbound_variable, "variable " + v + " is not a table column");
    }
  }
}

// Post-order evaluation with one word buffer per node.
class WordEvaluator {
 public:
  WordEvaluator(const std::vector<std::string>& vars, kernels::Isa isa)
      : vars_(vars), isa_(isa), width_(word_count(vars.size())), mask_(tail_mask(vars.size())) {}

  std::vector<kernels::Word> run(const Term& t) {
    std::vector<kernels::Word> out(width_);
    eval(t, out);
    return out;
  }

 private:
  void eval(const Term& t, std::span<kernels::Word> out) {
    switch (t.op()) {
      case Op::zero: kernels::fill(isa_, out, 0); return;
      case Op::one:
        kernels::fill(isa_, out, ~kernels::Word{0});
        out.back() &= mask_;
        return;
      case Op::var: {
        auto idx = std::lower_bound(vars_.begin(), vars_.end(), t.name()) - vars_.begin();
        kernels::projection(isa_, static_cast<unsigned>(idx), out);
        out.back() &= mask_;
        return;
      }
      case Op::diff: {
        std::vector<kernels::Word> rhs(width_);
        eval(t.left(), out);
        eval(t.right(), rhs);
        kernels::and_not(isa_, out, rhs, out);
        return;
      }
      default: throw Error(ErrorKind::precondition, "word evaluation needs a core term");
    }
  }

  const std::vector<std::string>& vars_;
  kernels::Isa isa_;
  std::size_t width_;
  kernels::Word mask_;
};

}  // namespace

bool eval_core(const Term& t, const Assignment& sigma) { return eval_bit(t, sigma); }

std::uint64_t eval_powerset(const Term& t, unsigned k, const PowersetAssignment& sigma) {
  if (k < 1 || k > 63) throw Error(ErrorKind::precondition, "powerset width must be in 1..63");
  const std::uint64_t top = (std::uint64_t{1} << k) - 1;
  return eval_mask(t, top, sigma);
}

std::string TruthTable::bit_string() const {
  std::string out;
  out.reserve(rows());
  for (std::size_t r = 0; r < rows(); ++r) out += bit(r) ? '1' : '0';
  return out;
}

Assignment TruthTable::assignment(std::size_t row) const {
  Assignment sigma;
  for (std::size_t i = 0; i < vars.size(); ++i) sigma[vars[i]] = (row >> i) & 1;
  return sigma;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

TruthTable truth_table(const Term& t) { return truth_table(t, free_vars(t)); }

TruthTable truth_table(const Term& t, std::vector<std::string> vars) {
  return truth_table(t, std::move(vars), kernels::active_isa());
}

TruthTable truth_table(const Term& t, std::vector<std::string> vars, kernels::Isa isa) {
  check_vars(t, vars);
  Term core = desugar(t);
  TruthTable table;
  table.words = WordEvaluator(vars, isa).run(core);
  table.vars = std::move(vars);
  return table;
}

TruthTable truth_table_reference(const Term& t, std::vector<std::string> vars) {
  check_vars(t, vars);
  Term core = desugar(t);
  TruthTable table;
  table.vars = std::move(vars);
  table.words.assign(word_count(table.vars.size()), 0);
  for (std::size_t r = 0; r < table.rows(); ++r) {
    if (eval_core(core, table.assignment(r))) table.words[r / 64] |= kernels::Word{1} << (r % 64);
  }
  return table;
}

std::optional<Assignment> identity_counterexample(const Term& lhs, const Term& rhs) {
  auto vars = merge_vars(free_vars(lhs), free_vars(rhs));
  auto a = truth_table(lhs, vars);
  auto b = truth_table(rhs, vars);
  if (kernels::equal(kernels::active_isa(), a.words, b.words)) return std::nullopt;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (a.bit(r) != b.bit(r)) return a.assignment(r);
  }
  return std::nullopt;
}

bool valid_identity(const Term& lhs, const Term& rhs) {
  return !identity_counterexample(lhs, rhs).has_value();
}

bool relation_holds(const Relation& r, const Assignment& sigma) {
  switch (r.op()) {
    case RelOp::leq:
      return !eval_core(desugar(Term::diff(r.lhs(), r.rhs())), sigma);
    case RelOp::eq:
      // a = b iff a - b = 0 and b - a = 0
      return !eval_core(desugar(Term::diff(r.lhs(), r.rhs())), sigma) &&
             !eval_core(desugar(Term::diff(r.rhs(), r.lhs())), sigma);
    case RelOp::conj: return relation_holds(r.left(), sigma) && relation_holds(r.right(), sigma);
    case RelOp::disj: return relation_holds(r.left(), sigma) || relation_holds(r.right(), sigma);
  }
  return false;
}

std::optional<Assignment> relation_counterexample(const Relation& r) {
  auto vars = free_vars(r);
  if (vars.size() > kMaxTableVars) {
    throw Error(ErrorKind::capacity_exceeded, "too many variables");
  }
  TruthTable shape{vars, {}};
  for (std::size_t row = 0; row < shape.rows(); ++row) {
    auto sigma = shape.assignment(row);
    if (!relation_holds(r, sigma)) return sigma;
  }
  return std::nullopt;
}

bool relation_valid(const Relation& r) { return !relation_counterexample(r).has_value(); }

}  // namespace diffalg
