#include "diffalg/equivalence.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "diffalg/error.hpp"
#include "diffalg/kernels.hpp"

namespace diffalg {

Implicant::Implicant(std::set<std::string> positive, std::set<std::string> negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
  for (const auto& v : positive_) {
    if (negative_.contains(v)) {
      throw Error(ErrorKind::precondition, "implicant contains both " + v + " and " + v + "'");
    }
  }
}

namespace {

std::set<std::string> vars_of(const Implicant& i) {
  std::set<std::string> all = i.positive();
  all.insert(i.negative().begin(), i.negative().end());
  return all;
}

int literal_rank(const Implicant& i, const std::string& v) {
  if (i.negative().contains(v)) return 0;
  if (i.positive().contains(v)) return 1;
  return 2;
}

Term product_of(const std::vector<Term>& factors) {
  Term t = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) t = Term::prod(std::move(t), factors[i]);
  return t;
}

Term sum_of(const std::vector<Term>& parts) {
  Term t = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) t = Term::sum(std::move(t), parts[i]);
  return t;
}

}  // namespace

std::string Implicant::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (const auto& v : vars_of(*this)) {
    if (!out.empty()) out += '*';
    out += v;
    if (negative_.contains(v)) out += '\'';
  }
  return out;
}

bool operator<(const Implicant& a, const Implicant& b) {
  auto all = vars_of(a);
  auto vb = vars_of(b);
  all.insert(vb.begin(), vb.end());
  for (const auto& v : all) {
    int ra = literal_rank(a, v), rb = literal_rank(b, v);
    if (ra != rb) return ra < rb;
  }
  return false;
}

bool Dnf::is_one() const {
  return std::any_of(implicants.begin(), implicants.end(), [](const Implicant& i) { return i.is_one(); });
}

std::vector<std::string> Dnf::vars() const {
  std::set<std::string> all;
  for (const auto& i : implicants) {
    auto v = vars_of(i);
    all.insert(v.begin(), v.end());
  }
  return {all.begin(), all.end()};
}

std::size_t Dnf::literal_count() const {
  std::size_t n = 0;
  for (const auto& i : implicants) n += i.literal_count();
  return n;
}

Dnf make_dnf(std::vector<Implicant> implicants) {
  std::sort(implicants.begin(), implicants.end());
  implicants.erase(std::unique(implicants.begin(), implicants.end()), implicants.end());
  return Dnf{std::move(implicants)};
}

Equation equation_of(const Relation& r) {
  switch (r.op()) {
    case RelOp::leq: return {Term::diff(r.lhs(), r.rhs())};
    case RelOp::eq: return {Term::mod_diff(r.lhs(), r.rhs())};
    case RelOp::conj: return {Term::sum(equation_of(r.left()).body, equation_of(r.right()).body)};
    case RelOp::disj: return {Term::prod(equation_of(r.left()).body, equation_of(r.right()).body)};
  }
  return {Term::zero()};
}

Dnf to_dnf(const Equation& e) {
  auto table = truth_table(e.body);
  if (table.vars.size() > kMaxMinimizeVars) {
    throw Error(ErrorKind::capacity_exceeded, "minimization is limited to " +
                                                  std::to_string(kMaxMinimizeVars) + " variables");
  }
  std::vector<Implicant> minterms;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    if (!table.bit(r)) continue;
    std::set<std::string> pos, neg;
    for (std::size_t i = 0; i < table.vars.size(); ++i) {
      (((r >> i) & 1) ? pos : neg).insert(table.vars[i]);
    }
    minterms.emplace_back(std::move(pos), std::move(neg));
  }
  return minimize(make_dnf(std::move(minterms)));
}

Term implicant_term(const Implicant& i) {
  if (i.is_one()) return Term::one();
  std::vector<Term> positives;
  for (const auto& v : i.positive()) positives.push_back(Term::var(v));
  if (positives.empty()) {
    std::vector<Term> complements;
    for (const auto& v : i.negative()) complements.push_back(Term::complement(Term::var(v)));
    return product_of(complements);
  }
  Term t = product_of(positives);
  for (const auto& v : i.negative()) t = Term::diff(std::move(t), Term::var(v));
  return t;
}

Term dnf_term(const Dnf& d) {
  if (d.is_zero()) return Term::zero();
  std::vector<Term> parts;
  for (const auto& i : d.implicants) parts.push_back(implicant_term(i));
  return sum_of(parts);
}

Relation relation_of(const Dnf& d) {
  if (d.is_one()) {
    throw Error(ErrorKind::unsatisfiable_relation, "the equation 1 = 0 has no solutions");
  }
  if (d.is_zero()) return Relation::eq(Term::zero(), Term::zero());

  // How many implicants carry each positive literal; an all-positive
  // product keeps its most shared literal on the left.
  std::map<std::string, std::size_t> shared;
  for (const auto& i : d.implicants) {
    for (const auto& v : i.positive()) ++shared[v];
  }

  std::vector<Relation> atoms;
  for (const auto& i : d.implicants) {
    std::vector<Term> right;
    Term left;
    if (!i.negative().empty()) {
      // p1*...*pj*n1'*...*nm' = 0  iff  p1*...*pj <= n1+...+nm
      if (i.positive().empty()) {
        left = Term::one();
      } else {
        std::vector<Term> ps;
        for (const auto& v : i.positive()) ps.push_back(Term::var(v));
        left = product_of(ps);
      }
      for (const auto& v : i.negative()) right.push_back(Term::var(v));
    } else if (i.positive().size() == 1) {
      left = Term::var(*i.positive().begin());
      right.push_back(Term::zero());
    } else {
      // p*q*r = 0  iff  p <= q'+r'
      std::string pivot = *i.positive().begin();
      for (const auto& v : i.positive()) {
        if (shared[v] > shared[pivot]) pivot = v;
      }
      left = Term::var(pivot);
      for (const auto& v : i.positive()) {
        if (v != pivot) right.push_back(Term::complement(Term::var(v)));
      }
    }
    atoms.push_back(Relation::leq(std::move(left), sum_of(right)));
  }
  Relation out = atoms.front();
  for (std::size_t k = 1; k < atoms.size(); ++k) out = Relation::conj(std::move(out), atoms[k]);
  return out;
}

EquivalenceVerdict equivalent(const Relation& a, const Relation& b) {
  const Term fa = equation_of(a).body;
  const Term fb = equation_of(b).body;
  auto vars = merge_vars(free_vars(a), free_vars(b));
  auto ta = truth_table(fa, vars);
  auto tb = truth_table(fb, vars);
  EquivalenceVerdict verdict;
  if (kernels::equal(kernels::active_isa(), ta.words, tb.words)) {
    verdict.equivalent = true;
    return verdict;
  }
  for (std::size_t r = 0; r < ta.rows(); ++r) {
    if (ta.bit(r) != tb.bit(r)) {
      verdict.counterexample = ta.assignment(r);
      // a relation holds where its equation is 0
      verdict.first_holds = !ta.bit(r);
      break;
    }
  }
  return verdict;
}

}  // namespace diffalg
