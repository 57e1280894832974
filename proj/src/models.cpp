#include "diffalg/models.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <thread>

#include "diffalg/error.hpp"

namespace diffalg {

FiniteModel make_model(std::size_t size, std::size_t zero, std::size_t one,
                       std::vector<std::uint8_t> table) {
  if (size < 2 || size > 255) throw Error(ErrorKind::precondition, "carrier size must be in 2..255");
  if (zero >= size || one >= size || zero == one) {
    throw Error(ErrorKind::precondition, "zero and one must be distinct carrier elements");
  }
  if (table.size() != size * size) throw Error(ErrorKind::precondition, "table must be size x size");
  for (auto e : table) {
    if (e >= size) throw Error(ErrorKind::precondition, "table entry outside the carrier");
  }
  return FiniteModel{size, zero, one, std::move(table)};
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::I: return "I";
    case Axiom::II: return "II";
    case Axiom::III: return "III";
    case Axiom::zero_law: return "zero-law";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view text) {
  if (text == "I") return Axiom::I;
  if (text == "II") return Axiom::II;
  if (text == "III") return Axiom::III;
  if (text == "Z" || text == "zero-law") return Axiom::zero_law;
  return std::nullopt;
}

unsigned AxiomReport::mask() const {
  unsigned m = 0;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i].holds) m |= 1u << i;
  }
  return m;
}

FiniteModel standard_model(unsigned k) {
  if (k < 1 || k > 4) throw Error(ErrorKind::precondition, "standard model width must be in 1..4");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::uint8_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<std::uint8_t>(x & ~y);
  }
  return FiniteModel{n, 0, n - 1, std::move(table)};
}

namespace {

bool axiom_i_holds(const FiniteModel& m, std::size_t x) { return m.diff(x, x) == m.zero; }

bool axiom_ii_holds(const FiniteModel& m, std::size_t x) {
  return m.diff(m.one, m.diff(m.one, x)) == x;
}

bool axiom_iii_holds(const FiniteModel& m, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  const std::size_t one = m.one;
  const std::size_t lhs = m.diff(m.diff(one, m.diff(c, m.diff(a, b))), d);
  const std::size_t rhs = m.diff(m.diff(m.diff(one, m.diff(c, a)), d), m.diff(c, m.diff(one, b)));
  return lhs == rhs;
}

bool zero_law_holds(const FiniteModel& m, std::size_t x, std::size_t y) {
  const bool mutual_zero = m.diff(x, y) == m.zero && m.diff(y, x) == m.zero;
  return (x == y) == mutual_zero;
}

LawVerdict check_law(const FiniteModel& m, Axiom axiom) {
  const std::size_t n = m.size;
  LawVerdict v;
  auto fail = [&v](std::vector<std::size_t> w) {
    v.holds = false;
    v.witness = std::move(w);
  };
  switch (axiom) {
    case Axiom::I:
      for (std::size_t x = 0; x < n; ++x) {
        if (!axiom_i_holds(m, x)) {
          fail({x});
          return v;
        }
      }
      return v;
    case Axiom::II:
      for (std::size_t x = 0; x < n; ++x) {
        if (!axiom_ii_holds(m, x)) {
          fail({x});
          return v;
        }
      }
      return v;
    case Axiom::III:
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t d = 0; d < n; ++d) {
              if (!axiom_iii_holds(m, a, b, c, d)) {
                fail({a, b, c, d});
                return v;
              }
            }
          }
        }
      }
      return v;
    case Axiom::zero_law:
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (!zero_law_holds(m, x, y)) {
            fail({x, y});
            return v;
          }
        }
      }
      return v;
  }
  return v;
}

// Splits [0, total) into contiguous chunks, one task per hardware thread,
// results in chunk order.
template <typename Result, typename Fn>
std::vector<Result> parallel_chunks(std::uint64_t total, Fn fn) {
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::thread::hardware_concurrency(), 16));
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::future<Result>> tasks;
  for (std::uint64_t begin = 0; begin < total; begin += chunk) {
    const std::uint64_t end = std::min(total, begin + chunk);
    tasks.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                               [=, &fn] { return fn(begin, end); }));
  }
  std::vector<Result> out;
  for (auto& t : tasks) out.push_back(t.get());
  return out;
}

void require_exhaustive(std::size_t size) {
  if (size < 2) throw Error(ErrorKind::precondition, "carrier size must be at least 2");
  if (size > kMaxExhaustiveSize) {
    throw Error(ErrorKind::capacity_exceeded,
                "exhaustive enumeration stops at size " + std::to_string(kMaxExhaustiveSize) +
                    " (size " + std::to_string(size) + " has " + std::to_string(size) + "^" +
                    std::to_string(size * size) + " tables)");
  }
}

bool is_countermodel(const AxiomReport& r, Axiom target) {
  for (auto a : kAllAxioms) {
    if (r[a].holds != (a != target)) return false;
  }
  return true;
}

}  // namespace

AxiomReport check_axioms(const FiniteModel& m) {
  AxiomReport report;
  for (auto a : kAllAxioms) report[a] = check_law(m, a);
  return report;
}

bool violates(const FiniteModel& m, Axiom axiom, std::span<const std::size_t> w) {
  auto in_range = [&](std::size_t arity) {
    return w.size() == arity && std::all_of(w.begin(), w.end(), [&](auto x) { return x < m.size; });
  };
  switch (axiom) {
    case Axiom::I: return in_range(1) && !axiom_i_holds(m, w[0]);
    case Axiom::II: return in_range(1) && !axiom_ii_holds(m, w[0]);
    case Axiom::III: return in_range(4) && !axiom_iii_holds(m, w[0], w[1], w[2], w[3]);
    case Axiom::zero_law: return in_range(2) && !zero_law_holds(m, w[0], w[1]);
  }
  return false;
}

std::uint64_t model_count(std::size_t size) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < size * size; ++i) {
    if (count > UINT64_MAX / size) throw Error(ErrorKind::capacity_exceeded, "model count overflows");
    count *= size;
  }
  return count;
}

FiniteModel model_at(std::size_t size, std::uint64_t index) {
  std::vector<std::uint8_t> table(size * size);
  for (std::size_t i = table.size(); i-- > 0;) {
    table[i] = static_cast<std::uint8_t>(index % size);
    index /= size;
  }
  return make_model(size, 0, 1, std::move(table));
}

void enumerate(std::size_t size, const std::function<void(std::uint64_t, const FiniteModel&)>& visit) {
  require_exhaustive(size);
  const std::uint64_t total = model_count(size);
  FiniteModel m = model_at(size, 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    visit(index, m);
    // odometer increment, last entry least significant
    for (std::size_t i = m.table.size(); i-- > 0;) {
      if (++m.table[i] < size) break;
      m.table[i] = 0;
    }
  }
}

std::uint64_t ModelSummary::satisfying(std::span<const Axiom> required) const {
  unsigned need = 0;
  for (auto a : required) need |= 1u << static_cast<unsigned>(a);
  std::uint64_t n = 0;
  for (unsigned mask = 0; mask < by_mask.size(); ++mask) {
    if ((mask & need) == need) n += by_mask[mask];
  }
  return n;
}

ModelSummary summarize_models(std::size_t size) {
  require_exhaustive(size);
  ModelSummary summary;
  summary.size = size;
  summary.total = model_count(size);
  auto parts = parallel_chunks<std::array<std::uint64_t, 16>>(
      summary.total, [size](std::uint64_t begin, std::uint64_t end) {
        std::array<std::uint64_t, 16> counts{};
        for (std::uint64_t i = begin; i < end; ++i) ++counts[check_axioms(model_at(size, i)).mask()];
        return counts;
      });
  for (const auto& part : parts) {
    for (std::size_t k = 0; k < part.size(); ++k) summary.by_mask[k] += part[k];
  }
  return summary;
}

IndependenceResult independence_search(Axiom target, std::size_t size, std::uint64_t budget,
                                       std::uint64_t seed) {
  if (target == Axiom::zero_law) {
    throw Error(ErrorKind::precondition, "independence targets are I, II and III");
  }
  if (size < 2) throw Error(ErrorKind::precondition, "carrier size must be at least 2");
  IndependenceResult result;
  result.target = target;
  result.size = size;

  if (size <= kMaxExhaustiveSize) {
    result.exhaustive = true;
    struct Hit {
      std::uint64_t examined = 0;
      std::optional<std::uint64_t> index;
    };
    auto parts = parallel_chunks<Hit>(model_count(size), [&](std::uint64_t begin, std::uint64_t end) {
      Hit hit;
      for (std::uint64_t i = begin; i < end; ++i) {
        ++hit.examined;
        if (is_countermodel(check_axioms(model_at(size, i)), target)) {
          hit.index = i;
          break;
        }
      }
      return hit;
    });
    // Only chunks up to the first hit count as examined.
    for (const auto& part : parts) {
      result.examined += part.examined;
      if (part.index) {
        result.position = *part.index;
        result.model = model_at(size, *part.index);
        result.report = check_axioms(*result.model);
        break;
      }
    }
    return result;
  }

  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> table(size * size);
  for (std::uint64_t s = 0; s < budget; ++s) {
    for (auto& e : table) e = static_cast<std::uint8_t>(rng() % size);
    ++result.examined;
    FiniteModel m = make_model(size, 0, 1, table);
    auto report = check_axioms(m);
    if (is_countermodel(report, target)) {
      result.position = s;
      result.model = std::move(m);
      result.report = report;
      break;
    }
  }
  return result;
}

std::vector<std::pair<std::string_view, const LawVerdict*>> RingAuditReport::laws() const {
  return {
      {"add-associative", &add_associative},
      {"add-commutative", &add_commutative},
      {"add-identity", &add_identity},
      {"add-inverse", &add_inverse},
      {"mul-associative", &mul_associative},
      {"distributive", &distributive},
      {"sym-self-zero", &sym_self_zero},
      {"diff-self-zero", &diff_self_zero},
      {"subtraction-is-difference", &subtraction_is_difference},
  };
}

RingAuditReport ring_audit(unsigned k) {
  if (k < 1 || k > 3) throw Error(ErrorKind::precondition, "ring audit width must be in 1..3");
  const FiniteModel m = standard_model(k);
  const std::size_t n = m.size;
  auto minus = [&](std::size_t x, std::size_t y) { return m.diff(x, y); };
  auto plus = [&](std::size_t x, std::size_t y) { return minus(m.one, minus(minus(m.one, x), y)); };
  auto times = [&](std::size_t x, std::size_t y) { return minus(x, minus(m.one, y)); };
  auto sym = [&](std::size_t x, std::size_t y) { return plus(minus(x, y), minus(y, x)); };

  RingAuditReport r;
  r.width = k;
  auto all1 = [&](LawVerdict& v, auto pred) {
    for (std::size_t a = 0; a < n && v.holds; ++a) {
      if (!pred(a)) v = {false, {a}};
    }
  };
  auto all2 = [&](LawVerdict& v, auto pred) {
    for (std::size_t a = 0; a < n && v.holds; ++a) {
      for (std::size_t b = 0; b < n && v.holds; ++b) {
        if (!pred(a, b)) v = {false, {a, b}};
      }
    }
  };
  auto all3 = [&](LawVerdict& v, auto pred) {
    for (std::size_t a = 0; a < n && v.holds; ++a) {
      for (std::size_t b = 0; b < n && v.holds; ++b) {
        for (std::size_t c = 0; c < n && v.holds; ++c) {
          if (!pred(a, b, c)) v = {false, {a, b, c}};
        }
      }
    }
  };
  // Additive inverse of y, if any.
  auto negate = [&](std::size_t y) -> std::optional<std::size_t> {
    for (std::size_t x = 0; x < n; ++x) {
      if (sym(y, x) == m.zero) return x;
    }
    return std::nullopt;
  };

  all3(r.add_associative, [&](auto a, auto b, auto c) { return sym(sym(a, b), c) == sym(a, sym(b, c)); });
  all2(r.add_commutative, [&](auto a, auto b) { return sym(a, b) == sym(b, a); });
  all1(r.add_identity, [&](auto a) { return sym(a, m.zero) == a; });
  all1(r.add_inverse, [&](auto a) { return negate(a).has_value(); });
  all3(r.mul_associative,
       [&](auto a, auto b, auto c) { return times(times(a, b), c) == times(a, times(b, c)); });
  all3(r.distributive,
       [&](auto a, auto b, auto c) { return times(sym(a, b), c) == sym(times(a, c), times(b, c)); });
  all1(r.sym_self_zero, [&](auto a) { return sym(a, a) == m.zero; });
  all1(r.diff_self_zero, [&](auto a) { return minus(a, a) == m.zero; });
  all2(r.subtraction_is_difference, [&](auto a, auto b) {
    auto inv = negate(b);
    return inv.has_value() && sym(a, *inv) == times(a, minus(m.one, b));
  });

  std::size_t ring_laws_holding = 0;
  for (const auto* v : {&r.add_associative, &r.add_commutative, &r.add_identity, &r.add_inverse,
                        &r.mul_associative, &r.distributive}) {
    ring_laws_holding += v->holds ? 1 : 0;
  }
  r.notes = std::to_string(ring_laws_holding) + " of 6 ring laws hold on the " + std::to_string(n) +
            "-element carrier; x(+)x = 0 " + (r.sym_self_zero.holds ? "holds" : "fails") +
            " and x-x = 0 " + (r.diff_self_zero.holds ? "holds" : "fails") +
            "; ring subtraction " +
            (r.subtraction_is_difference.holds ? "coincides with" : "differs from") +
            " the difference x*y'. Reported law by law; no isomorphism verdict is drawn.";
  return r;
}

}  // namespace diffalg
