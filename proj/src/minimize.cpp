#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <unordered_set>
#include <utility>

#include "diffalg/equivalence.hpp"
#include "diffalg/error.hpp"

namespace diffalg {

namespace {

// Bit i stands for vars[i]. Variables outside `care` are absent.
struct Cube {
  std::uint32_t care = 0;
  std::uint32_t value = 0;

  std::uint64_t key() const { return (std::uint64_t{care} << 32) | value; }
  bool covers(std::uint32_t minterm) const { return (minterm & care) == value; }
  int literals() const { return std::popcount(care); }
  friend bool operator==(const Cube&, const Cube&) = default;
};

// Same order as Implicant::operator< once vars are sorted.
bool cube_less(const Cube& a, const Cube& b, std::size_t nvars) {
  auto rank = [](const Cube& c, std::uint32_t bit) {
    if (!(c.care & bit)) return 2;
    return (c.value & bit) ? 1 : 0;
  };
  for (std::size_t i = 0; i < nvars; ++i) {
    int ra = rank(a, 1u << i), rb = rank(b, 1u << i);
    if (ra != rb) return ra < rb;
  }
  return false;
}

Cube to_cube(const Implicant& imp, const std::vector<std::string>& vars) {
  Cube c;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::uint32_t bit = 1u << i;
    if (imp.positive().contains(vars[i])) {
      c.care |= bit;
      c.value |= bit;
    } else if (imp.negative().contains(vars[i])) {
      c.care |= bit;
    }
  }
  return c;
}

Implicant to_implicant(const Cube& c, const std::vector<std::string>& vars) {
  std::set<std::string> pos, neg;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::uint32_t bit = 1u << i;
    if (!(c.care & bit)) continue;
    ((c.value & bit) ? pos : neg).insert(vars[i]);
  }
  return Implicant(std::move(pos), std::move(neg));
}

std::vector<Cube> prime_implicants(const std::vector<std::uint32_t>& on_set, std::size_t nvars) {
  const std::uint32_t full = nvars == 32 ? ~0u : ((1u << nvars) - 1);
  std::vector<Cube> current;
  for (auto m : on_set) current.push_back({full, m});
  std::vector<Cube> primes;
  while (!current.empty()) {
    std::unordered_set<std::uint64_t> present;
    for (const auto& c : current) present.insert(c.key());
    std::unordered_set<std::uint64_t> merged;
    std::set<std::pair<std::uint32_t, std::uint32_t>> next;
    for (const auto& c : current) {
      for (std::uint32_t rest = c.care; rest != 0; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        if (c.value & bit) continue;
        const Cube partner{c.care, c.value | bit};
        if (present.contains(partner.key())) {
          merged.insert(c.key());
          merged.insert(partner.key());
          next.emplace(c.care & ~bit, c.value);
        }
      }
    }
    for (const auto& c : current) {
      if (!merged.contains(c.key())) primes.push_back(c);
    }
    current.clear();
    for (auto [care, value] : next) current.push_back({care, value});
  }
  return primes;
}

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; }
bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](auto w) { return w != 0; });
}

// Branch and bound over (implicant count, literal count); the final tie is
// settled by comparing sorted covers.
class CoverSearch {
 public:
  CoverSearch(std::vector<Cube> primes, const std::vector<std::uint32_t>& on_set, std::size_t nvars)
      : primes_(std::move(primes)), nvars_(nvars), words_((on_set.size() + 63) / 64) {
    std::sort(primes_.begin(), primes_.end(),
              [this](const Cube& a, const Cube& b) { return cube_less(a, b, nvars_); });
    covers_.assign(primes_.size(), Bits(words_, 0));
    by_minterm_.resize(on_set.size());
    for (std::size_t p = 0; p < primes_.size(); ++p) {
      for (std::size_t m = 0; m < on_set.size(); ++m) {
        if (primes_[p].covers(on_set[m])) {
          covers_[p][m / 64] |= std::uint64_t{1} << (m % 64);
          by_minterm_[m].push_back(p);
        }
      }
    }
    min_literals_ = std::numeric_limits<int>::max();
    for (const auto& c : primes_) min_literals_ = std::min(min_literals_, c.literals());
  }

  std::vector<Cube> solve(std::size_t minterm_count) {
    Bits uncovered(words_, 0);
    for (std::size_t m = 0; m < minterm_count; ++m) uncovered[m / 64] |= std::uint64_t{1} << (m % 64);
    std::vector<std::size_t> chosen;
    search(uncovered, chosen, 0);
    std::vector<Cube> out;
    for (auto p : best_) out.push_back(primes_[p]);
    return out;
  }

 private:
  // Uncovered minterms whose candidate primes are pairwise disjoint each
  // need their own implicant.
  std::size_t lower_bound(const Bits& uncovered) const {
    std::vector<bool> used(primes_.size(), false);
    std::size_t bound = 0;
    for (std::size_t m = 0; m < by_minterm_.size(); ++m) {
      if (!test(uncovered, m)) continue;
      const auto& cands = by_minterm_[m];
      if (std::any_of(cands.begin(), cands.end(), [&](auto p) { return used[p]; })) continue;
      for (auto p : cands) used[p] = true;
      ++bound;
    }
    return bound;
  }

  bool worse_than_best(std::size_t count, int literals) const {
    if (!have_best_) return false;
    return std::pair(count, literals) > std::pair(best_.size(), best_literals_);
  }

  void search(const Bits& uncovered, std::vector<std::size_t>& chosen, int literals) {
    if (!any(uncovered)) {
      offer(chosen, literals);
      return;
    }
    const std::size_t lb = lower_bound(uncovered);
    if (worse_than_best(chosen.size() + lb, literals + static_cast<int>(lb) * min_literals_)) return;

    // Branch on the uncovered minterm with the fewest candidates.
    std::size_t pick = by_minterm_.size();
    for (std::size_t m = 0; m < by_minterm_.size(); ++m) {
      if (!test(uncovered, m)) continue;
      if (pick == by_minterm_.size() || by_minterm_[m].size() < by_minterm_[pick].size()) pick = m;
    }
    for (auto p : by_minterm_[pick]) {
      Bits rest = uncovered;
      for (std::size_t w = 0; w < words_; ++w) rest[w] &= ~covers_[p][w];
      chosen.push_back(p);
      search(rest, chosen, literals + primes_[p].literals());
      chosen.pop_back();
    }
  }

  void offer(const std::vector<std::size_t>& chosen, int literals) {
    std::vector<std::size_t> sorted = chosen;
    // primes_ is in cube order, so index order is cube order
    std::sort(sorted.begin(), sorted.end());
    if (have_best_) {
      auto mine = std::pair(sorted.size(), literals);
      auto theirs = std::pair(best_.size(), best_literals_);
      if (mine > theirs) return;
      if (mine == theirs && !(sorted < best_)) return;
    }
    best_ = std::move(sorted);
    best_literals_ = literals;
    have_best_ = true;
  }

  std::vector<Cube> primes_;
  std::size_t nvars_;
  std::size_t words_;
  std::vector<Bits> covers_;
  std::vector<std::vector<std::size_t>> by_minterm_;
  int min_literals_ = 0;
  std::vector<std::size_t> best_;
  int best_literals_ = 0;
  bool have_best_ = false;
};

}  // namespace

Dnf minimize(const Dnf& d) {
  const auto vars = d.vars();
  if (vars.size() > kMaxMinimizeVars) {
    throw Error(ErrorKind::capacity_exceeded, "minimization is limited to " +
                                                  std::to_string(kMaxMinimizeVars) + " variables");
  }
  const std::size_t n = vars.size();
  std::vector<Cube> cubes;
  for (const auto& imp : d.implicants) cubes.push_back(to_cube(imp, vars));

  std::vector<std::uint32_t> on_set;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::any_of(cubes.begin(), cubes.end(), [m](const Cube& c) { return c.covers(m); })) {
      on_set.push_back(m);
    }
  }
  if (on_set.empty()) return Dnf{};
  if (on_set.size() == (std::size_t{1} << n)) return Dnf{{Implicant{}}};

  auto primes = prime_implicants(on_set, n);
  auto cover = CoverSearch(std::move(primes), on_set, n).solve(on_set.size());
  std::vector<Implicant> out;
  for (const auto& c : cover) out.push_back(to_implicant(c, vars));
  return make_dnf(std::move(out));
}

}  // namespace diffalg
