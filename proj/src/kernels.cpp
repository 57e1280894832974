#include "diffalg/kernels.hpp"

#include <algorithm>
#include <atomic>

namespace diffalg::kernels {

namespace {

// -1 = auto, otherwise static_cast<int>(Isa)
std::atomic<int> forced{-1};

// Within one word, variable v < 6 alternates runs of 2^v zeros and ones.
constexpr Word kLowPatterns[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

Isa active_isa() {
  int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Isa>(f);
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

void force_isa(std::optional<Isa> isa) {
  if (!isa) {
    forced.store(-1);
  } else if (*isa == Isa::scalar || cpu_has_avx2()) {
    forced.store(static_cast<int>(*isa));
  }
}

void and_not_scalar(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & ~b[i];
}

void fill_scalar(std::span<Word> out, Word value) { std::fill(out.begin(), out.end(), value); }

void projection_scalar(unsigned var, std::span<Word> out) {
  if (var < 6) {
    fill_scalar(out, kLowPatterns[var]);
    return;
  }
  const std::size_t run = std::size_t{1} << (var - 6);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ((i / run) & 1) ? ~Word{0} : Word{0};
}

bool equal_scalar(std::span<const Word> a, std::span<const Word> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

#if !defined(DIFFALG_HAVE_AVX2)
void and_not_avx2(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  and_not_scalar(a, b, out);
}
void fill_avx2(std::span<Word> out, Word value) { fill_scalar(out, value); }
void projection_avx2(unsigned var, std::span<Word> out) { projection_scalar(var, out); }
bool equal_avx2(std::span<const Word> a, std::span<const Word> b) { return equal_scalar(a, b); }
#endif

void and_not(Isa isa, std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  isa == Isa::avx2 ? and_not_avx2(a, b, out) : and_not_scalar(a, b, out);
}

void fill(Isa isa, std::span<Word> out, Word value) {
  isa == Isa::avx2 ? fill_avx2(out, value) : fill_scalar(out, value);
}

void projection(Isa isa, unsigned var, std::span<Word> out) {
  isa == Isa::avx2 ? projection_avx2(var, out) : projection_scalar(var, out);
}

bool equal(Isa isa, std::span<const Word> a, std::span<const Word> b) {
  return isa == Isa::avx2 ? equal_avx2(a, b) : equal_scalar(a, b);
}

}  // namespace diffalg::kernels
