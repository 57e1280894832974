// Compiled with -mavx2; only reached through runtime dispatch.
#include <immintrin.h>

#include "diffalg/kernels.hpp"

namespace diffalg::kernels {

namespace {

constexpr std::size_t kLanes = 4;

__m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

}  // namespace

void and_not_avx2(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    // andnot computes ~first & second
    store(out.data() + i, _mm256_andnot_si256(load(b.data() + i), load(a.data() + i)));
  }
  for (; i < n; ++i) out[i] = a[i] & ~b[i];
}

void fill_avx2(std::span<Word> out, Word value) {
  const __m256i v = _mm256_set1_epi64x(static_cast<long long>(value));
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(out.data() + i, v);
  for (; i < n; ++i) out[i] = value;
}

void projection_avx2(unsigned var, std::span<Word> out) {
  if (var < 6) {
    projection_scalar(var, out);
    return;
  }
  // Runs of 2^(var-6) equal words; runs of >= 4 words fill whole vectors.
  const std::size_t run = std::size_t{1} << (var - 6);
  if (run < kLanes) {
    projection_scalar(var, out);
    return;
  }
  const __m256i zeros = _mm256_setzero_si256();
  const __m256i ones = _mm256_set1_epi64x(-1);
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) store(out.data() + i, ((i / run) & 1) ? ones : zeros);
  for (; i < n; ++i) out[i] = ((i / run) & 1) ? ~Word{0} : Word{0};
}

bool equal_avx2(std::span<const Word> a, std::span<const Word> b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i x = _mm256_xor_si256(load(a.data() + i), load(b.data() + i));
    if (!_mm256_testz_si256(x, x)) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace diffalg::kernels
