#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

// Word-parallel bit kernels behind truth-table evaluation. Every operation
// has a portable scalar reference and an AVX2 variant; `active_isa` picks
// the best one the CPU supports at runtime.
namespace diffalg::kernels {

using Word = std::uint64_t;

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

bool cpu_has_avx2();

// Best available ISA, or the forced one.
Isa active_isa();

// Pins dispatch to `isa` (nullopt restores auto-detection). Forcing avx2 on
// a CPU without it is ignored.
void force_isa(std::optional<Isa> isa);

// out[i] = a[i] & ~b[i]. Spans must have equal length; `out` may alias `a`
// or `b`.
void and_not_scalar(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
void and_not_avx2(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
void and_not(Isa isa, std::span<const Word> a, std::span<const Word> b, std::span<Word> out);

void fill_scalar(std::span<Word> out, Word value);
void fill_avx2(std::span<Word> out, Word value);
void fill(Isa isa, std::span<Word> out, Word value);

// Row r of the output holds bit (r >> var) & 1.
void projection_scalar(unsigned var, std::span<Word> out);
void projection_avx2(unsigned var, std::span<Word> out);
void projection(Isa isa, unsigned var, std::span<Word> out);

// True when a[i] == b[i] for all i.
bool equal_scalar(std::span<const Word> a, std::span<const Word> b);
bool equal_avx2(std::span<const Word> a, std::span<const Word> b);
bool equal(Isa isa, std::span<const Word> a, std::span<const Word> b);

}  // namespace diffalg::kernels
