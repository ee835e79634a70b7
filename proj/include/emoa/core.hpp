#ifndef EMOA_CORE_HPP_
#define EMOA_CORE_HPP_

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace emoa {

/// Raised when an argument violates an operation's precondition.
class invalid_parameter : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation would exceed a fixed enumeration or memory budget.
class resource_limit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an output location cannot be opened or written.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/********************************************************************************
 * Bitstring
 *******************************************************************************/

/// Fixed-length binary string packed into 64-bit words.
///
/// Length is fixed at construction. Unused high bits of the last word are
/// always zero so that population counts and equality work word-wise.
class Bitstring {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Bitstring() = default;

  explicit Bitstring(std::size_t n) : size_(n), words_(word_count(n), 0) {}

  /// Parses a string of '0'/'1' characters, most significant position first
  /// (character i is bit i).
  static Bitstring from_string(std::string_view s) {
    Bitstring x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        x.set(i, true);
      } else if (s[i] != '0') {
        throw invalid_parameter("Bitstring: expected only '0' or '1'");
      }
    }
    return x;
  }

  static Bitstring ones(std::size_t n) {
    Bitstring x(n);
    for (auto& w : x.words_) w = ~word_type{0};
    x.clear_padding();
    return x;
  }

  static Bitstring zeros(std::size_t n) { return Bitstring(n); }

  /// A string of length n whose first `count` positions are 1.
  static Bitstring with_ones(std::size_t n, std::size_t count) {
    if (count > n) throw invalid_parameter("Bitstring: count exceeds length");
    Bitstring x(n);
    for (std::size_t i = 0; i < count; ++i) x.set(i, true);
    return x;
  }

  [[nodiscard]] std::size_t size() const noexcept { return size_; }

  [[nodiscard]] bool test(std::size_t i) const noexcept {
    return (words_[i / word_bits] >> (i % word_bits)) & 1U;
  }

  void set(std::size_t i, bool value) noexcept {
    const word_type mask = word_type{1} << (i % word_bits);
    if (value) {
      words_[i / word_bits] |= mask;
    } else {
      words_[i / word_bits] &= ~mask;
    }
  }

  void flip(std::size_t i) noexcept {
    words_[i / word_bits] ^= word_type{1} << (i % word_bits);
  }

  [[nodiscard]] std::size_t count_ones() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  [[nodiscard]] std::size_t count_zeros() const noexcept {
    return size_ - count_ones();
  }

  [[nodiscard]] Bitstring complement() const {
    Bitstring x = *this;
    for (auto& w : x.words_) w = ~w;
    x.clear_padding();
    return x;
  }

  [[nodiscard]] std::size_t hamming_distance(const Bitstring& other) const {
    if (other.size_ != size_) {
      throw invalid_parameter("Bitstring: length mismatch");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      d += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
    }
    return d;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (test(i)) s[i] = '1';
    }
    return s;
  }

  friend bool operator==(const Bitstring&, const Bitstring&) = default;

private:
  static std::size_t word_count(std::size_t n) {
    return (n + word_bits - 1) / word_bits;
  }

  void clear_padding() noexcept {
    const std::size_t tail = size_ % word_bits;
    if (tail != 0 && !words_.empty()) {
      words_.back() &= (word_type{1} << tail) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

[[nodiscard]] inline std::size_t ones_count(const Bitstring& x) noexcept {
  return x.count_ones();
}

[[nodiscard]] inline std::size_t zeros_count(const Bitstring& x) noexcept {
  return x.count_zeros();
}

/********************************************************************************
 * Randomness
 *******************************************************************************/

/// Draws required by the algorithms. Anything satisfying this can stand in for
/// RandomSource, which is how tests force specific outcomes.
template <class R>
concept RandomSourceLike = requires(R& r, std::uint64_t m, double p) {
  { r.uniform_bit() } -> std::convertible_to<bool>;
  { r.uniform_below(m) } -> std::convertible_to<std::uint64_t>;
  { r.bernoulli(p) } -> std::convertible_to<bool>;
};

/// SplitMix64 finalizer. Used to spread nearby seeds over the state space.
[[nodiscard]] constexpr std::uint64_t mix_seed(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniformly samples `count` distinct indices from [0, population) by a
/// partial Fisher-Yates shuffle. Returned in draw order.
template <RandomSourceLike R>
std::vector<std::size_t> sample_without_replacement(std::size_t population,
                                                    std::size_t count, R& rng) {
  if (count > population) {
    throw invalid_parameter("sample_without_replacement: count > population");
  }
  std::vector<std::size_t> idx(population);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_below(population - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  return idx;
}

/// Seeded 64-bit generator (Mersenne Twister). One instance per trial; not
/// thread-safe. Identical seeds give identical draw streams.
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed) {
    const std::uint64_t a = mix_seed(seed);
    const std::uint64_t b = mix_seed(a);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    engine_.seed(seq);
  }

  /// Independent stream for trial `stream` of an experiment seeded by `base`.
  static RandomSource for_stream(std::uint64_t base, std::uint64_t stream) {
    return RandomSource(mix_seed(base ^ mix_seed(stream)));
  }

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  bool uniform_bit() { return (engine_() >> 63) != 0; }

  /// Uniform integer in [0, m). Requires m >= 1.
  std::uint64_t uniform_below(std::uint64_t m) {
    if (m == 0) throw invalid_parameter("uniform_below: empty range");
    return std::uniform_int_distribution<std::uint64_t>(0, m - 1)(engine_);
  }

  bool bernoulli(double p) { return std::bernoulli_distribution(p)(engine_); }

  std::vector<std::size_t> sample_subset(std::size_t population, std::size_t count) {
    return sample_without_replacement(population, count, *this);
  }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/********************************************************************************
 * Variation
 *******************************************************************************/

/// Uniform sample from {0,1}^n.
template <RandomSourceLike R>
Bitstring random_bitstring(std::size_t n, R& rng) {
  if (n == 0) throw invalid_parameter("random_bitstring: n must be >= 1");
  Bitstring x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, rng.uniform_bit());
  return x;
}

/// Standard bit-wise mutation: flips each bit independently with
/// probability 1/n. Returns a new string; `x` is left untouched.
template <RandomSourceLike R>
Bitstring bitwise_mutate(const Bitstring& x, R& rng) {
  Bitstring y = x;
  const std::size_t n = x.size();
  if (n == 0) return y;
  const double p = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.bernoulli(p)) y.flip(i);
  }
  return y;
}

}  // namespace emoa

#endif  // EMOA_CORE_HPP_
