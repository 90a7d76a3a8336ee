#pragma once

// Segmented exclusion sieve over indices n.
//
// A segment [lo, hi) carries two bitmaps: bit i of blocked_minus is set iff
// lo+i = 6xy+x-y for some x, y >= 1, and bit i of blocked_plus is set iff lo+i
// = 6xy+x+y or 6xy-x-y. Unset on both sides means (6n-1, 6n+1) is a twin pair.
//
// Marking is generative: for a fixed value of one variable every form is an
// arithmetic progression in the other. A composite 6n+-1 always has a prime
// factor p <= sqrt(6n+1), and p is 6s-1 or 6s+1 for an index s that is itself
// unblocked on that side. So only those s need a progression:
//
//   p = 6s-1:  minus side  n = y(6s-1) + s   (PLUS_MINUS, x = s)
//              plus side   n = y(6s-1) - s   (MINUS_MINUS, x = s)
//   q = 6s+1:  minus side  n = x(6s+1) - s   (PLUS_MINUS, y = s)
//              plus side   n = y(6s+1) + s   (PLUS_PLUS, x = s)
//
// Every mark is a genuine witness, so the bitmaps are exact. The base indices
// s are found by running the same sieve on a smaller range (SieveBase).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "twinsieve/errors.hpp"
#include "twinsieve/forms.hpp"

namespace twinsieve {

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 20;

// Indices handed to one worker at a time in parallel mode (rounded to whole segments).
inline constexpr std::uint64_t kChunkIndices = std::uint64_t{1} << 18;

struct SieveConfig {
  Index limit = 1;                                 // inclusive
  std::uint64_t segment_size = kDefaultSegmentSize;
  unsigned parallelism_hint = 0;                   // 0 = hardware concurrency

  void validate() const {
    if (limit == 0) throw DomainError("SieveConfig: limit must be >= 1");
    if (limit > kMaxIndex) throw ArithmeticRangeError("SieveConfig: 6*limit+1 exceeds 64 bits");
    if (segment_size == 0) throw DomainError("SieveConfig: segment_size must be >= 1");
  }

  unsigned threads() const {
    if (parallelism_hint != 0) return parallelism_hint;
    return std::max(1u, std::thread::hardware_concurrency());
  }
};

/// Fixed-length bitset backed by 64-bit words; bits past size() are always zero.
class Bitmap {
public:
  Bitmap() = default;
  explicit Bitmap(std::size_t bits) : size_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  friend bool operator==(const Bitmap&, const Bitmap&) = default;

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SieveSegment {
  Index lo = 1;  // inclusive
  Index hi = 1;  // exclusive
  Bitmap blocked_minus;
  Bitmap blocked_plus;

  std::size_t size() const noexcept { return static_cast<std::size_t>(hi - lo); }
  bool minus_blocked(Index n) const { return blocked_minus.test(n - lo); }
  bool plus_blocked(Index n) const { return blocked_plus.test(n - lo); }
  bool blocked(Index n) const { return minus_blocked(n) || plus_blocked(n); }

  /// Calls fn(n) for each twin index in the segment, ascending.
  template <typename Fn>
  void for_each_twin_index(Fn&& fn) const {
    const auto minus = blocked_minus.words();
    const auto plus = blocked_plus.words();
    for (std::size_t w = 0; w < minus.size(); ++w) {
      std::uint64_t free = ~(minus[w] | plus[w]);
      if (w + 1 == minus.size() && size() % 64 != 0) free &= (std::uint64_t{1} << (size() % 64)) - 1;
      while (free) {
        const int bit = std::countr_zero(free);
        fn(lo + w * 64 + static_cast<Index>(bit));
        free &= free - 1;
      }
    }
  }

  std::size_t twin_count() const {
    std::size_t c = 0;
    for_each_twin_index([&](Index) { ++c; });
    return c;
  }

  friend bool operator==(const SieveSegment&, const SieveSegment&) = default;
};

struct TwinPair {
  Index n;
  std::uint64_t p;  // 6n-1
  std::uint64_t q;  // 6n+1

  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

inline TwinPair make_twin_pair(Index n) { return TwinPair{n, 6 * n - 1, 6 * n + 1}; }

namespace detail {

// Sets bit (v - lo) for each v in {first, first + step, ...} with lo <= v < hi.
inline void mark_progression(Bitmap& bits, Index lo, Index hi, std::uint64_t first, std::uint64_t step) {
  if (first >= hi) return;
  std::uint64_t v = first;
  if (v < lo) v += (lo - v + step - 1) / step * step;
  for (; v < hi; v += step) bits.set(static_cast<std::size_t>(v - lo));
}

// Marks with every x (both sides); used only to seed the smallest base.
inline void mark_all_forms(SieveSegment& seg) {
  const Index lo = seg.lo;
  const Index hi = seg.hi;
  for (std::uint64_t x = 1; 5 * x - 1 < hi; ++x) {
    const std::uint64_t minus_step = 6 * x - 1;
    const std::uint64_t plus_step = 6 * x + 1;
    mark_progression(seg.blocked_minus, lo, hi, minus_step + x, minus_step);  // 6xy+x-y
    mark_progression(seg.blocked_plus, lo, hi, minus_step - x, minus_step);   // 6xy-x-y
    mark_progression(seg.blocked_plus, lo, hi, plus_step + x, plus_step);     // 6xy+x+y
  }
}

inline Index segment_end(Index lo, std::uint64_t seg, Index end) { return end - lo <= seg ? end : lo + seg; }

}  // namespace detail

/// Indices s <= bound whose 6s-1 (resp. 6s+1) is prime and at most sqrt(6*max_index+1).
class SieveBase {
public:
  explicit SieveBase(Index max_index) : max_index_(max_index) {
    detail::check_index(max_index, "SieveBase");
    const std::uint64_t root = detail::isqrt(6 * max_index + 1);
    const Index bound = (root + 1) / 6;
    if (bound == 0) return;

    SieveSegment seg{1, bound + 1, Bitmap(bound), Bitmap(bound)};
    if (bound <= kSeedBound) {
      detail::mark_all_forms(seg);
    } else {
      const SieveBase smaller(bound);
      smaller.mark(seg);
    }
    for (Index s = 1; s <= bound; ++s) {
      if (!seg.minus_blocked(s)) minus_.push_back(s);
      if (!seg.plus_blocked(s) && 6 * s + 1 <= root) plus_.push_back(s);
    }
  }

  Index max_index() const noexcept { return max_index_; }
  std::span<const Index> minus_prime_indices() const noexcept { return minus_; }
  std::span<const Index> plus_prime_indices() const noexcept { return plus_; }

  /// Marks both bitmaps of `seg`; requires seg.hi - 1 <= max_index().
  void mark(SieveSegment& seg) const {
    if (seg.hi - 1 > max_index_) throw DomainError("SieveBase: segment exceeds base range");
    for (Index s : minus_) {
      const std::uint64_t p = 6 * s - 1;
      detail::mark_progression(seg.blocked_minus, seg.lo, seg.hi, p + s, p);
      detail::mark_progression(seg.blocked_plus, seg.lo, seg.hi, p - s, p);
    }
    for (Index s : plus_) {
      const std::uint64_t q = 6 * s + 1;
      detail::mark_progression(seg.blocked_minus, seg.lo, seg.hi, q - s, q);
      detail::mark_progression(seg.blocked_plus, seg.lo, seg.hi, q + s, q);
    }
  }

private:
  static constexpr Index kSeedBound = 4096;

  Index max_index_;
  std::vector<Index> minus_;
  std::vector<Index> plus_;
};

/// Sieves [lo, hi) with a precomputed base covering hi - 1.
inline SieveSegment sieve_segment(Index lo, Index hi, const SieveBase& base) {
  if (lo == 0 || lo >= hi) throw DomainError("sieve_segment: requires 1 <= lo < hi");
  if (hi - 1 > kMaxIndex) throw ArithmeticRangeError("sieve_segment: 6(hi-1)+1 exceeds 64 bits");
  const auto len = static_cast<std::size_t>(hi - lo);
  SieveSegment seg{lo, hi, Bitmap(len), Bitmap(len)};
  base.mark(seg);
  return seg;
}

inline SieveSegment sieve_segment(Index lo, Index hi) {
  if (lo == 0 || lo >= hi) throw DomainError("sieve_segment: requires 1 <= lo < hi");
  if (hi - 1 > kMaxIndex) throw ArithmeticRangeError("sieve_segment: 6(hi-1)+1 exceeds 64 bits");
  return sieve_segment(lo, hi, SieveBase(hi - 1));
}

/// Calls fn(const SieveSegment&) for consecutive segments covering [1, limit], in order.
/// Segments are computed concurrently in batches and handed out sequentially.
template <typename Fn>
void for_each_segment(const SieveConfig& config, Fn&& fn) {
  config.validate();
  const SieveBase base(config.limit);
  const Index end = config.limit + 1;
  const std::uint64_t seg = config.segment_size;
  const unsigned threads = config.threads();

  auto segment_at = [&](Index lo) { return sieve_segment(lo, detail::segment_end(lo, seg, end), base); };

  if (threads <= 1) {
    for (Index lo = 1; lo < end; lo = detail::segment_end(lo, seg, end)) fn(segment_at(lo));
    return;
  }

  // Each worker takes a run of consecutive segments spanning about kChunkIndices.
  const std::uint64_t per_chunk = std::max<std::uint64_t>(1, kChunkIndices / seg);

  Index lo = 1;
  while (lo < end) {
    std::vector<std::vector<SieveSegment>> chunks(threads);
    std::vector<Index> starts;
    for (unsigned t = 0; t < threads && lo < end; ++t) {
      starts.push_back(lo);
      for (std::uint64_t k = 0; k < per_chunk && lo < end; ++k) lo = detail::segment_end(lo, seg, end);
    }
    starts.push_back(lo);
    {
      std::vector<std::jthread> workers;
      for (std::size_t t = 0; t + 1 < starts.size(); ++t) {
        workers.emplace_back([&, t] {
          for (Index s = starts[t]; s < starts[t + 1]; s = detail::segment_end(s, seg, end)) chunks[t].push_back(segment_at(s));
        });
      }
    }
    for (std::size_t t = 0; t + 1 < starts.size(); ++t)
      for (const auto& s : chunks[t]) fn(s);
  }
}

/// Upper estimate of bytes held at once by for_each_segment: the base index lists
/// plus two bitmaps for every segment alive in one batch.
inline std::uint64_t estimate_sieve_memory(const SieveConfig& config) {
  config.validate();
  const std::uint64_t root = detail::isqrt(6 * config.limit + 1);
  const std::uint64_t base_bytes = (root / 3 + 1) * sizeof(Index);
  const std::uint64_t seg = std::min<std::uint64_t>(config.segment_size, config.limit);
  const unsigned threads = config.threads();
  const std::uint64_t per_worker = threads <= 1 ? seg : std::max<std::uint64_t>(1, kChunkIndices / seg) * seg;
  const std::uint64_t live = std::min<std::uint64_t>(per_worker * threads, config.limit);
  return base_bytes + 2 * ((live + 63) / 64) * 8;
}

template <typename Fn>
void for_each_twin(const SieveConfig& config, Fn&& fn) {
  for_each_segment(config, [&](const SieveSegment& s) { s.for_each_twin_index([&](Index n) { fn(make_twin_pair(n)); }); });
}

inline std::vector<TwinPair> enumerate_twins(const SieveConfig& config) {
  std::vector<TwinPair> out;
  for_each_twin(config, [&](const TwinPair& t) { out.push_back(t); });
  return out;
}

inline std::uint64_t count_twins(const SieveConfig& config) {
  std::uint64_t count = 0;
  for_each_segment(config, [&](const SieveSegment& s) { count += s.twin_count(); });
  return count;
}

/// Twin count plus a 64-bit FNV-1a digest of the ascending twin indices
/// (each fed as 8 little-endian bytes).
struct TwinDigest {
  std::uint64_t count = 0;
  std::uint64_t hash = 0xcbf29ce484222325ull;

  void feed(Index n) noexcept {
    for (int i = 0; i < 8; ++i) {
      hash ^= (n >> (8 * i)) & 0xff;
      hash *= 0x100000001b3ull;
    }
    ++count;
  }
};

inline TwinDigest digest_twins(const SieveConfig& config) {
  TwinDigest d;
  for_each_segment(config, [&](const SieveSegment& s) { s.for_each_twin_index([&](Index n) { d.feed(n); }); });
  return d;
}

}  // namespace twinsieve
