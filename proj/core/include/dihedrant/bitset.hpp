#ifndef DIHEDRANT_BITSET_HPP
#define DIHEDRANT_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace dihedrant {

/// Fixed-size dynamic bitset with word-parallel set operations.
class Bitset
{
public:
  Bitset() = default;

  explicit Bitset(int n) : _n(n), _words((n + 63) / 64, 0) {}

  int size() const { return _n; }

  void set(int i) { _words[i >> 6] |= (1ULL << (i & 63)); }
  void reset(int i) { _words[i >> 6] &= ~(1ULL << (i & 63)); }

  bool test(int i) const { return (_words[i >> 6] >> (i & 63)) & 1; }

  int count() const
  {
    int c = 0;
    for (auto w : _words)
      c += std::popcount(w);
    return c;
  }

  bool any() const
  {
    for (auto w : _words) {
      if (w)
        return true;
    }
    return false;
  }

  int intersect_count(const Bitset& other) const
  {
    int c = 0;
    for (std::size_t k = 0; k < _words.size(); ++k)
      c += std::popcount(_words[k] & other._words[k]);
    return c;
  }

  Bitset& operator&=(const Bitset& other)
  {
    for (std::size_t k = 0; k < _words.size(); ++k)
      _words[k] &= other._words[k];
    return *this;
  }

  Bitset& operator|=(const Bitset& other)
  {
    for (std::size_t k = 0; k < _words.size(); ++k)
      _words[k] |= other._words[k];
    return *this;
  }

  bool operator==(const Bitset& other) const = default;

  /// First set bit at position >= from, or -1.
  int next(int from) const
  {
    if (from >= _n)
      return -1;
    int k = from >> 6;
    std::uint64_t w = _words[k] & ~((1ULL << (from & 63)) - 1);
    for (;;) {
      if (w)
        return (k << 6) + std::countr_zero(w);
      if (++k == (int)_words.size())
        return -1;
      w = _words[k];
    }
  }

private:
  int _n = 0;
  std::vector<std::uint64_t> _words;
};

} // namespace dihedrant

#endif
