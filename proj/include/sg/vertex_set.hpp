#ifndef SG_VERTEX_SET_HPP
#define SG_VERTEX_SET_HPP

/**
 * Dynamic bit set over vertex indices. Coverage bookkeeping in the verifier
 * and the search lives on these, so union / subset / popcount are word-wise.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sg {

using Vertex = std::uint32_t;

class VertexSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  void set(Vertex v) noexcept { words_[v / word_bits] |= Word{1} << (v % word_bits); }
  void reset(Vertex v) noexcept { words_[v / word_bits] &= ~(Word{1} << (v % word_bits)); }
  bool test(Vertex v) const noexcept { return (words_[v / word_bits] >> (v % word_bits)) & 1U; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }
  bool any() const noexcept { return !none(); }
  bool all() const noexcept { return count() == universe_; }

  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// this := this \ o
  VertexSet& subtract(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// |this \ o|
  std::size_t count_minus(const VertexSet& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~o.words_[i]));
    return c;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w) {
        const auto b = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<Vertex>(i * word_bits + b));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  const std::vector<Word>& words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  void trim() noexcept {
    if (universe_ % word_bits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % word_bits)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : s.words()) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace sg

#endif
