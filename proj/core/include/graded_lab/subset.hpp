#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace graded_lab {

/// Index of an element of a finite carrier (ring, module, group).
using Elem = std::uint32_t;

/// A subset of a finite carrier {0, ..., universe-1}, stored as a bitset.
class Subset {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Elem;
    using difference_type = std::ptrdiff_t;
    using pointer = const Elem*;
    using reference = Elem;

    const_iterator() = default;
    const_iterator(const Subset* s, std::size_t pos) : set_(s), pos_(pos) { seek(); }

    Elem operator*() const { return static_cast<Elem>(pos_); }
    const_iterator& operator++() {
      ++pos_;
      seek();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    void seek();
    const Subset* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  Subset() = default;
  explicit Subset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  Subset(std::size_t universe, std::initializer_list<Elem> members) : Subset(universe) {
    for (Elem e : members) insert(e);
  }
  template <typename Range>
  static Subset of(std::size_t universe, const Range& members) {
    Subset s(universe);
    for (auto e : members) s.insert(static_cast<Elem>(e));
    return s;
  }
  static Subset full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  bool contains(Elem e) const { return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1u); }
  void insert(Elem e) { words_[e >> 6] |= (std::uint64_t{1} << (e & 63)); }
  void erase(Elem e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  std::size_t size() const;
  bool empty() const;

  bool is_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset& operator|=(const Subset& o);
  Subset& operator&=(const Subset& o);
  Subset& operator-=(const Subset& o);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  Subset complement() const;

  bool operator==(const Subset& o) const = default;

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, universe_); }
  std::vector<Elem> members() const { return {begin(), end()}; }

  /// Smallest member, or universe() when empty.
  Elem first() const { return *begin(); }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Report order: cardinality first, then the sorted member lists lexicographically.
bool canonical_less(const Subset& a, const Subset& b);

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept;
};

inline void Subset::const_iterator::seek() {
  const std::size_t n = set_->universe_;
  while (pos_ < n) {
    std::uint64_t w = set_->words_[pos_ >> 6] >> (pos_ & 63);
    if (w != 0) {
      pos_ += static_cast<std::size_t>(std::countr_zero(w));
      if (pos_ > n) pos_ = n;
      return;
    }
    pos_ = (pos_ | 63) + 1;
  }
  pos_ = n;
}

}  // namespace graded_lab
