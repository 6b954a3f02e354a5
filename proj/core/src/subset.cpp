#include "graded_lab/subset.hpp"

#include <algorithm>

namespace graded_lab {

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

std::size_t Subset::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Subset::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Subset::is_subset_of(const Subset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~o) return false;
  }
  return true;
}

bool Subset::intersects(const Subset& other) const {
  std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

Subset& Subset::operator|=(const Subset& o) {
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
  return *this;
}

Subset& Subset::operator-=(const Subset& o) {
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

Subset Subset::complement() const { return full(universe_) - *this; }

bool canonical_less(const Subset& a, const Subset& b) {
  auto sa = a.size();
  auto sb = b.size();
  if (sa != sb) return sa < sb;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return false;
}

std::size_t SubsetHash::operator()(const Subset& s) const noexcept {
  std::size_t h = s.universe() * 0x9e3779b97f4a7c15ULL;
  for (auto w : s.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace graded_lab
