#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace toricreg {

/// Subset of the variable/ray indices {0, ..., n-1}; n <= 64.
struct IndexSet {
  std::uint64_t bits = 0;

  static IndexSet full(std::size_t n) {
    return IndexSet{n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)};
  }
  static IndexSet of(const std::vector<std::size_t>& idx) {
    IndexSet s;
    for (auto i : idx) s.insert(i);
    return s;
  }

  bool contains(std::size_t i) const { return (bits >> i) & 1U; }
  void insert(std::size_t i) { bits |= std::uint64_t{1} << i; }
  void erase(std::size_t i) { bits &= ~(std::uint64_t{1} << i); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }
  bool empty() const { return bits == 0; }
  bool subset_of(IndexSet other) const { return (bits & ~other.bits) == 0; }
  IndexSet complement(std::size_t n) const { return IndexSet{full(n).bits & ~bits}; }
  IndexSet operator|(IndexSet o) const { return IndexSet{bits | o.bits}; }
  IndexSet operator&(IndexSet o) const { return IndexSet{bits & o.bits}; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  /// Renders 1-based, e.g. "{1,3}".
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto i : indices()) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(IndexSet, IndexSet) = default;
  /// Lexicographic on sorted index lists.
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
    const auto ia = a.indices(), ib = b.indices();
    return ia <=> ib;
  }
};

}  // namespace toricreg
