#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace effalg {

/// Index of an element in the declared carrier. Labels are display-only.
using Element = unsigned;

inline constexpr std::size_t kMaxCarrier = 64;

/// A subset of a carrier of at most 64 elements, stored as one machine word.
class Subset {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    const_iterator() = default;
    explicit const_iterator(std::uint64_t rest) : rest_(rest) {}

    Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
    const_iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  Subset() = default;

  Subset(std::size_t carrier_n, std::uint64_t bits) : bits_(bits), n_(carrier_n) {
    if (carrier_n > kMaxCarrier) throw std::invalid_argument("carrier larger than 64 elements");
    if ((bits & ~mask(carrier_n)) != 0) throw std::invalid_argument("subset bit outside carrier");
  }

  Subset(std::size_t carrier_n, std::initializer_list<Element> elems) : Subset(carrier_n, 0) {
    for (Element e : elems) insert(e);
  }

  static Subset empty(std::size_t carrier_n) { return Subset(carrier_n, 0); }
  static Subset full(std::size_t carrier_n) { return Subset(carrier_n, mask(carrier_n)); }
  static Subset single(std::size_t carrier_n, Element x) { return Subset(carrier_n, {x}); }

  static constexpr std::uint64_t mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  }

  std::size_t carrier_size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == mask(n_); }

  bool contains(Element x) const { return x < n_ && ((bits_ >> x) & 1U) != 0; }

  void insert(Element x) {
    if (x >= n_) throw std::out_of_range("element outside carrier");
    bits_ |= std::uint64_t{1} << x;
  }
  void erase(Element x) {
    if (x < n_) bits_ &= ~(std::uint64_t{1} << x);
  }

  bool is_subset_of(const Subset& other) const {
    require_same_carrier(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const Subset& other) const {
    require_same_carrier(other);
    return (bits_ & other.bits_) != 0;
  }

  /// Smallest element index; undefined for the empty set.
  Element first() const { return static_cast<Element>(std::countr_zero(bits_)); }

  const_iterator begin() const { return const_iterator(bits_); }
  const_iterator end() const { return const_iterator(0); }

  std::vector<Element> elements() const { return {begin(), end()}; }

  Subset& operator|=(const Subset& o) {
    require_same_carrier(o);
    bits_ |= o.bits_;
    return *this;
  }
  Subset& operator&=(const Subset& o) {
    require_same_carrier(o);
    bits_ &= o.bits_;
    return *this;
  }
  Subset& operator-=(const Subset& o) {
    require_same_carrier(o);
    bits_ &= ~o.bits_;
    return *this;
  }

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  bool operator==(const Subset&) const = default;

  void require_same_carrier(const Subset& other) const {
    if (n_ != other.n_) throw std::invalid_argument("subsets over different carriers");
  }

 private:
  std::uint64_t bits_ = 0;
  std::size_t n_ = 0;
};

/// Renders "{g,1}" with members in declared-label order.
std::string format_subset(const Subset& s, const std::vector<std::string>& labels);

}  // namespace effalg
