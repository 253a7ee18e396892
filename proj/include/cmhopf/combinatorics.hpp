#ifndef CMHOPF_COMBINATORICS_HPP
#define CMHOPF_COMBINATORICS_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rational.hpp"

namespace cmhopf {

// A nonempty sequence of positive integers (n_1, ..., n_s).
//
// Ordering is the canonical one used throughout the library: ascending
// length, then lexicographic on the parts.
class Composition {
 public:
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  std::span<int const> parts() const noexcept { return parts_; }
  std::vector<int> const& vec() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  int weight() const noexcept { return weight_; }
  std::size_t length() const noexcept { return parts_.size(); }

  // parts_[first, last)
  Composition slice(std::size_t first, std::size_t last) const;
  Composition concat(Composition const& other) const;

  // n_i + n_{i+1} + ... + n_s for 0-based i; 0 for i == length().
  int suffix_sum(std::size_t i) const;

  std::string to_string() const;

  bool operator==(Composition const& other) const noexcept {
    return parts_ == other.parts_;
  }
  std::strong_ordering operator<=>(Composition const& other) const noexcept;

 private:
  std::vector<int> parts_;
  int              weight_ = 0;
};

inline int weight(Composition const& c) noexcept { return c.weight(); }
inline std::size_t length(Composition const& c) noexcept { return c.length(); }

Composition concat(std::span<Composition const> blocks);

// All 2^(n-1) compositions of n in canonical order. Throws
// std::invalid_argument for n < 1.
std::vector<Composition> enumerate_compositions(int n);

// All ways to cut c into t nonempty contiguous blocks, ordered by the cut
// positions. Empty when t is out of [1, length(c)].
std::vector<std::vector<Composition>> splits_into(Composition const& c,
                                                  std::size_t        t);

// Every split of c, over all t.
std::vector<std::vector<Composition>> all_splits(Composition const& c);

// Number of interleavings of the words in ws producing target.
std::uint64_t shuffle_coefficient(std::span<Composition const> ws,
                                  Composition const&           target);

std::map<Composition, std::uint64_t> shuffle_product(Composition const& a,
                                                     Composition const& b);

// C^t_m, zero when t > m or t < 0.
std::uint64_t binomial(long m, long t);

// n! / (n_1! ... n_s!) for n = weight(c).
Integer multinomial(Composition const& c);

// n_1! ... n_s!
Integer composition_factorial(Composition const& c);

// Row order of the coefficient tables: ascending length; pairs are then
// lexicographic, longer sequences are grouped by their sorted multiset of
// parts and lexicographic within a group.
bool table_order_less(Composition const& a, Composition const& b);

}  // namespace cmhopf

#endif  // CMHOPF_COMBINATORICS_HPP
