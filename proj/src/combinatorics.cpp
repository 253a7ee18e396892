#include "cmhopf/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cmhopf {

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("a composition has at least one part");
  }
  for (int p : parts_) {
    if (p < 1) {
      throw std::invalid_argument("composition parts must be positive");
    }
    weight_ += p;
  }
}

Composition Composition::slice(std::size_t first, std::size_t last) const {
  return Composition(std::vector<int>(parts_.begin() + first, parts_.begin() + last));
}

Composition Composition::concat(Composition const& other) const {
  std::vector<int> v = parts_;
  v.insert(v.end(), other.parts_.begin(), other.parts_.end());
  return Composition(std::move(v));
}

int Composition::suffix_sum(std::size_t i) const {
  return std::accumulate(parts_.begin() + i, parts_.end(), 0);
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) {
      s += ",";
    }
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::strong_ordering Composition::operator<=>(Composition const& other) const noexcept {
  if (auto c = parts_.size() <=> other.parts_.size(); c != 0) {
    return c;
  }
  return parts_ <=> other.parts_;
}

Composition concat(std::span<Composition const> blocks) {
  if (blocks.empty()) {
    throw std::invalid_argument("cannot concatenate zero blocks");
  }
  std::vector<int> v;
  for (auto const& b : blocks) {
    v.insert(v.end(), b.parts().begin(), b.parts().end());
  }
  return Composition(std::move(v));
}

std::vector<Composition> enumerate_compositions(int n) {
  if (n < 1) {
    throw std::invalid_argument("enumerate_compositions requires n >= 1");
  }
  // Bit i of mask set means a cut after position i of the all-ones word.
  std::vector<Composition> out;
  std::uint64_t const      masks = std::uint64_t{1} << (n - 1);
  out.reserve(masks);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::vector<int> parts;
    int              run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

  void splits_rec(Composition const&                     c,
                  std::size_t                            start,
                  std::size_t                            remaining,
                  std::vector<Composition>&              current,
                  std::vector<std::vector<Composition>>& out) {
    std::size_t const s = c.length();
    if (remaining == 1) {
      current.push_back(c.slice(start, s));
      out.push_back(current);
      current.pop_back();
      return;
    }
    // leave at least remaining - 1 parts for the later blocks
    for (std::size_t end = start + 1; end + remaining - 1 <= s; ++end) {
      current.push_back(c.slice(start, end));
      splits_rec(c, end, remaining - 1, current, out);
      current.pop_back();
    }
  }

}  // namespace

std::vector<std::vector<Composition>> splits_into(Composition const& c, std::size_t t) {
  std::vector<std::vector<Composition>> out;
  if (t < 1 || t > c.length()) {
    return out;
  }
  std::vector<Composition> current;
  splits_rec(c, 0, t, current, out);
  return out;
}

std::vector<std::vector<Composition>> all_splits(Composition const& c) {
  std::vector<std::vector<Composition>> out;
  for (std::size_t t = 1; t <= c.length(); ++t) {
    auto part = splits_into(c, t);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::uint64_t shuffle_coefficient(std::span<Composition const> ws,
                                  Composition const&           target) {
  std::size_t total = 0;
  for (auto const& w : ws) {
    total += w.length();
  }
  if (ws.empty() || total != target.length()) {
    return 0;
  }
  // DP over prefix positions: ways[state] where state records how many
  // letters of each word have been consumed. States are encoded in a mixed
  // radix so that the table is a flat vector.
  std::vector<std::size_t> radix(ws.size());
  std::size_t              states = 1;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    radix[i] = states;
    states *= ws[i].length() + 1;
  }
  std::vector<std::uint64_t> ways(states, 0);
  ways[0] = 1;
  std::vector<std::size_t> pos(ws.size());
  for (std::size_t state = 0; state < states; ++state) {
    if (ways[state] == 0) {
      continue;
    }
    std::size_t rem      = state;
    std::size_t consumed = 0;
    for (std::size_t i = ws.size(); i-- > 0;) {
      pos[i] = rem / radix[i];
      rem %= radix[i];
      consumed += pos[i];
    }
    if (consumed == target.length()) {
      continue;
    }
    int const next = target[consumed];
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (pos[i] < ws[i].length() && ws[i][pos[i]] == next) {
        ways[state + radix[i]] += ways[state];
      }
    }
  }
  return ways[states - 1];
}

namespace {

  void interleave(std::vector<int> const& a,
                  std::size_t             i,
                  std::vector<int> const& b,
                  std::size_t             j,
                  std::vector<int>&       current,
                  std::map<Composition, std::uint64_t>& out) {
    if (i == a.size() && j == b.size()) {
      ++out[Composition(current)];
      return;
    }
    if (i < a.size()) {
      current.push_back(a[i]);
      interleave(a, i + 1, b, j, current, out);
      current.pop_back();
    }
    if (j < b.size()) {
      current.push_back(b[j]);
      interleave(a, i, b, j + 1, current, out);
      current.pop_back();
    }
  }

}  // namespace

std::map<Composition, std::uint64_t> shuffle_product(Composition const& a,
                                                     Composition const& b) {
  std::map<Composition, std::uint64_t> out;
  std::vector<int>                     current;
  current.reserve(a.length() + b.length());
  interleave(a.vec(), 0, b.vec(), 0, current, out);
  return out;
}

std::uint64_t binomial(long m, long t) {
  if (t < 0 || m < 0 || t > m) {
    return 0;
  }
  t = std::min(t, m - t);
  std::uint64_t r = 1;
  for (long i = 1; i <= t; ++i) {
    // r * (m - t + i) is divisible by i at every step
    r = r * static_cast<std::uint64_t>(m - t + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

Integer composition_factorial(Composition const& c) {
  Integer r = 1;
  for (int p : c.parts()) {
    r *= factorial(static_cast<unsigned>(p));
  }
  return r;
}

Integer multinomial(Composition const& c) {
  return factorial(static_cast<unsigned>(c.weight())) / composition_factorial(c);
}

bool table_order_less(Composition const& a, Composition const& b) {
  if (a.length() != b.length()) {
    return a.length() < b.length();
  }
  if (a.length() <= 2) {
    return a.vec() < b.vec();
  }
  std::vector<int> sa = a.vec();
  std::vector<int> sb = b.vec();
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    return sa < sb;
  }
  return a.vec() < b.vec();
}

}  // namespace cmhopf
