#include "cmhopf/coefficients.hpp"

#include <stdexcept>
#include <utility>

#include "memo.hpp"

namespace cmhopf {

namespace {

  void require_blocks(BlockSequence const& blocks) {
    if (blocks.empty()) {
      throw std::invalid_argument("block sequence must be nonempty");
    }
  }

  void require_positive(int k, char const* what) {
    if (k < 1) {
      throw std::invalid_argument(std::string(what) + " must be >= 1");
    }
  }

  using detail::Memo;

  Memo<std::pair<std::vector<int>, int>, Rational>& alpha_memo() {
    static Memo<std::pair<std::vector<int>, int>, Rational> memo;
    return memo;
  }

  Memo<std::pair<std::vector<int>, int>, Rational>& u_memo() {
    static Memo<std::pair<std::vector<int>, int>, Rational> memo;
    return memo;
  }

  Memo<std::vector<int>, Rational>& beta_memo() {
    static Memo<std::vector<int>, Rational> memo;
    return memo;
  }

  Composition block_weights(BlockSequence const& blocks) {
    std::vector<int> w;
    w.reserve(blocks.size());
    for (auto const& b : blocks) {
      w.push_back(b.weight());
    }
    return Composition(std::move(w));
  }

}  // namespace

Rational coeff_A(BlockSequence const& blocks) {
  require_blocks(blocks);
  Integer den = 1;
  for (auto const& b : blocks) {
    den *= factorial(static_cast<unsigned>(b.length()));
    den *= b.weight() + 1;
  }
  return Rational(Integer(1), den);
}

Integer coeff_B(BlockSequence const& blocks, int k) {
  require_blocks(blocks);
  require_positive(k, "k");
  Integer     r    = binomial(k, static_cast<long>(blocks.back().length()));
  long        tail = 0;
  std::size_t i    = blocks.size() - 1;
  while (i-- > 0) {
    tail += blocks[i + 1].weight();
    r *= binomial(tail + k, static_cast<long>(blocks[i].length()));
  }
  return r;
}

Rational coeff_U(Composition const& m, int k) {
  require_positive(k, "k");
  return u_memo().get({m.vec(), k}, [&] {
    Rational sum = 0;
    for (std::size_t i = 1; i <= m.length(); ++i) {
      Integer partial = 0;
      for (auto const& split : splits_into(m, i)) {
        partial += coeff_B(split, k);
      }
      if (i % 2 == 1) {
        sum += partial;
      } else {
        sum -= partial;
      }
    }
    return sum;
  });
}

Rational alpha(Composition const& n, int m) {
  require_positive(m, "m");
  return alpha_memo().get({n.vec(), m}, [&] {
    Rational sum = 0;
    for (std::size_t t = 1; t <= n.length(); ++t) {
      auto const c = binomial(m, static_cast<long>(t));
      if (c == 0) {
        break;
      }
      Rational inner = 0;
      for (auto const& split : splits_into(n, t)) {
        inner += coeff_A(split);
      }
      sum += Rational(Integer(c)) * inner;
    }
    return sum;
  });
}

Rational beta(Composition const& n) {
  if (n.length() == 1) {
    return Rational(-1);
  }
  return beta_memo().get(n.vec(), [&] {
    std::size_t const s      = n.length() - 1;
    Composition const prefix = n.slice(0, s);
    int const         last   = n[s];
    Rational          sum    = 0;
    for (auto const& split : all_splits(prefix)) {
      sum += coeff_U(block_weights(split), last) * coeff_A(split);
    }
    return sum;
  });
}

Integer coeff_S(Composition const& c) {
  Integer r = 1;
  for (std::size_t i = 0; i < c.length(); ++i) {
    r *= c.suffix_sum(i) + 1;
  }
  return r;
}

Integer coeff_Q_closed(Composition const& c) {
  std::size_t const s = c.length();
  Integer           r = c[s - 1] + 1;
  for (std::size_t i = 1; i < s; ++i) {
    r *= c.suffix_sum(i);
  }
  return r;
}

namespace {

  // Enumerates set partitions of the positions of c as restricted growth
  // strings. A t-tuple of words together with one interleaving producing c
  // is the same thing as a surjection positions -> {1..t}; each set
  // partition into t blocks accounts for t! of those.
  void q_dual_rec(Composition const&  c,
                  std::size_t         pos,
                  int                 blocks,
                  std::vector<int>&   rgs,
                  std::vector<Rational>& by_blocks) {
    if (pos == c.length()) {
      std::vector<std::vector<int>> words(static_cast<std::size_t>(blocks));
      for (std::size_t i = 0; i < c.length(); ++i) {
        words[static_cast<std::size_t>(rgs[i])].push_back(c[i]);
      }
      Integer prod = 1;
      for (auto& w : words) {
        prod *= coeff_S(Composition(std::move(w)));
      }
      by_blocks[static_cast<std::size_t>(blocks)] += prod;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[pos] = b;
      q_dual_rec(c, pos + 1, b == blocks ? blocks + 1 : blocks, rgs, by_blocks);
    }
  }

}  // namespace

Rational coeff_Q_dual(Composition const& c) {
  std::vector<Rational> by_blocks(c.length() + 1, Rational(0));
  std::vector<int>      rgs(c.length(), 0);
  q_dual_rec(c, 0, 0, rgs, by_blocks);
  Rational sum = 0;
  for (std::size_t t = 1; t <= c.length(); ++t) {
    Rational term = by_blocks[t] * Rational(factorial(static_cast<unsigned>(t)))
                    / static_cast<long>(t);
    if (t % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Integer coeff_R(Composition const& p, int k) {
  require_positive(k, "k");
  Integer r = k;
  for (std::size_t i = 1; i < p.length(); ++i) {
    r *= p.suffix_sum(i) + k;
  }
  return r;
}

Rational coproduct_table_entry(Composition const& c) {
  if (c.length() < 2) {
    throw std::invalid_argument("coproduct table entries need length >= 2");
  }
  std::size_t const s = c.length() - 1;
  return Rational(multinomial(c)) * alpha(c.slice(0, s), c[s]);
}

Rational antipode_table_entry(Composition const& c) {
  return Rational(multinomial(c)) * beta(c);
}

}  // namespace cmhopf
