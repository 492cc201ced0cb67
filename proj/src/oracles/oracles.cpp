#include "tensorhn/oracles/oracles.hpp"

#include <algorithm>
#include <limits>

#include "tensorhn/error.hpp"

namespace tensorhn::oracle {

std::vector<Rational> pava(std::span<const Rational> weights, std::span<const Rational> values) {
  struct Block {
    Rational weight;
    Rational mean;
    std::size_t count;
  };
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < values.size(); ++i) {
    blocks.push_back({weights[i], values[i], 1});
    while (blocks.size() >= 2 && blocks[blocks.size() - 2].mean > blocks.back().mean) {
      Block top = blocks.back();
      blocks.pop_back();
      Block& prev = blocks.back();
      const Rational w = prev.weight + top.weight;
      prev.mean = (prev.weight * prev.mean + top.weight * top.mean) / w;
      prev.weight = w;
      prev.count += top.count;
    }
  }
  std::vector<Rational> fit;
  for (const auto& blk : blocks) fit.insert(fit.end(), blk.count, blk.mean);
  return fit;
}

Rational rightmu_bruteforce(std::span<const int> ranks, std::span<const Rational> n, int s,
                            const MultiIndexPredicate& nonzero) {
  const int r = ranks.back();
  const int levels = static_cast<int>(ranks.size());
  std::vector<Rational> gamma(static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < n.size(); ++i) {
    const int k = ranks[i];
    for (int j = 1; j <= r; ++j) gamma[static_cast<std::size_t>(j - 1)] += n[i] * Rational(j <= k ? k - r : k);
  }
  std::vector<int> idx(static_cast<std::size_t>(s), 1);
  bool have = false;
  Rational best;
  for (;;) {
    if (nonzero(idx)) {
      Rational sum;
      for (int i : idx) sum += gamma[static_cast<std::size_t>(ranks[static_cast<std::size_t>(i - 1)] - 1)];
      if (!have || sum < best) best = sum;
      have = true;
    }
    int pos = s - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == levels) idx[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
  }
  if (!have) throw Error(ErrorKind::DegenerateTensor, "no nonzero multi-index");
  return best;
}

int multiplicity_by_derivatives(const BinaryForm& f, const Direction& v) {
  const bool along_x0 = !v.q.is_zero();
  BinaryForm cur = f;
  int k = 0;
  while (cur.evaluate(v).is_zero()) {
    if (cur.s() == 0) return std::numeric_limits<int>::max();  // f == 0
    const int s = cur.s();
    std::vector<Poly> d(static_cast<std::size_t>(s));
    for (int i = 0; i <= s; ++i) {
      if (along_x0 && i > 0) d[static_cast<std::size_t>(i - 1)] = cur.coeff(i).scaled(Rational(i));
      if (!along_x0 && i < s) d[static_cast<std::size_t>(i)] = cur.coeff(i).scaled(Rational(s - i));
    }
    cur = BinaryForm(std::move(d));
    ++k;
  }
  return k;
}

}  // namespace tensorhn::oracle
