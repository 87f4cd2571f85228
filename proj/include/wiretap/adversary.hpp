#pragma once

#include "wiretap/prob.hpp"

#include <string>
#include <vector>

namespace wiretap {

// A tapped subset S of codeword positions, 1-based and strictly increasing.
struct SubsetSpec {
  int n = 0;
  std::vector<int> indices;

  SubsetSpec(int n_, std::vector<int> indices_);
  static SubsetSpec empty(int n) { return SubsetSpec(n, {}); }
  static SubsetSpec full(int n);

  int mu() const { return static_cast<int>(indices.size()); }
  double realized_alpha() const { return n == 0 ? 0.0 : static_cast<double>(mu()) / n; }
  bool contains(int pos) const;  // pos is 1-based
  std::string to_string() const;  // "1,3,4"; "-" for the empty subset
};

// All C(n, mu) subsets of size mu in lexicographic order of their index lists.
std::vector<SubsetSpec> enumerate_subsets(int n, int mu,
                                          std::uint64_t cap = limits::kSubsets);

std::uint64_t binomial_coefficient(int n, int k);

// mu = floor(alpha * n); the realized alpha is mu / n.
int mu_from_alpha(double alpha, int n);

enum class Tag { perfect, noisy, erased };

// One position of the wiretapper's view: a perfectly tapped X symbol, a noisy
// V symbol, or an erasure (which carries no value).
struct TappedSymbol {
  Tag tag = Tag::erased;
  int value = 0;
};

// Layout of the tagged product alphabet Z_S: tapped positions range over the
// X alphabet, untapped positions over the V alphabet (or a single erasure).
// Flat indices are mixed-radix, position 1 most significant.
class TappedAlphabet {
 public:
  TappedAlphabet(const SubsetSpec& s, int x_size, int untapped_size);

  std::uint64_t total() const { return total_; }
  const std::vector<int>& position_sizes() const { return sizes_; }
  std::uint64_t flat_index(const std::vector<int>& symbols) const;
  void unflatten(std::uint64_t flat, std::vector<int>& symbols) const;

 private:
  std::vector<int> sizes_;
  std::uint64_t total_ = 1;
};

// Conditional law of Z_S given X^n: tapped positions copy the input symbol,
// the rest pass through `wtp`. Rows are indexed by input sequences.
Channel observation_channel(const SubsetSpec& s, const Channel& wtp,
                            std::uint64_t cap = limits::kTableEntries);

// Wiretap-II variant: tapped positions copy the input, the rest are erased.
Channel wiretap2_observation_channel(const SubsetSpec& s, int x_size,
                                     std::uint64_t cap = limits::kTableEntries);

// Decodes a flat Z_S index into tagged per-position symbols. `erased` selects
// between the noisy view (observation_channel) and the wiretap-II view.
std::vector<TappedSymbol> decode_observation(const SubsetSpec& s, int x_size, int v_size,
                                             std::uint64_t flat, bool erased = false);

}  // namespace wiretap
