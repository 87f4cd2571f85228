#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wiretap {

// Thrown when materializing a product alphabet would exceed a configured cap.
// Callers must raise their cap explicitly; nothing is ever truncated silently.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace limits {
// product-alphabet tables (joints, observation channels, leakage tables)
inline constexpr std::uint64_t kTableEntries = std::uint64_t{1} << 24;
// number of source sequences a binning may cover
inline constexpr std::uint64_t kBinningSequences = std::uint64_t{1} << 20;
// number of tapped subsets enumerated at once
inline constexpr std::uint64_t kSubsets = 100000;
}  // namespace limits

// Neumaier-compensated accumulator. Exact enumeration makes rounding the only
// error source in this library, so probability mass is accumulated this way.
class KahanSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Probability vector over a finite alphabet {0, ..., size-1}.
// Entries are nonnegative and sum to 1 within 1e-12.
class Distribution {
 public:
  explicit Distribution(Eigen::VectorXd probs);

  static Distribution uniform(int size);
  static Distribution point_mass(int size, int symbol);
  static Distribution bernoulli(double p_one);  // over {0,1}, P(1) = p_one

  int size() const { return static_cast<int>(probs_.size()); }
  double operator()(int i) const { return probs_(i); }
  const Eigen::VectorXd& probs() const { return probs_; }
  double min_prob() const { return probs_.minCoeff(); }
  bool strictly_positive() const { return min_prob() > 0.0; }

 private:
  Eigen::VectorXd probs_;
};

// Row-stochastic conditional law: entry (x, y) is p(y | x).
class Channel {
 public:
  explicit Channel(Eigen::MatrixXd rows);

  static Channel identity(int size);
  static Channel bsc(double flip);
  // output alphabet = input alphabet plus a final erasure symbol
  static Channel erasure(int input_size, double erase_prob);
  // single constant output; an erasure channel with erasure probability one
  static Channel constant(int input_size);

  int input_size() const { return static_cast<int>(rows_.rows()); }
  int output_size() const { return static_cast<int>(rows_.cols()); }
  double operator()(int x, int y) const { return rows_(x, y); }
  const Eigen::MatrixXd& rows() const { return rows_; }
  Distribution row(int x) const { return Distribution(rows_.row(x).transpose()); }

 private:
  Eigen::MatrixXd rows_;
};

// Joint law over a product alphabet, stored flat. Axis 0 is the most
// significant digit of the flat index, so enumeration is lexicographic with
// the most significant symbol first.
class JointDistribution {
 public:
  JointDistribution(std::vector<int> axis_sizes, Eigen::VectorXd probs);

  int rank() const { return static_cast<int>(axis_sizes_.size()); }
  const std::vector<int>& axis_sizes() const { return axis_sizes_; }
  std::uint64_t table_size() const { return static_cast<std::uint64_t>(probs_.size()); }
  double operator()(std::uint64_t flat) const { return probs_(static_cast<Eigen::Index>(flat)); }
  const Eigen::VectorXd& probs() const { return probs_; }

  std::uint64_t flat_index(const std::vector<int>& symbols) const;
  void unflatten(std::uint64_t flat, std::vector<int>& symbols) const;

  // Marginal over the listed axes, kept in the listed order.
  JointDistribution marginal(const std::vector<int>& axes) const;
  Distribution marginal_distribution(int axis) const;
  Distribution flattened() const { return Distribution(probs_); }

 private:
  std::vector<int> axis_sizes_;
  Eigen::VectorXd probs_;
};

// i.i.d. n-fold product of a base law; sequences enumerate lexicographically,
// first symbol most significant.
class SequenceDistribution {
 public:
  SequenceDistribution(Distribution base, int n);

  int n() const { return n_; }
  const Distribution& base() const { return base_; }
  std::uint64_t sequence_count() const;
  double prob(std::uint64_t flat) const;
  Distribution materialize(std::uint64_t cap = limits::kTableEntries) const;

 private:
  Distribution base_;
  int n_;
};

SequenceDistribution iid_extend(const Distribution& base, int n);
SequenceDistribution iid_extend(const JointDistribution& base, int n);

// q(y) = sum_x p(x) W(y|x)
Distribution pushforward(const Distribution& p, const Channel& w);

// Joint over (X, Y) with p(x, y) = p(x) W(y|x).
JointDistribution joint_from(const Distribution& p, const Channel& w);

// Appends a new final axis fed from `source_axis` through `w`:
// p(..., z) = p(...) * W(z | symbol at source_axis).
JointDistribution extend_with_channel(const JointDistribution& joint, int source_axis,
                                      const Channel& w,
                                      std::uint64_t cap = limits::kTableEntries);

// n-fold memoryless extension of a channel, rows indexed by input sequences.
Channel product_channel(const Channel& w, int n, std::uint64_t cap = limits::kTableEntries);

// p(u,x,y,v) = p(u,x) p(y|x) p(v|x); axes ordered (U, X, Y, V).
JointDistribution markov_joint(const JointDistribution& p_ux, const Channel& main,
                               const Channel& wtp);

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap);

}  // namespace wiretap
