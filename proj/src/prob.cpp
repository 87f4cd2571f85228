#include "wiretap/prob.hpp"

#include <algorithm>
#include <cmath>

namespace wiretap {

namespace {

constexpr double kMassTol = 1e-12;

void check_mass(const Eigen::VectorXd& v, const char* what) {
  if (v.size() == 0) {
    throw std::invalid_argument(std::string(what) + ": empty alphabet");
  }
  KahanSum s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!(v(i) >= 0.0)) {  // catches negatives and NaN
      throw std::invalid_argument(std::string(what) + ": negative or non-finite entry");
    }
    s.add(v(i));
  }
  if (std::abs(s.value() - 1.0) > kMassTol) {
    throw std::invalid_argument(std::string(what) + ": mass " + std::to_string(s.value()) +
                                " not within 1e-12 of 1");
  }
}

}  // namespace

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) {
      throw ResourceLimitError("product alphabet size " + std::to_string(base) + "^" +
                               std::to_string(exp) + " exceeds cap " + std::to_string(cap));
    }
    r *= base;
  }
  if (r > cap) {
    throw ResourceLimitError("product alphabet size exceeds cap " + std::to_string(cap));
  }
  return r;
}

Distribution::Distribution(Eigen::VectorXd probs) : probs_(std::move(probs)) {
  check_mass(probs_, "Distribution");
}

Distribution Distribution::uniform(int size) {
  return Distribution(Eigen::VectorXd::Constant(size, 1.0 / size));
}

Distribution Distribution::point_mass(int size, int symbol) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(size);
  v(symbol) = 1.0;
  return Distribution(std::move(v));
}

Distribution Distribution::bernoulli(double p_one) {
  Eigen::VectorXd v(2);
  v << 1.0 - p_one, p_one;
  return Distribution(std::move(v));
}

Channel::Channel(Eigen::MatrixXd rows) : rows_(std::move(rows)) {
  if (rows_.rows() == 0 || rows_.cols() == 0) {
    throw std::invalid_argument("Channel: empty alphabet");
  }
  for (Eigen::Index x = 0; x < rows_.rows(); ++x) {
    check_mass(rows_.row(x).transpose(), "Channel row");
  }
}

Channel Channel::identity(int size) {
  return Channel(Eigen::MatrixXd::Identity(size, size));
}

Channel Channel::bsc(double flip) {
  Eigen::MatrixXd m(2, 2);
  m << 1.0 - flip, flip, flip, 1.0 - flip;
  return Channel(std::move(m));
}

Channel Channel::erasure(int input_size, double erase_prob) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(input_size, input_size + 1);
  for (int x = 0; x < input_size; ++x) {
    m(x, x) = 1.0 - erase_prob;
    m(x, input_size) = erase_prob;
  }
  return Channel(std::move(m));
}

Channel Channel::constant(int input_size) {
  return Channel(Eigen::MatrixXd::Ones(input_size, 1));
}

JointDistribution::JointDistribution(std::vector<int> axis_sizes, Eigen::VectorXd probs)
    : axis_sizes_(std::move(axis_sizes)), probs_(std::move(probs)) {
  if (axis_sizes_.empty()) {
    throw std::invalid_argument("JointDistribution: no axes");
  }
  std::uint64_t total = 1;
  for (int s : axis_sizes_) {
    if (s <= 0) throw std::invalid_argument("JointDistribution: nonpositive axis size");
    total *= static_cast<std::uint64_t>(s);
  }
  if (total != static_cast<std::uint64_t>(probs_.size())) {
    throw std::invalid_argument("JointDistribution: table size does not match axis sizes");
  }
  check_mass(probs_, "JointDistribution");
}

std::uint64_t JointDistribution::flat_index(const std::vector<int>& symbols) const {
  std::uint64_t flat = 0;
  for (int a = 0; a < rank(); ++a) {
    flat = flat * static_cast<std::uint64_t>(axis_sizes_[a]) +
           static_cast<std::uint64_t>(symbols[a]);
  }
  return flat;
}

void JointDistribution::unflatten(std::uint64_t flat, std::vector<int>& symbols) const {
  symbols.resize(axis_sizes_.size());
  for (int a = rank() - 1; a >= 0; --a) {
    const auto s = static_cast<std::uint64_t>(axis_sizes_[a]);
    symbols[a] = static_cast<int>(flat % s);
    flat /= s;
  }
}

JointDistribution JointDistribution::marginal(const std::vector<int>& axes) const {
  for (int a : axes) {
    if (a < 0 || a >= rank()) throw std::invalid_argument("marginal: axis out of range");
  }
  std::vector<int> out_sizes;
  out_sizes.reserve(axes.size());
  std::uint64_t out_total = 1;
  for (int a : axes) {
    out_sizes.push_back(axis_sizes_[a]);
    out_total *= static_cast<std::uint64_t>(axis_sizes_[a]);
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(out_total));
  std::vector<int> digits;
  for (std::uint64_t flat = 0; flat < table_size(); ++flat) {
    const double p = probs_(static_cast<Eigen::Index>(flat));
    if (p == 0.0) continue;
    unflatten(flat, digits);
    std::uint64_t of = 0;
    for (std::size_t k = 0; k < axes.size(); ++k) {
      of = of * static_cast<std::uint64_t>(out_sizes[k]) +
           static_cast<std::uint64_t>(digits[static_cast<std::size_t>(axes[k])]);
    }
    out(static_cast<Eigen::Index>(of)) += p;
  }
  return JointDistribution(std::move(out_sizes), std::move(out));
}

Distribution JointDistribution::marginal_distribution(int axis) const {
  return marginal({axis}).flattened();
}

SequenceDistribution::SequenceDistribution(Distribution base, int n)
    : base_(std::move(base)), n_(n) {
  if (n < 1) throw std::invalid_argument("SequenceDistribution: n must be >= 1");
}

std::uint64_t SequenceDistribution::sequence_count() const {
  std::uint64_t r = 1;
  for (int i = 0; i < n_; ++i) r *= static_cast<std::uint64_t>(base_.size());
  return r;
}

double SequenceDistribution::prob(std::uint64_t flat) const {
  double p = 1.0;
  const auto k = static_cast<std::uint64_t>(base_.size());
  for (int i = 0; i < n_; ++i) {
    p *= base_(static_cast<int>(flat % k));
    flat /= k;
  }
  return p;
}

Distribution SequenceDistribution::materialize(std::uint64_t cap) const {
  const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(base_.size()), n_, cap);
  Eigen::VectorXd out(static_cast<Eigen::Index>(total));
  for (std::uint64_t flat = 0; flat < total; ++flat) {
    out(static_cast<Eigen::Index>(flat)) = prob(flat);
  }
  return Distribution(std::move(out));
}

SequenceDistribution iid_extend(const Distribution& base, int n) {
  return SequenceDistribution(base, n);
}

SequenceDistribution iid_extend(const JointDistribution& base, int n) {
  return SequenceDistribution(base.flattened(), n);
}

Distribution pushforward(const Distribution& p, const Channel& w) {
  if (p.size() != w.input_size()) {
    throw std::invalid_argument("pushforward: alphabet mismatch");
  }
  return Distribution(w.rows().transpose() * p.probs());
}

JointDistribution joint_from(const Distribution& p, const Channel& w) {
  if (p.size() != w.input_size()) {
    throw std::invalid_argument("joint_from: alphabet mismatch");
  }
  const int nx = p.size();
  const int ny = w.output_size();
  Eigen::VectorXd out(static_cast<Eigen::Index>(nx) * ny);
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      out(static_cast<Eigen::Index>(x) * ny + y) = p(x) * w(x, y);
    }
  }
  return JointDistribution({nx, ny}, std::move(out));
}

JointDistribution extend_with_channel(const JointDistribution& joint, int source_axis,
                                      const Channel& w, std::uint64_t cap) {
  if (source_axis < 0 || source_axis >= joint.rank()) {
    throw std::invalid_argument("extend_with_channel: axis out of range");
  }
  if (joint.axis_sizes()[static_cast<std::size_t>(source_axis)] != w.input_size()) {
    throw std::invalid_argument("extend_with_channel: axis size does not match channel input");
  }
  const auto nz = static_cast<std::uint64_t>(w.output_size());
  if (joint.table_size() > cap / nz) {
    throw ResourceLimitError("extend_with_channel: table exceeds cap");
  }
  std::vector<int> sizes = joint.axis_sizes();
  sizes.push_back(w.output_size());
  Eigen::VectorXd out(static_cast<Eigen::Index>(joint.table_size() * nz));
  std::vector<int> digits;
  for (std::uint64_t flat = 0; flat < joint.table_size(); ++flat) {
    joint.unflatten(flat, digits);
    const int x = digits[static_cast<std::size_t>(source_axis)];
    const double p = joint(flat);
    for (std::uint64_t z = 0; z < nz; ++z) {
      out(static_cast<Eigen::Index>(flat * nz + z)) = p * w(x, static_cast<int>(z));
    }
  }
  return JointDistribution(std::move(sizes), std::move(out));
}

Channel product_channel(const Channel& w, int n, std::uint64_t cap) {
  const std::uint64_t rows = checked_pow(static_cast<std::uint64_t>(w.input_size()), n, cap);
  const std::uint64_t cols = checked_pow(static_cast<std::uint64_t>(w.output_size()), n, cap);
  if (rows > cap / cols) {
    throw ResourceLimitError("product_channel: table exceeds cap");
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  const auto kx = static_cast<std::uint64_t>(w.input_size());
  const auto ky = static_cast<std::uint64_t>(w.output_size());
  for (std::uint64_t xf = 0; xf < rows; ++xf) {
    for (std::uint64_t yf = 0; yf < cols; ++yf) {
      double p = 1.0;
      std::uint64_t xr = xf, yr = yf;
      for (int i = 0; i < n; ++i) {
        p *= w(static_cast<int>(xr % kx), static_cast<int>(yr % ky));
        xr /= kx;
        yr /= ky;
      }
      m(static_cast<Eigen::Index>(xf), static_cast<Eigen::Index>(yf)) = p;
    }
  }
  return Channel(std::move(m));
}

JointDistribution markov_joint(const JointDistribution& p_ux, const Channel& main,
                               const Channel& wtp) {
  if (p_ux.rank() != 2) {
    throw std::invalid_argument("markov_joint: p_UX must have two axes");
  }
  const int nu = p_ux.axis_sizes()[0];
  const int nx = p_ux.axis_sizes()[1];
  if (nx != main.input_size() || nx != wtp.input_size()) {
    throw std::invalid_argument("markov_joint: channel input size does not match X axis");
  }
  const int ny = main.output_size();
  const int nv = wtp.output_size();
  Eigen::VectorXd out(static_cast<Eigen::Index>(nu) * nx * ny * nv);
  Eigen::Index flat = 0;
  for (int u = 0; u < nu; ++u) {
    for (int x = 0; x < nx; ++x) {
      const double pux = p_ux(static_cast<std::uint64_t>(u) * nx + x);
      for (int y = 0; y < ny; ++y) {
        const double pxy = pux * main(x, y);
        for (int v = 0; v < nv; ++v) {
          out(flat++) = pxy * wtp(x, v);
        }
      }
    }
  }
  return JointDistribution({nu, nx, ny, nv}, std::move(out));
}

}  // namespace wiretap
