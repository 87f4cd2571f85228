#include "wiretap/measures.hpp"

#include <cmath>
#include <limits>

namespace wiretap {

namespace {

double entropy_of(const Eigen::VectorXd& p) {
  KahanSum s;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const double pi = p(i);
    if (pi > 0.0) s.add(-pi * std::log2(pi));
  }
  const double h = s.value();
  return h < 0.0 ? 0.0 : h;  // absorb rounding at point masses
}

void check_disjoint(const JointDistribution& j, const std::vector<int>& a,
                    const std::vector<int>& b) {
  for (int x : a) {
    if (x < 0 || x >= j.rank()) throw std::invalid_argument("axis out of range");
    for (int y : b) {
      if (x == y) throw std::invalid_argument("axis sets overlap");
    }
  }
  for (int y : b) {
    if (y < 0 || y >= j.rank()) throw std::invalid_argument("axis out of range");
  }
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// rounding guard: exact identities can land a hair below zero
double clamp_tiny(double v) { return (v < 0.0 && v > -1e-12) ? 0.0 : v; }

}  // namespace

double entropy(const Distribution& p) { return entropy_of(p.probs()); }

double entropy(const JointDistribution& j) { return entropy_of(j.probs()); }

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("binary_entropy: argument outside [0,1]");
  }
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double total_variation(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("total_variation: alphabet mismatch");
  }
  KahanSum s;
  for (int i = 0; i < p.size(); ++i) s.add(std::abs(p(i) - q(i)));
  return 0.5 * s.value();
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("kl_divergence: alphabet mismatch");
  }
  KahanSum s;
  for (int i = 0; i < p.size(); ++i) {
    const double pi = p(i);
    if (pi == 0.0) continue;
    if (q(i) == 0.0) return std::numeric_limits<double>::infinity();
    s.add(pi * std::log2(pi / q(i)));
  }
  return clamp_tiny(s.value());
}

double mutual_information(const JointDistribution& j, const std::vector<int>& axes_a,
                          const std::vector<int>& axes_b) {
  check_disjoint(j, axes_a, axes_b);
  const double ha = entropy(j.marginal(axes_a));
  const double hb = entropy(j.marginal(axes_b));
  const double hab = entropy(j.marginal(concat(axes_a, axes_b)));
  return clamp_tiny(ha + hb - hab);
}

double conditional_mutual_information(const JointDistribution& j,
                                      const std::vector<int>& axes_a,
                                      const std::vector<int>& axes_b,
                                      const std::vector<int>& axes_c) {
  check_disjoint(j, axes_a, axes_b);
  check_disjoint(j, axes_a, axes_c);
  check_disjoint(j, axes_b, axes_c);
  const double hac = entropy(j.marginal(concat(axes_a, axes_c)));
  const double hbc = entropy(j.marginal(concat(axes_b, axes_c)));
  const double habc = entropy(j.marginal(concat(concat(axes_a, axes_b), axes_c)));
  const double hc = entropy(j.marginal(axes_c));
  return clamp_tiny(hac + hbc - habc - hc);
}

double conditional_entropy_input_given_output(const Distribution& p, const Channel& w) {
  const JointDistribution j = joint_from(p, w);
  return entropy(j) - entropy(j.marginal_distribution(1));
}

}  // namespace wiretap
