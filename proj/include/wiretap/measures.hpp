#pragma once

#include "wiretap/prob.hpp"

namespace wiretap {

// All information measures are in bits (log base 2), with 0 log 0 = 0.

double entropy(const Distribution& p);
double entropy(const JointDistribution& j);

// H_b(x) = -x log2 x - (1-x) log2(1-x); domain [0,1].
double binary_entropy(double x);

// V(p,q) = (1/2) sum_i |p_i - q_i|
double total_variation(const Distribution& p, const Distribution& q);

// D(p||q) in bits; +infinity when p puts mass outside the support of q.
double kl_divergence(const Distribution& p, const Distribution& q);

// I(A;B) = H(A) + H(B) - H(A,B) over the given disjoint axis sets.
double mutual_information(const JointDistribution& j, const std::vector<int>& axes_a,
                          const std::vector<int>& axes_b);

// I(A;B|C) = H(A,C) + H(B,C) - H(A,B,C) - H(C)
double conditional_mutual_information(const JointDistribution& j,
                                      const std::vector<int>& axes_a,
                                      const std::vector<int>& axes_b,
                                      const std::vector<int>& axes_c);

// H(X|Y) of a joint built from p(x) and p(y|x)
double conditional_entropy_input_given_output(const Distribution& p, const Channel& w);

}  // namespace wiretap
