#pragma once

#include <cstddef>
#include <vector>

namespace zesprit {

// Eigenvalue-based order selection. Inputs are spectra sorted non-increasing;
// entries are 0-based, so first[k] is the ratio for eigenvalue k+1 in the
// usual 1-based notation.

struct CriterionProfile {
  std::vector<double> tail_means;  // A_k: mean of eigenvalues k..M, length M
  std::vector<double> first;       // d(k) = lambda_k / A_{k+1}, length M-1
  std::vector<double> second;      // dd(k) = d(k) / d(k+1), length M-2
};

enum class Branch { argmax_is_one, noise_a, signal_b };

struct OrderDecision {
  std::size_t k_hat = 1;  // argmax of the second criterion, 1-based
  std::size_t K_hat = 1;  // estimated signal count, >= 1
  Branch branch = Branch::argmax_is_one;
  CriterionProfile profile;
};

std::vector<double> tail_means(const std::vector<double>& eigs);
std::vector<double> first_criterion(const std::vector<double>& eigs);
std::vector<double> second_criterion(const std::vector<double>& first);

// Double-criterion decision rule. k_hat maximizes the second criterion over
// k in [1, search_max] (ties toward the smallest k); search_max = 0 selects
// the default floor(M/2) - 2. k_hat = 1 answers 1 outright; otherwise the
// first criterion decides whether eigenvalue k_hat belongs to the noise floor
// (K = k_hat - 1) or to the signal cluster (K = k_hat).
OrderDecision estimate_order_double(const std::vector<double>& eigs,
                                    std::size_t search_max = 0);

// Information-criterion baselines over k in [0, M-1] with L snapshots.
// Both compare the geometric and arithmetic means of the trailing eigenvalues;
// they assume a flat (white) noise floor, which is exactly what the zoom
// pipeline's output violates.
std::size_t estimate_order_aic(const std::vector<double>& eigs, std::size_t snapshots);
std::size_t estimate_order_mdl(const std::vector<double>& eigs, std::size_t snapshots);

}  // namespace zesprit
