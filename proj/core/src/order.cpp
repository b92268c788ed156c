#include "zesprit/order.hpp"

#include <cmath>
#include <limits>

#include "zesprit/errors.hpp"

namespace zesprit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_spectrum(const std::vector<double>& eigs, std::size_t min_len) {
  if (eigs.size() < min_len) throw config_error("eigenvalue spectrum too short");
  for (std::size_t i = 0; i + 1 < eigs.size(); ++i) {
    if (eigs[i + 1] > eigs[i]) throw data_error("eigenvalues not sorted non-increasing");
  }
  if (eigs.back() < 0.0) throw data_error("negative eigenvalue");
}

}  // namespace

std::vector<double> tail_means(const std::vector<double>& eigs) {
  check_spectrum(eigs, 1);
  const std::size_t m = eigs.size();
  std::vector<double> out(m);
  double acc = 0.0;
  for (std::size_t i = m; i-- > 0;) {
    acc += eigs[i];
    out[i] = acc / static_cast<double>(m - i);
  }
  return out;
}

std::vector<double> first_criterion(const std::vector<double>& eigs) {
  check_spectrum(eigs, 2);
  const std::vector<double> means = tail_means(eigs);
  std::vector<double> d(eigs.size() - 1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double tail = means[i + 1];
    if (tail == 0.0) {
      // Zero tail: a zero eigenvalue over it is indistinguishable from noise
      // (ratio 1); a positive one sits infinitely far above the floor.
      d[i] = (eigs[i] == 0.0) ? 1.0 : kInf;
    } else {
      d[i] = eigs[i] / tail;
    }
  }
  return d;
}

std::vector<double> second_criterion(const std::vector<double>& first) {
  if (first.size() < 2) throw config_error("first criterion too short");
  std::vector<double> dd(first.size() - 1);
  for (std::size_t i = 0; i < dd.size(); ++i) {
    const double a = first[i];
    const double b = first[i + 1];
    if (a == b) {
      dd[i] = 1.0;
    } else if (b == 0.0) {
      dd[i] = (a > 0.0) ? kInf : 1.0;
    } else if (std::isinf(b)) {
      dd[i] = 0.0;
    } else {
      dd[i] = a / b;
    }
  }
  return dd;
}

OrderDecision estimate_order_double(const std::vector<double>& eigs,
                                    std::size_t search_max) {
  const std::size_t m = eigs.size();
  if (m < 6) throw config_error("double criterion needs at least 6 eigenvalues");
  check_spectrum(eigs, 6);

  if (search_max == 0) search_max = m / 2 - 2;
  if (search_max < 1 || search_max > m - 2) throw config_error("search_max out of range");

  OrderDecision out;
  out.profile.tail_means = tail_means(eigs);
  out.profile.first = first_criterion(eigs);
  out.profile.second = second_criterion(out.profile.first);

  std::size_t best = 0;
  for (std::size_t i = 1; i < search_max; ++i) {
    if (out.profile.second[i] > out.profile.second[best]) best = i;
  }
  out.k_hat = best + 1;

  if (out.k_hat == 1) {
    out.branch = Branch::argmax_is_one;
    out.K_hat = 1;
  } else if (out.profile.first[out.k_hat - 2] > out.profile.first[out.k_hat]) {
    // Eigenvalue k_hat leans toward the floor below it: the drop happened one
    // step earlier, so it is the first noise eigenvalue.
    out.branch = Branch::noise_a;
    out.K_hat = out.k_hat - 1;
  } else {
    out.branch = Branch::signal_b;
    out.K_hat = out.k_hat;
  }
  return out;
}

namespace {

std::size_t argmin_ic(const std::vector<double>& eigs, std::size_t snapshots,
                      bool mdl) {
  check_spectrum(eigs, 2);
  if (snapshots == 0) throw config_error("snapshot count must be positive");
  const std::size_t m = eigs.size();
  const double l = static_cast<double>(snapshots);

  std::size_t best_k = 0;
  double best = kInf;
  for (std::size_t k = 0; k < m; ++k) {
    const double n_tail = static_cast<double>(m - k);
    double arith = 0.0;
    double logsum = 0.0;
    bool has_zero = false;
    for (std::size_t i = k; i < m; ++i) {
      arith += eigs[i];
      if (eigs[i] == 0.0) {
        has_zero = true;
      } else {
        logsum += std::log(eigs[i]);
      }
    }
    arith /= n_tail;

    // log of (geometric mean / arithmetic mean), <= 0. An all-zero tail is a
    // perfect fit (ratio 1); a zero inside a nonzero tail drives the ratio to
    // 0 and the criterion to +inf.
    double log_ratio;
    if (arith == 0.0) {
      log_ratio = 0.0;
    } else if (has_zero) {
      log_ratio = -kInf;
    } else {
      log_ratio = logsum / n_tail - std::log(arith);
    }

    const double kk = static_cast<double>(k);
    const double fit = -n_tail * l * log_ratio;
    const double value = mdl ? fit + 0.5 * kk * (2.0 * static_cast<double>(m) - kk) * std::log(l)
                             : 2.0 * fit + 2.0 * kk * (2.0 * static_cast<double>(m) - kk);
    if (value < best) {
      best = value;
      best_k = k;
    }
  }
  return best_k;
}

}  // namespace

std::size_t estimate_order_aic(const std::vector<double>& eigs, std::size_t snapshots) {
  return argmin_ic(eigs, snapshots, false);
}

std::size_t estimate_order_mdl(const std::vector<double>& eigs, std::size_t snapshots) {
  return argmin_ic(eigs, snapshots, true);
}

}  // namespace zesprit
