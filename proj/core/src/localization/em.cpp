#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <random>

#include "comprint/errors.hpp"
#include "comprint/hash.hpp"
#include "comprint/localization.hpp"

namespace comprint::localization {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kLog2Pi = 1.8378770664093454836;

// Cached Cholesky evaluation of one Gaussian component.
struct GaussianEval {
  Eigen::LLT<MatrixXd> llt;
  VectorXd mean;
  double log_norm = 0.0;

  void set(const VectorXd& mu, const MatrixXd& cov) {
    mean = mu;
    llt.compute(cov);
    double logdet = 0.0;
    for (int i = 0; i < cov.rows(); ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
    log_norm = -0.5 * (cov.rows() * kLog2Pi + logdet);
  }

  double log_density(const VectorXd& x) const {
    VectorXd z = llt.matrixL().solve(x - mean);
    return log_norm - 0.5 * z.squaredNorm();
  }
};

// Constrained covariance update: eigenvalues clipped from below. Keeps the
// M-step a maximizer over the floored family, so the likelihood ascent
// survives the regularization.
MatrixXd clip_eigenvalues(const MatrixXd& cov, double floor) {
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(cov);
  VectorXd ev = eig.eigenvalues().cwiseMax(floor);
  return eig.eigenvectors() * ev.asDiagonal() * eig.eigenvectors().transpose();
}

struct KmeansInit {
  std::array<VectorXd, 2> means;
  std::array<MatrixXd, 2> covs;
  std::array<double, 2> weights;
};

KmeansInit kmeans2(const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic,
                                                        Eigen::Dynamic, Eigen::RowMajor>>& X,
                   std::mt19937_64& rng, double cov_floor) {
  const int n = static_cast<int>(X.rows());
  const int d = static_cast<int>(X.cols());
  std::uniform_int_distribution<int> pick(0, n - 1);
  int i0 = pick(rng), i1 = pick(rng);
  while (i1 == i0) i1 = pick(rng);
  std::array<VectorXd, 2> centers{X.row(i0).transpose(), X.row(i1).transpose()};

  std::vector<int> assign(n, 0);
  for (int iter = 0; iter < 25; ++iter) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      double d0 = (X.row(i).transpose() - centers[0]).squaredNorm();
      double d1 = (X.row(i).transpose() - centers[1]).squaredNorm();
      int a = d1 < d0 ? 1 : 0;
      if (a != assign[i]) {
        assign[i] = a;
        changed = true;
      }
    }
    std::array<VectorXd, 2> sums{VectorXd::Zero(d), VectorXd::Zero(d)};
    std::array<int, 2> counts{0, 0};
    for (int i = 0; i < n; ++i) {
      sums[assign[i]] += X.row(i).transpose();
      ++counts[assign[i]];
    }
    for (int c = 0; c < 2; ++c) {
      if (counts[c] == 0) {
        int j = pick(rng);
        centers[c] = X.row(j).transpose();
        changed = true;
      } else {
        centers[c] = sums[c] / counts[c];
      }
    }
    if (!changed && iter > 0) break;
  }

  KmeansInit init;
  std::array<int, 2> counts{0, 0};
  for (int i = 0; i < n; ++i) ++counts[assign[i]];
  for (int c = 0; c < 2; ++c) {
    init.means[c] = centers[c];
    init.weights[c] = std::max(counts[c], 1) / static_cast<double>(n);
    MatrixXd scatter = MatrixXd::Zero(d, d);
    if (counts[c] > 0) {
      for (int i = 0; i < n; ++i) {
        if (assign[i] != c) continue;
        VectorXd diff = X.row(i).transpose() - centers[c];
        scatter += diff * diff.transpose();
      }
      scatter /= counts[c];
    }
    init.covs[c] = clip_eigenvalues(scatter, cov_floor);
  }
  double wsum = init.weights[0] + init.weights[1];
  init.weights[0] /= wsum;
  init.weights[1] /= wsum;
  return init;
}

struct EmRun {
  GaussianMixtureState state;
  double final_ll = -std::numeric_limits<double>::infinity();
};

EmRun run_em(const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                                  Eigen::RowMajor>>& X,
             const KmeansInit& init, int max_iter, double tol, double cov_floor) {
  const int n = static_cast<int>(X.rows());
  const int d = static_cast<int>(X.cols());

  GaussianMixtureState st;
  st.weights = init.weights;
  st.means = init.means;
  st.covariances = init.covs;

  std::array<GaussianEval, 2> ev;
  MatrixXd resp(n, 2);

  auto e_step = [&]() {
    for (int c = 0; c < 2; ++c) ev[c].set(st.means[c], st.covariances[c]);
    double ll = 0.0;
    for (int i = 0; i < n; ++i) {
      VectorXd x = X.row(i).transpose();
      double l0 = std::log(st.weights[0]) + ev[0].log_density(x);
      double l1 = std::log(st.weights[1]) + ev[1].log_density(x);
      double mx = std::max(l0, l1);
      double lse = mx + std::log(std::exp(l0 - mx) + std::exp(l1 - mx));
      resp(i, 0) = std::exp(l0 - lse);
      resp(i, 1) = std::exp(l1 - lse);
      ll += lse;
    }
    return ll;
  };

  auto m_step = [&]() {
    for (int c = 0; c < 2; ++c) {
      double nc = resp.col(c).sum();
      if (nc < 1e-12) {
        // collapsed component: keep its parameters, only renormalize weight
        st.weights[c] = 1e-12;
        continue;
      }
      VectorXd mu = (resp.col(c).transpose() * X.derived()).transpose() / nc;
      MatrixXd scatter = MatrixXd::Zero(d, d);
      for (int i = 0; i < n; ++i) {
        VectorXd diff = X.row(i).transpose() - mu;
        scatter += resp(i, c) * (diff * diff.transpose());
      }
      st.weights[c] = nc / n;
      st.means[c] = mu;
      st.covariances[c] = clip_eigenvalues(scatter / nc, cov_floor);
    }
    double wsum = st.weights[0] + st.weights[1];
    st.weights[0] /= wsum;
    st.weights[1] /= wsum;
  };

  double ll_prev = e_step();
  st.ll_history.push_back(ll_prev);
  for (int it = 1; it <= max_iter; ++it) {
    m_step();
    double ll = e_step();
    st.ll_history.push_back(ll);
    st.iterations = it;
    st.log_likelihood = ll;
    if (ll - ll_prev < tol) break;
    ll_prev = ll;
  }
  if (st.ll_history.size() == 1) st.log_likelihood = ll_prev;  // max_iter == 0

  EmRun run;
  run.final_ll = st.log_likelihood;
  run.state = std::move(st);
  return run;
}

}  // namespace

double GaussianMixtureState::component_log_density(int c, const VectorXd& x) const {
  GaussianEval ev;
  ev.set(means[c], covariances[c]);
  return ev.log_density(x);
}

GaussianMixtureState em_fit(const FeatureField& field, int max_iter, double tol,
                            std::uint64_t seed, int restarts) {
  const int n = field.n_vectors();
  const int d = field.dim;

  if (field.zero_variance) {
    GaussianMixtureState st;
    st.degenerate = true;
    st.means = {VectorXd::Zero(d), VectorXd::Zero(d)};
    st.covariances = {MatrixXd::Identity(d, d), MatrixXd::Identity(d, d)};
    return st;
  }
  if (n < 2 * d)
    throw DataError("em_fit: need at least 2*d vectors, have " + std::to_string(n));
  if (restarts < 1) throw ConfigError("em_fit: restarts must be >= 1");
  for (double v : field.vectors)
    if (!std::isfinite(v)) throw DataError("em_fit: non-finite feature vector");

  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> X(
      field.vectors.data(), n, d);

  // fixed per fit so every M-step maximizes over the same floored family
  Eigen::RowVectorXd mu = X.colwise().mean();
  double pooled_trace = (X.rowwise() - mu).squaredNorm() / n;
  double cov_floor = std::max(1e-6 * pooled_trace / d, 1e-300);

  EmRun best;
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(splitmix64(seed ^ (0x9e3779b97f4a7c15ull * (r + 1))));
    KmeansInit init = kmeans2(X, rng, cov_floor);
    EmRun run = run_em(X, init, max_iter, tol, cov_floor);
    if (run.final_ll > best.final_ll) best = std::move(run);  // ties keep earlier restart
  }

  GaussianMixtureState st = std::move(best.state);
  // canonical order: component 0 carries the larger weight
  bool swap = st.weights[1] > st.weights[0];
  if (std::abs(st.weights[0] - st.weights[1]) < 1e-12) {
    swap = std::lexicographical_compare(st.means[1].data(), st.means[1].data() + d,
                                        st.means[0].data(), st.means[0].data() + d);
  }
  if (swap) {
    std::swap(st.weights[0], st.weights[1]);
    std::swap(st.means[0], st.means[1]);
    std::swap(st.covariances[0], st.covariances[1]);
  }
  return st;
}

}  // namespace comprint::localization
