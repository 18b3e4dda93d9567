#include <Eigen/Eigenvalues>

#include "comprint/errors.hpp"
#include "comprint/localization.hpp"

namespace comprint::localization {

FeatureField reduce_dimension(const FeatureField& field, int d) {
  const int n = field.n_vectors();
  const int dim = field.dim;
  if (d <= 0 || d > dim)
    throw ConfigError("reduce_dimension: d must be in [1, " + std::to_string(dim) + "]");
  if (n < d + 1)
    throw DataError("reduce_dimension: need at least d+1 vectors, have " + std::to_string(n));

  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> X(
      field.vectors.data(), n, dim);
  Eigen::RowVectorXd mu = X.colwise().mean();
  Eigen::MatrixXd centered = X.rowwise() - mu;
  Eigen::MatrixXd cov = centered.transpose() * centered / static_cast<double>(n);

  FeatureField out;
  out.grid_rows = field.grid_rows;
  out.grid_cols = field.grid_cols;
  out.window = field.window;
  out.stride = field.stride;
  out.image_rows = field.image_rows;
  out.image_cols = field.image_cols;
  out.dim = d;
  out.projection_mean.assign(mu.data(), mu.data() + dim);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  if (eig.info() != Eigen::Success)
    throw DataError("reduce_dimension: eigendecomposition failed");

  // eigenvalues come out ascending; all-equal vectors leave no variance to
  // project and EM must be skipped downstream
  double max_ev = eig.eigenvalues()(dim - 1);
  if (max_ev <= 1e-18) {
    out.zero_variance = true;
    out.vectors.assign(static_cast<std::size_t>(n) * d, 0.0);
    out.projection_basis.assign(static_cast<std::size_t>(d) * dim, 0.0);
    return out;
  }

  Eigen::MatrixXd basis(d, dim);  // rows = top components, descending variance
  for (int k = 0; k < d; ++k) basis.row(k) = eig.eigenvectors().col(dim - 1 - k).transpose();

  Eigen::MatrixXd proj = centered * basis.transpose();  // n x d
  out.vectors.resize(static_cast<std::size_t>(n) * d);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) out.vectors[static_cast<std::size_t>(i) * d + k] = proj(i, k);
  out.projection_basis.resize(static_cast<std::size_t>(d) * dim);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < dim; ++j)
      out.projection_basis[static_cast<std::size_t>(k) * dim + j] = basis(k, j);
  return out;
}

}  // namespace comprint::localization
