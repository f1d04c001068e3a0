#include "maxconv/operator_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace maxconv {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::domain_error(std::string(what) + ": matrix must be square and nonempty");
  }
}

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw std::domain_error(std::string(what) + ": dimensions " +
                            std::to_string(a) + " and " + std::to_string(b) +
                            " differ");
  }
}

double state_value(const Matrix& m, const Vector& xi, const char* what) {
  require_same_dim(m.rows(), xi.size(), what);
  Complex v = xi.adjoint() * m * xi;
  return v.real();
}

}  // namespace

PointedSpace::PointedSpace(Vector xi) : xi_(std::move(xi)) {
  if (xi_.size() == 0) {
    throw std::domain_error("pointed space: empty vector");
  }
  if (std::abs(xi_.norm() - 1.0) > kHermitianTol) {
    throw std::domain_error("pointed space: vector norm " +
                            std::to_string(xi_.norm()) + " is not 1");
  }
}

HermitianOperator::HermitianOperator(Matrix m) : matrix_(std::move(m)) {
  require_square(matrix_, "hermitian operator");
  double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol) {
    throw std::domain_error("hermitian operator: asymmetry " +
                            std::to_string(asym));
  }
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
  return HermitianOperator(Matrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim) {
  return HermitianOperator(Matrix::Identity(dim, dim));
}

ProjectionMatrix::ProjectionMatrix(Matrix m) : matrix_(std::move(m)) {
  require_square(matrix_, "projection");
  double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol) {
    throw std::domain_error("projection: asymmetry " + std::to_string(asym));
  }
  double drift = (matrix_ * matrix_ - matrix_).cwiseAbs().maxCoeff();
  if (drift > kEigenvalueTol) {
    throw std::domain_error("projection: not idempotent, P^2 - P reaches " +
                            std::to_string(drift));
  }
}

ProjectionMatrix ProjectionMatrix::zero(Eigen::Index dim) {
  return ProjectionMatrix(Matrix::Zero(dim, dim));
}

ProjectionMatrix ProjectionMatrix::identity(Eigen::Index dim) {
  return ProjectionMatrix(Matrix::Identity(dim, dim));
}

ProjectionMatrix ProjectionMatrix::complement() const {
  return ProjectionMatrix(Matrix::Identity(dim(), dim()) - matrix_);
}

double vector_state(const HermitianOperator& a, const PointedSpace& s) {
  return state_value(a.matrix(), s.xi(), "vector_state");
}

double vector_state(const ProjectionMatrix& p, const PointedSpace& s) {
  return state_value(p.matrix(), s.xi(), "vector_state");
}

ProjectionMatrix spectral_projection_leq(const HermitianOperator& a, double x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.matrix());
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();
  Matrix p = Matrix::Zero(a.dim(), a.dim());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) <= x + kEigenvalueTol) {
      p += vecs.col(i) * vecs.col(i).adjoint();
    }
  }
  return ProjectionMatrix(std::move(p));
}

ProjectionMatrix projection_meet(const ProjectionMatrix& p,
                                 const ProjectionMatrix& q) {
  require_same_dim(p.dim(), q.dim(), "projection_meet");
  const Eigen::Index d = p.dim();
  // v is in range(p) and range(q) exactly when both complements kill it, so
  // the meet is the projector onto the null space of the stacked block.
  Matrix stacked(2 * d, d);
  stacked.topRows(d) = Matrix::Identity(d, d) - p.matrix();
  stacked.bottomRows(d) = Matrix::Identity(d, d) - q.matrix();
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Matrix meet = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (i >= sv.size() || sv(i) <= kRankTol) {
      meet += svd.matrixV().col(i) * svd.matrixV().col(i).adjoint();
    }
  }
  return ProjectionMatrix(std::move(meet));
}

ProjectionMatrix projection_join(const ProjectionMatrix& p,
                                 const ProjectionMatrix& q) {
  return projection_meet(p.complement(), q.complement()).complement();
}

DiscreteMeasure spectral_distribution(const HermitianOperator& a,
                                      const PointedSpace& s) {
  require_same_dim(a.dim(), s.dim(), "spectral_distribution");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.matrix());
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();

  std::vector<double> atoms;
  std::vector<double> weights;
  Eigen::Index i = 0;
  while (i < vals.size()) {
    Eigen::Index j = i;
    double location = 0.0;
    double mass = 0.0;
    while (j < vals.size() && vals(j) - vals(i) <= kEigenvalueTol) {
      location += vals(j);
      Complex overlap = vecs.col(j).adjoint() * s.xi();
      mass += std::norm(overlap);
      ++j;
    }
    atoms.push_back(location / static_cast<double>(j - i));
    weights.push_back(mass);
    i = j;
  }
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

MonotonePair monotone_pair(const HermitianOperator& x, const PointedSpace& s1,
                           const HermitianOperator& y, const PointedSpace& s2) {
  require_same_dim(x.dim(), s1.dim(), "monotone_pair");
  require_same_dim(y.dim(), s2.dim(), "monotone_pair");
  Matrix cut = s2.xi() * s2.xi().adjoint();  // rank one, fixes the second leg
  Matrix xt = Eigen::kroneckerProduct(x.matrix(), cut);
  Matrix yt = Eigen::kroneckerProduct(
      Matrix::Identity(x.dim(), x.dim()), y.matrix());
  Vector xi = Eigen::kroneckerProduct(s1.xi(), s2.xi());
  return {HermitianOperator(std::move(xt)), HermitianOperator(std::move(yt)),
          PointedSpace(std::move(xi))};
}

DiscreteMeasure spectral_maximum_distribution(const HermitianOperator& a,
                                              const HermitianOperator& b,
                                              const PointedSpace& s) {
  require_same_dim(a.dim(), b.dim(), "spectral_maximum_distribution");
  require_same_dim(a.dim(), s.dim(), "spectral_maximum_distribution");

  // Step locations: anywhere either spectrum places an eigenvalue.
  auto grid_of = [](const HermitianOperator& op) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(op.matrix(),
                                             Eigen::EigenvaluesOnly);
    return std::vector<double>(es.eigenvalues().data(),
                               es.eigenvalues().data() + es.eigenvalues().size());
  };
  auto ga = grid_of(a);
  auto gb = grid_of(b);
  std::vector<double> grid;
  grid.reserve(ga.size() + gb.size());
  std::merge(ga.begin(), ga.end(), gb.begin(), gb.end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<double> values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    auto joint = projection_meet(spectral_projection_leq(a, grid[k]),
                                 spectral_projection_leq(b, grid[k]));
    values[k] = vector_state(joint, s);
  }
  return DiscreteMeasure::from_cdf_grid(grid, values);
}

VerifyReport verify_projection_join_formula(double p, double q,
                                            Eigen::Index dim1,
                                            Eigen::Index dim2,
                                            std::uint64_t seed) {
  if (!(p >= 0.0) || p > 1.0 || !(q >= 0.0) || q > 1.0) {
    throw std::domain_error("projection join formula: p and q must be in [0, 1]");
  }
  if (dim1 < 2 || dim2 < 2) {
    throw std::domain_error("projection join formula: each leg needs dim >= 2");
  }
  std::mt19937_64 rng(seed);

  // A rank-one projection and a unit vector with overlap 1-p, then both
  // rotated by a random unitary so nothing is axis-aligned.
  auto leg = [&](double t, Eigen::Index dim) {
    Matrix u = random_unitary(rng, dim);
    Vector xi = std::sqrt(1.0 - t) * u.col(0) + std::sqrt(t) * u.col(1);
    Matrix proj = u.col(0) * u.col(0).adjoint();
    return std::make_pair(std::move(proj), PointedSpace(std::move(xi)));
  };
  auto [pm, s1] = leg(p, dim1);
  auto [qm, s2] = leg(q, dim2);

  auto pair = monotone_pair(HermitianOperator(std::move(pm)), s1,
                            HermitianOperator(std::move(qm)), s2);
  ProjectionMatrix pt(pair.x.matrix());
  ProjectionMatrix qt(pair.y.matrix());
  double joined = vector_state(projection_join(pt, qt), pair.state);

  double expected = 1.0 - p * q;
  double err = std::abs(joined - expected);
  return {err, joined, err <= kOperatorTol};
}

Matrix random_unitary(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      g(r, c) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ();
}

HermitianOperator hermitian_with_spectrum(std::mt19937_64& rng,
                                          const std::vector<double>& spectrum) {
  if (spectrum.empty()) {
    throw std::domain_error("hermitian_with_spectrum: empty spectrum");
  }
  Eigen::Index d = static_cast<Eigen::Index>(spectrum.size());
  Matrix u = random_unitary(rng, d);
  Matrix a = Matrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    a += spectrum[static_cast<std::size_t>(i)] * u.col(i) * u.col(i).adjoint();
  }
  // Symmetrize away the last ulps so the constructor check is exact.
  Matrix h = (a + a.adjoint()) / 2.0;
  return HermitianOperator(std::move(h));
}

PointedSpace random_state(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = Complex(gauss(rng), gauss(rng));
  }
  v.normalize();
  return PointedSpace(std::move(v));
}

}  // namespace maxconv
