#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "maxconv/measure.hpp"
#include "maxconv/report.hpp"

namespace maxconv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Tolerances for the finite-dimensional operator layer.
inline constexpr double kHermitianTol = 1e-12;   // accepted asymmetry on input
inline constexpr double kEigenvalueTol = 1e-9;   // eigenvalue grouping / inclusion
inline constexpr double kRankTol = 1e-9;         // singular values below this are 0
inline constexpr double kOperatorTol = 1e-9;     // identity checks in this layer

// A Hilbert space with a distinguished unit vector; expectations are taken
// against that vector.
class PointedSpace {
 public:
  explicit PointedSpace(Vector xi);

  Eigen::Index dim() const { return xi_.size(); }
  const Vector& xi() const { return xi_; }

 private:
  Vector xi_;
};

class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m);

  static HermitianOperator zero(Eigen::Index dim);
  static HermitianOperator identity(Eigen::Index dim);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

class ProjectionMatrix {
 public:
  // Requires Hermitian within kHermitianTol and idempotent within
  // kEigenvalueTol.
  explicit ProjectionMatrix(Matrix m);

  static ProjectionMatrix zero(Eigen::Index dim);
  static ProjectionMatrix identity(Eigen::Index dim);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

  ProjectionMatrix complement() const;  // I - P

 private:
  Matrix matrix_;
};

// <xi, A xi>; real for Hermitian input.
double vector_state(const HermitianOperator& a, const PointedSpace& s);
double vector_state(const ProjectionMatrix& p, const PointedSpace& s);

// Projection onto the span of eigenvectors with eigenvalue <= x (inclusion
// decided within kEigenvalueTol).
ProjectionMatrix spectral_projection_leq(const HermitianOperator& a, double x);

// Projection onto range(p) intersect range(q), via the null space of the
// stacked complements.
ProjectionMatrix projection_meet(const ProjectionMatrix& p,
                                 const ProjectionMatrix& q);

// Projection onto range(p) + range(q), as the complement of the meet of the
// complements.
ProjectionMatrix projection_join(const ProjectionMatrix& p,
                                 const ProjectionMatrix& q);

// The law of a under the vector state: atoms at the (grouped) eigenvalues,
// weights |<eigenvector, xi>|^2.  Eigenvalues closer than kEigenvalueTol
// collapse to one atom at their mean.
DiscreteMeasure spectral_distribution(const HermitianOperator& a,
                                      const PointedSpace& s);

// The tensor realization of a monotonically coupled pair: x acts on the
// first leg cut down by the rank-one projection onto xi2, y acts on the
// second leg, and the state vector is xi1 (x) xi2.
struct MonotonePair {
  HermitianOperator x;
  HermitianOperator y;
  PointedSpace state;
};

MonotonePair monotone_pair(const HermitianOperator& x, const PointedSpace& s1,
                           const HermitianOperator& y, const PointedSpace& s2);

// The law of the spectral maximum of a and b: its CDF at x is the state
// applied to the meet of the two spectral projections at x.
DiscreteMeasure spectral_maximum_distribution(const HermitianOperator& a,
                                              const HermitianOperator& b,
                                              const PointedSpace& s);

// Builds a monotonically coupled pair of projections with traces 1-p and
// 1-q, forms the join, and compares the state's value against 1 - p*q.
// witness_x carries the computed value of the state on the join.
VerifyReport verify_projection_join_formula(double p, double q,
                                            Eigen::Index dim1,
                                            Eigen::Index dim2,
                                            std::uint64_t seed = 0);

// Deterministic generators for tests and verification suites.
Matrix random_unitary(std::mt19937_64& rng, Eigen::Index dim);
HermitianOperator hermitian_with_spectrum(std::mt19937_64& rng,
                                          const std::vector<double>& spectrum);
PointedSpace random_state(std::mt19937_64& rng, Eigen::Index dim);

}  // namespace maxconv
