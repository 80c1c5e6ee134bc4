#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace anyon {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// perm[l] is the image of index l.
using Permutation = std::vector<int>;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kZeroThreshold = 1e-10;
inline constexpr double kCycleTol = 1e-8;
inline constexpr double kPi = 3.14159265358979323846;

inline cplx unit_phase(double angle) { return std::polar(1.0, angle); }

// Angle in [0, 2pi); values within 1e-12 of 2pi fold to 0.
double wrap_angle(double angle);

// Angle of a unit complex number divided by pi, in [0, 2), snapped to 12 digits.
double angle_over_pi(cplx z);

double max_abs(const Matrix& m);

// max |U U^dagger - I|
double unitarity_residual(const Matrix& m);

// Pi with Pi(x, y) = 1 iff x = perm[y].
Matrix permutation_matrix(const Permutation& perm);

Permutation identity_permutation(int n);
Permutation inverse_permutation(const Permutation& perm);
Permutation compose(const Permutation& outer, const Permutation& inner);
bool is_permutation(const Permutation& perm, int n);

// Phase lambda with a ~ lambda * b, taken from the largest-magnitude entry of b.
cplx global_phase(const Matrix& a, const Matrix& b);

// max |a - lambda b| with lambda from global_phase.
double projective_distance(const Matrix& a, const Matrix& b);

// Exactly one entry per row and column above the zero threshold.
bool is_monomial(const Matrix& m, double zero_threshold = kZeroThreshold);

// Largest entry that is neither in the dominant position of its column nor zero;
// zero exactly when m is monomial.
double monomial_residual(const Matrix& m);

}  // namespace anyon
