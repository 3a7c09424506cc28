#pragma once

#include <optional>
#include <vector>

#include "linecurve/mat3.hpp"

namespace linecurve {

// Real roots of x^3 + p2 x^2 + p1 x + p0, closed form (Cardano;
// trigonometric branch when all roots are real), each polished with two
// guarded Newton steps. Returns 1 or 3 roots; with 1 root the quadratic
// cofactor has the conjugate complex pair re +- i*im (im > 0).
struct CubicRoots {
    int real_count = 0;
    double roots[3] = {0, 0, 0};
    double complex_re = 0.0;
    double complex_im = 0.0;
};

CubicRoots solve_monic_cubic(double p2, double p1, double p0);

struct RealEigenPair {
    double value = 0.0;
    int multiplicity = 1;
    Vec3 vector; // unit length
};

struct ComplexEigenPair {
    double re = 0.0;
    double im = 0.0; // > 0; eigenvalues are re +- i*im
    Vec3 vec_re;     // eigenvector for re + i*im is vec_re + i*vec_im
    Vec3 vec_im;
};

struct EigenDecomposition {
    std::vector<RealEigenPair> reals; // ascending by value
    std::optional<ComplexEigenPair> complex_pair;

    int total_multiplicity() const {
        int m = complex_pair ? 2 : 0;
        for (const auto& r : reals) m += r.multiplicity;
        return m;
    }
};

// Closed-form eigenanalysis of a real 3x3 matrix. Roots of the
// characteristic cubic are clustered into multiplicities at
// 1e-7 * max|entry|; eigenvectors have unit length.
EigenDecomposition eigen_real_3x3(const Mat3& m);

// Orthonormal basis of the (tolerance-rank) null space of a, 0..3 vectors.
std::vector<Vec3> null_space_basis(const Mat3& a, double tol);

} // namespace linecurve
