#pragma once

#include <array>
#include <stdexcept>

#include "linecurve/vec.hpp"

namespace linecurve {

// Row-major 3x3 real matrix. Invertibility is always tested against
// |det| > 1e-12 * max_abs()^3 so the check scales with the entries.
class Mat3 {
public:
    Mat3() = default;
    explicit Mat3(const std::array<double, 9>& e) : e_(e) {}

    static Mat3 identity() {
        return Mat3({1, 0, 0, 0, 1, 0, 0, 0, 1});
    }
    static Mat3 zero() { return Mat3(); }
    static Mat3 diag(double a, double b, double c) {
        return Mat3({a, 0, 0, 0, b, 0, 0, 0, c});
    }
    static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        return Mat3({c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z});
    }

    double& operator()(int r, int c) { return e_[3 * r + c]; }
    double operator()(int r, int c) const { return e_[3 * r + c]; }
    const std::array<double, 9>& entries() const { return e_; }

    Mat3 operator+(const Mat3& m) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.e_[i] = e_[i] + m.e_[i];
        return r;
    }
    Mat3 operator-(const Mat3& m) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.e_[i] = e_[i] - m.e_[i];
        return r;
    }
    Mat3 operator*(double a) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.e_[i] = a * e_[i];
        return r;
    }
    Mat3 operator*(const Mat3& m) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * m(k, j);
                r(i, j) = s;
            }
        return r;
    }
    Vec3 operator*(const Vec3& v) const {
        return {e_[0] * v.x + e_[1] * v.y + e_[2] * v.z,
                e_[3] * v.x + e_[4] * v.y + e_[5] * v.z,
                e_[6] * v.x + e_[7] * v.y + e_[8] * v.z};
    }

    Mat3 transposed() const {
        return Mat3({e_[0], e_[3], e_[6], e_[1], e_[4], e_[7], e_[2], e_[5], e_[8]});
    }

    double trace() const { return e_[0] + e_[4] + e_[8]; }

    double det() const {
        return e_[0] * (e_[4] * e_[8] - e_[5] * e_[7]) -
               e_[1] * (e_[3] * e_[8] - e_[5] * e_[6]) +
               e_[2] * (e_[3] * e_[7] - e_[4] * e_[6]);
    }

    double frobenius() const;
    double max_abs() const;
    bool finite() const;
    bool invertible() const;

    // Adjugate-based inverse; throws std::domain_error when the scaled
    // determinant test fails.
    Mat3 inverse() const;

    Vec3 row(int r) const { return {e_[3 * r], e_[3 * r + 1], e_[3 * r + 2]}; }
    Vec3 col(int c) const { return {e_[c], e_[3 + c], e_[6 + c]}; }

private:
    std::array<double, 9> e_{};
};

inline Mat3 operator*(double a, const Mat3& m) { return m * a; }

double commutator_norm(const Mat3& a, const Mat3& b);

// Element of PGL(3,R): a Mat3 modulo nonzero scalars, stored canonically
// with Frobenius norm 1 and the first entry of magnitude > 1e-12
// (row-major scan) positive.
class ProjMat {
public:
    explicit ProjMat(const Mat3& m);

    const Mat3& rep() const { return rep_; }

    // Canonical reps compared entrywise.
    bool approx_equal(const ProjMat& other, double tol = 1e-10) const;
    double distance(const ProjMat& other) const;

    // Apply to an affine point (dehomogenize); throws when the image is
    // at infinity.
    Vec2 apply(Vec2 p) const;

private:
    Mat3 rep_;
};

} // namespace linecurve
