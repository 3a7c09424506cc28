#include "linecurve/eigen3.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace linecurve {

namespace {

double eval_cubic(double p2, double p1, double p0, double x) {
    return ((x + p2) * x + p1) * x + p0;
}

double polish_root(double p2, double p1, double p0, double x) {
    // Two Newton steps, skipped near a multiple root where p' degenerates.
    for (int it = 0; it < 2; ++it) {
        double f = eval_cubic(p2, p1, p0, x);
        double df = (3.0 * x + 2.0 * p2) * x + p1;
        double scale = 3.0 * x * x + 2.0 * std::fabs(p2 * x) + std::fabs(p1);
        if (std::fabs(df) < 1e-6 * std::fmax(scale, 1e-300)) break;
        x -= f / df;
    }
    return x;
}

} // namespace

CubicRoots solve_monic_cubic(double p2, double p1, double p0) {
    CubicRoots out;
    // Depress: x = t - p2/3, t^3 + p t + q = 0.
    double s = p2 / 3.0;
    double p = p1 - 3.0 * s * s;
    double q = p0 - s * (p1 - 2.0 * s * s);
    double disc = -4.0 * p * p * p - 27.0 * q * q;

    double mag = std::fmax(std::fabs(p), std::cbrt(std::fabs(q)));
    if (mag == 0.0) {
        out.real_count = 3;
        out.roots[0] = out.roots[1] = out.roots[2] = -s;
        return out;
    }

    if (disc >= 0.0) {
        // Three real roots; trigonometric form (p <= 0 here).
        double mp = std::fmax(-p, 0.0);
        double r = 2.0 * std::sqrt(mp / 3.0);
        double arg = 0.0;
        if (r > 0.0) {
            arg = -3.0 * q / (mp * r);
            arg = std::clamp(arg, -1.0, 1.0);
        }
        double theta = std::acos(arg) / 3.0;
        const double two_thirds_pi = 2.0943951023931953;
        out.real_count = 3;
        for (int k = 0; k < 3; ++k)
            out.roots[k] = polish_root(p2, p1, p0, r * std::cos(theta - two_thirds_pi * k) - s);
        std::sort(out.roots, out.roots + 3);
        return out;
    }

    // One real root via the stable Cardano form.
    double sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    double u = (q >= 0.0) ? -q / 2.0 - sq : -q / 2.0 + sq;
    double w = std::cbrt(u);
    double t0 = (w == 0.0) ? 0.0 : w - p / (3.0 * w);
    double x0 = polish_root(p2, p1, p0, t0 - s);
    out.real_count = 1;
    out.roots[0] = x0;
    // Quadratic cofactor x^2 + bx + c from synthetic division.
    double b = p2 + x0;
    double c = p1 + x0 * b;
    out.complex_re = -b / 2.0;
    out.complex_im = std::sqrt(std::fmax(c - b * b / 4.0, 0.0));
    return out;
}

std::vector<Vec3> null_space_basis(const Mat3& a, double tol) {
    // Gaussian elimination with full pivoting on a copy; the non-pivot
    // columns parametrize the kernel.
    double m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = a(i, j);
    int col_of[3] = {0, 1, 2}; // column permutation
    int rank = 0;
    for (int step = 0; step < 3; ++step) {
        int pr = -1, pc = -1;
        double best = tol;
        for (int i = step; i < 3; ++i)
            for (int j = step; j < 3; ++j)
                if (std::fabs(m[i][j]) > best) {
                    best = std::fabs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        for (int j = 0; j < 3; ++j) std::swap(m[step][j], m[pr][j]);
        for (int i = 0; i < 3; ++i) std::swap(m[i][step], m[i][pc]);
        std::swap(col_of[step], col_of[pc]);
        for (int i = step + 1; i < 3; ++i) {
            double f = m[i][step] / m[step][step];
            for (int j = step; j < 3; ++j) m[i][j] -= f * m[step][j];
        }
        ++rank;
    }

    std::vector<Vec3> basis;
    for (int free_col = rank; free_col < 3; ++free_col) {
        double xp[3] = {0, 0, 0}; // solution in permuted coordinates
        xp[free_col] = 1.0;
        for (int i = rank - 1; i >= 0; --i) {
            double rhs = 0.0;
            for (int j = i + 1; j < 3; ++j) rhs -= m[i][j] * xp[j];
            xp[i] = rhs / m[i][i];
        }
        Vec3 v;
        for (int j = 0; j < 3; ++j) v[col_of[j]] = xp[j];
        basis.push_back(v);
    }
    // Orthonormalize (at most 3 vectors).
    std::vector<Vec3> ortho;
    for (const auto& v : basis) {
        Vec3 w = v;
        for (const auto& u : ortho) w = w - u * w.dot(u);
        double n = w.norm();
        if (n > 1e-14) ortho.push_back(w * (1.0 / n));
    }
    return ortho;
}

namespace {

// Kernel direction of a rank-2 matrix: largest cross product of row pairs,
// falling back to Gaussian elimination when the rows are too parallel.
Vec3 kernel_direction(const Mat3& a, double tol) {
    Vec3 r0 = a.row(0), r1 = a.row(1), r2 = a.row(2);
    Vec3 c01 = r0.cross(r1), c02 = r0.cross(r2), c12 = r1.cross(r2);
    Vec3 best = c01;
    if (c02.norm() > best.norm()) best = c02;
    if (c12.norm() > best.norm()) best = c12;
    if (best.norm() > tol * tol) return best.normalized();
    auto basis = null_space_basis(a, tol);
    if (!basis.empty()) return basis.front();
    return Vec3{1, 0, 0};
}

// Eigenvector of the complex eigenvalue lam (Im lam > 0) via the adjugate
// of m - lam*I, whose nonzero columns span the 1-dim complex eigenspace.
void complex_eigenvector(const Mat3& m, std::complex<double> lam, Vec3& out_re, Vec3& out_im) {
    using C = std::complex<double>;
    C b[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = C(m(i, j)) - (i == j ? lam : C(0));
    C adj[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj[i][j] = b[r0][c0] * b[r1][c1] - b[r0][c1] * b[r1][c0];
        }
    int bestc = 0;
    double bestn = -1.0;
    for (int j = 0; j < 3; ++j) {
        double n = std::norm(adj[0][j]) + std::norm(adj[1][j]) + std::norm(adj[2][j]);
        if (n > bestn) {
            bestn = n;
            bestc = j;
        }
    }
    C v[3] = {adj[0][bestc], adj[1][bestc], adj[2][bestc]};
    // Deterministic phase: largest component real and positive.
    int bigi = 0;
    for (int i = 1; i < 3; ++i)
        if (std::norm(v[i]) > std::norm(v[bigi])) bigi = i;
    C phase = std::abs(v[bigi]) > 0 ? v[bigi] / std::abs(v[bigi]) : C(1);
    double len = std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
    for (auto& c : v) c /= phase * len;
    out_re = {v[0].real(), v[1].real(), v[2].real()};
    out_im = {v[0].imag(), v[1].imag(), v[2].imag()};
}

} // namespace

EigenDecomposition eigen_real_3x3(const Mat3& m) {
    if (!m.finite()) throw std::domain_error("eigen_real_3x3: non-finite matrix");
    double scale = std::fmax(m.max_abs(), 1e-300);

    // det(x I - m) = x^3 + p2 x^2 + p1 x + p0.
    double p2 = -m.trace();
    double p1 = m(1, 1) * m(2, 2) + m(0, 0) * m(2, 2) + m(0, 0) * m(1, 1) -
                m(0, 1) * m(1, 0) - m(1, 2) * m(2, 1) - m(0, 2) * m(2, 0);
    double p0 = -m.det();

    CubicRoots cr = solve_monic_cubic(p2, p1, p0);
    EigenDecomposition out;
    double cluster_tol = 1e-7 * scale;

    if (cr.real_count == 1) {
        RealEigenPair rp;
        rp.value = cr.roots[0];
        rp.multiplicity = 1;
        Mat3 shifted = m - Mat3::identity() * rp.value;
        rp.vector = kernel_direction(shifted, 1e-9 * scale);
        out.reals.push_back(rp);

        ComplexEigenPair cpair;
        cpair.re = cr.complex_re;
        cpair.im = cr.complex_im;
        if (cpair.im <= cluster_tol) {
            // Conjugate pair collapsed onto the real axis; treat as a real
            // double eigenvalue.
            out.complex_pair.reset();
            RealEigenPair dbl;
            dbl.value = cpair.re;
            dbl.multiplicity = 2;
            Mat3 sh = m - Mat3::identity() * dbl.value;
            auto basis = null_space_basis(sh, 1e-7 * scale);
            dbl.vector = basis.empty() ? kernel_direction(sh, 1e-9 * scale) : basis.front();
            out.reals.push_back(dbl);
        } else {
            complex_eigenvector(m, {cpair.re, cpair.im}, cpair.vec_re, cpair.vec_im);
            out.complex_pair = cpair;
        }
        std::sort(out.reals.begin(), out.reals.end(),
                  [](const RealEigenPair& a, const RealEigenPair& b) { return a.value < b.value; });
        return out;
    }

    // Three real roots (sorted): cluster by the multiplicity tolerance.
    double r[3] = {cr.roots[0], cr.roots[1], cr.roots[2]};
    int cluster_of[3];
    int nclusters = 0;
    for (int i = 0; i < 3; ++i) {
        if (i > 0 && r[i] - r[i - 1] <= cluster_tol)
            cluster_of[i] = cluster_of[i - 1];
        else
            cluster_of[i] = nclusters++;
    }
    for (int c = 0; c < nclusters; ++c) {
        RealEigenPair rp;
        double sum = 0.0;
        int mult = 0;
        for (int i = 0; i < 3; ++i)
            if (cluster_of[i] == c) {
                sum += r[i];
                ++mult;
            }
        rp.value = sum / mult;
        rp.multiplicity = mult;
        Mat3 shifted = m - Mat3::identity() * rp.value;
        if (mult == 1) {
            rp.vector = kernel_direction(shifted, 1e-9 * scale);
        } else {
            auto basis = null_space_basis(shifted, 1e-7 * scale);
            rp.vector = basis.empty() ? kernel_direction(shifted, 1e-9 * scale) : basis.front();
        }
        out.reals.push_back(rp);
    }
    return out;
}

} // namespace linecurve
