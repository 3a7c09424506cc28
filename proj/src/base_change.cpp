#include "linecurve/base_change.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "linecurve/eigen3.hpp"

namespace linecurve {

namespace {

bool is_scalar(const Mat3& m, double tol) {
    Mat3 dev = m - Mat3::identity() * (m.trace() / 3.0);
    return dev.max_abs() <= tol;
}

// Sign-canonicalize: first component with |.| > 1e-12 positive.
Vec3 canonical_sign(Vec3 w) {
    for (int i = 0; i < 3; ++i) {
        if (std::fabs(w[i]) > 1e-12) {
            if (w[i] < 0.0) return -w;
            break;
        }
    }
    return w;
}

// Orthonormal basis [u, v, w] with u,v spanning the plane normal to w.
// The in-plane axes come from projecting the standard basis vector least
// aligned with w, so coordinate-aligned planes give the identity.
Mat3 basis_from_plane_normal(Vec3 normal) {
    Vec3 w = canonical_sign(normal.normalized());
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (std::fabs(w[i]) < std::fabs(w[k])) k = i;
    Vec3 ek;
    ek[k] = 1.0;
    Vec3 u = (ek - w * w[k]).normalized();
    Vec3 v = w.cross(u);
    return Mat3::from_columns(u, v, w);
}

// Kernel direction of a near-rank-2 matrix: largest cross product of two
// rows.
Vec3 kernel_direction(const Mat3& a) {
    Vec3 r0 = a.row(0), r1 = a.row(1), r2 = a.row(2);
    Vec3 best = r0.cross(r1);
    Vec3 c = r0.cross(r2);
    if (c.norm() > best.norm()) best = c;
    c = r1.cross(r2);
    if (c.norm() > best.norm()) best = c;
    return best.normalized();
}

// Unit normal of a plane invariant under m (and under anything commuting
// with m). Empty only if m is scalar.
//
// A plane V is m-invariant iff its normal is an eigenvector of m^T, and
// the eigenvalue casework picks which one: with a conjugate complex pair
// the normal belongs to the real eigenvalue (V = real span of the complex
// eigenspaces); with three real eigenvalues it belongs to a simple one
// (V = span of the other two eigenvectors, or the eigenspace /
// generalized eigenspace of the repeated eigenvalue). Computing the
// normal as a left eigenvector at the best-separated eigenvalue keeps
// the plane well conditioned even when the other two eigenvalues nearly
// collide.
std::optional<Vec3> invariant_plane_normal(const Mat3& m) {
    double scale = std::fmax(m.max_abs(), 1e-300);
    if (is_scalar(m, 1e-12 * scale)) return std::nullopt;

    EigenDecomposition eig = eigen_real_3x3(m);

    // Separation of each simple real eigenvalue from the rest of the
    // spectrum.
    const RealEigenPair* chosen = nullptr;
    double best_sep = -1.0;
    for (const auto& rp : eig.reals) {
        if (rp.multiplicity != 1) continue;
        double sep = HUGE_VAL;
        for (const auto& other : eig.reals)
            if (&other != &rp) sep = std::fmin(sep, std::fabs(other.value - rp.value));
        if (eig.complex_pair)
            sep = std::fmin(sep, std::hypot(rp.value - eig.complex_pair->re,
                                            eig.complex_pair->im));
        // Ties go to the larger eigenvalue so coordinate-aligned spectra
        // keep span(e1, e2).
        if (sep > best_sep || (sep == best_sep && chosen && rp.value > chosen->value)) {
            best_sep = sep;
            chosen = &rp;
        }
    }
    if (chosen) {
        Mat3 shifted_t = (m - Mat3::identity() * chosen->value).transposed();
        return kernel_direction(shifted_t);
    }

    // Single real eigenvalue of multiplicity three but m non-scalar
    // (defective): take the eigenspace if it is a plane, otherwise the
    // 2-dimensional generalized eigenspace ker((m - lambda I)^2).
    double lam = eig.reals.front().value;
    Mat3 shifted = m - Mat3::identity() * lam;
    auto basis = null_space_basis(shifted, 1e-7 * scale);
    if (basis.size() >= 2) return basis[0].cross(basis[1]).normalized();

    Mat3 sq = shifted * shifted;
    double sq_scale = std::fmax(sq.max_abs(), scale * scale * 1e-16);
    for (double f : {1e-7, 1e-4}) {
        auto gen = null_space_basis(sq, f * sq_scale);
        if (gen.size() >= 2) return gen[0].cross(gen[1]).normalized();
    }
    if (!basis.empty()) {
        // Last resort: the plane orthogonal to the left kernel direction.
        return kernel_direction(shifted.transposed());
    }
    return canonical_sign(Vec3{0, 0, 1});
}

} // namespace

double aff_pattern_residual(const Mat3& m, const Mat3& p) {
    Mat3 g = p.inverse() * m * p;
    return std::fmax(std::fabs(g(2, 0)), std::fabs(g(2, 1)));
}

Mat3 commuting_to_aff(const Mat3& a, const Mat3& b) {
    if (!a.finite() || !b.finite())
        throw std::invalid_argument("commuting_to_aff: non-finite input");
    double scale_ab = std::fmax(a.max_abs() * b.max_abs(), 1e-300);
    double comm = commutator_norm(a, b);
    if (comm > 1e-8 * scale_ab) {
        std::ostringstream msg;
        msg << "commuting_to_aff: inputs do not commute in pgl "
            << "(trace-adjusted commutator norm " << comm << ", bound "
            << 1e-8 * scale_ab << ")";
        throw std::invalid_argument(msg.str());
    }

    double sa = std::fmax(a.max_abs(), 1e-300);
    double sb = std::fmax(b.max_abs(), 1e-300);
    auto combined_residual = [&](const Mat3& p) {
        return std::fmax(aff_pattern_residual(a, p) / sa,
                         aff_pattern_residual(b, p) / sb);
    };

    // The casework reads a's eigenstructure and falls back to b when a is
    // scalar; numerically we also try b when a's plane is weak.
    std::optional<Mat3> best;
    double best_res = 0.0;
    for (const Mat3* m : {&a, &b}) {
        auto normal = invariant_plane_normal(*m);
        if (!normal) continue;
        Mat3 p = basis_from_plane_normal(*normal);
        double r = combined_residual(p);
        if (!best || r < best_res) {
            best = p;
            best_res = r;
        }
        if (best_res <= 1e-9) break;
    }
    if (!best) return Mat3::identity(); // both scalar: any plane works
    return *best;
}

} // namespace linecurve
