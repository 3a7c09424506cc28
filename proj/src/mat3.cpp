#include "linecurve/mat3.hpp"

#include <cmath>

namespace linecurve {

double Mat3::frobenius() const {
    double s = 0.0;
    for (double v : e_) s += v * v;
    return std::sqrt(s);
}

double Mat3::max_abs() const {
    double m = 0.0;
    for (double v : e_) m = std::fmax(m, std::fabs(v));
    return m;
}

bool Mat3::finite() const {
    for (double v : e_)
        if (!std::isfinite(v)) return false;
    return true;
}

bool Mat3::invertible() const {
    double scale = max_abs();
    return std::fabs(det()) > 1e-12 * scale * scale * scale;
}

Mat3 Mat3::inverse() const {
    if (!invertible()) throw std::domain_error("Mat3::inverse: singular matrix");
    double d = det();
    Mat3 adj;
    adj(0, 0) = e_[4] * e_[8] - e_[5] * e_[7];
    adj(0, 1) = e_[2] * e_[7] - e_[1] * e_[8];
    adj(0, 2) = e_[1] * e_[5] - e_[2] * e_[4];
    adj(1, 0) = e_[5] * e_[6] - e_[3] * e_[8];
    adj(1, 1) = e_[0] * e_[8] - e_[2] * e_[6];
    adj(1, 2) = e_[2] * e_[3] - e_[0] * e_[5];
    adj(2, 0) = e_[3] * e_[7] - e_[4] * e_[6];
    adj(2, 1) = e_[1] * e_[6] - e_[0] * e_[7];
    adj(2, 2) = e_[0] * e_[4] - e_[1] * e_[3];
    return adj * (1.0 / d);
}

double commutator_norm(const Mat3& a, const Mat3& b) {
    Mat3 c = a * b - b * a;
    // Commutators have trace zero, so this only removes rounding noise.
    Mat3 adj = c - Mat3::identity() * (c.trace() / 3.0);
    return adj.frobenius();
}

ProjMat::ProjMat(const Mat3& m) : rep_(m) {
    double n = rep_.frobenius();
    if (!(n > 0.0) || !rep_.finite())
        throw std::domain_error("ProjMat: zero or non-finite representative");
    rep_ = rep_ * (1.0 / n);
    for (double v : rep_.entries()) {
        if (std::fabs(v) > 1e-12) {
            if (v < 0.0) rep_ = rep_ * -1.0;
            break;
        }
    }
}

bool ProjMat::approx_equal(const ProjMat& other, double tol) const {
    return distance(other) <= tol;
}

double ProjMat::distance(const ProjMat& other) const {
    double m = 0.0;
    for (int i = 0; i < 9; ++i)
        m = std::fmax(m, std::fabs(rep_.entries()[i] - other.rep_.entries()[i]));
    return m;
}

Vec2 ProjMat::apply(Vec2 p) const {
    Vec3 h = rep_ * Vec3{p.x, p.y, 1.0};
    if (std::fabs(h.z) <= 1e-14 * rep_.max_abs() * std::fmax(1.0, std::fmax(std::fabs(p.x), std::fabs(p.y))))
        throw std::domain_error("ProjMat::apply: image at infinity");
    return {h.x / h.z, h.y / h.z};
}

} // namespace linecurve
