// geometry.hpp — similarity transforms and small rotation utilities.
#pragma once

#include <cmath>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "meshalign/common.hpp"

namespace meshalign {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline bool is_rotation(const Mat3& r, double tol = 1e-9) {
    return (r * r.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol &&
           std::abs(r.determinant() - 1.0) <= tol;
}

// 7-DoF similarity: p -> scale * rotation * p + translation.
struct SimilarityTransform {
    double scale = 1.0;
    Mat3 rotation = Mat3::Identity();
    Vec3 translation = Vec3::Zero();

    static SimilarityTransform identity() { return {}; }

    Vec3 apply(const Vec3& p) const { return scale * (rotation * p) + translation; }

    void validate() const {
        if (!(scale > 0.0)) fail_input("similarity transform requires a positive scale");
        if (!is_rotation(rotation))
            fail_input("similarity transform rotation is not a proper rotation matrix");
    }

    SimilarityTransform inverse() const {
        SimilarityTransform inv;
        inv.scale = 1.0 / scale;
        inv.rotation = rotation.transpose();
        inv.translation = -inv.scale * (inv.rotation * translation);
        return inv;
    }
};

// compose(b, a): apply a first, then b.
inline SimilarityTransform compose(const SimilarityTransform& b, const SimilarityTransform& a) {
    SimilarityTransform out;
    out.scale = b.scale * a.scale;
    out.rotation = b.rotation * a.rotation;
    out.translation = b.scale * (b.rotation * a.translation) + b.translation;
    return out;
}

inline Mat3 axis_angle_rotation(const Vec3& axis, double angle_rad) {
    const double n = axis.norm();
    if (n < 1e-15) return Mat3::Identity();
    return Eigen::AngleAxisd(angle_rad, axis / n).toRotationMatrix();
}

// Rotation from an unnormalized axis-angle vector (angle = |w|).
inline Mat3 rotation_exp(const Vec3& w) {
    const double angle = w.norm();
    if (angle < 1e-15) return Mat3::Identity();
    return Eigen::AngleAxisd(angle, w / angle).toRotationMatrix();
}

} // namespace meshalign
