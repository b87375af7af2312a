#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace invsq {

enum class RectSide { Bottom, Top, Left, Right };

RectSide rect_side_from_string(const std::string& s);

/// Axis-aligned rectangle [0, width] x [0, height].
struct RectangleSpec {
    double width = 1.0;
    double height = 1.0;
};

/// Boundary frame (y, w) on a strip along one flat side of a rectangle:
/// y is the perpendicular distance to the side, w the signed arclength along
/// the side measured from the anchor point x0. For a flat side the gradients
/// are constant unit vectors, so |grad y| = 1 and grad y . grad w = 0 hold
/// exactly and both Hessians vanish.
struct BoundaryFrame2D {
    RectangleSpec rect;
    RectSide side = RectSide::Bottom;
    double depth = 0.0;
    double anchor = 0.0;  // arclength position of x0 along the side

    std::array<double, 2> grad_y{};  // inward unit normal
    std::array<double, 2> grad_w{};  // unit tangent

    // Strip sample nodes (structured, tangential-major) used by the frame checks.
    std::size_t n_tangential = 0;
    std::size_t n_normal = 0;
    std::vector<std::array<double, 2>> nodes;

    double y_at(const std::array<double, 2>& p) const;
    double w_at(const std::array<double, 2>& p) const;
};

/// Builds the strip frame. depth must be smaller than half the rectangle's
/// extent normal to the chosen side. anchor defaults to the side midpoint
/// when negative.
BoundaryFrame2D boundary_frame_2d(const RectangleSpec& rect, RectSide side, double depth,
                                  double anchor = -1.0, std::size_t n_tangential = 17,
                                  std::size_t n_normal = 9);

}  // namespace invsq
