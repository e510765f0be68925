#pragma once

namespace photonbox {

/*!
 * Rectangular cavity with ideally conducting walls.
 *
 * Edges are in centimeters, although nothing in the spectrum depends on the
 * unit: normalized frequencies only see the shape ratios alpha = X/Z and
 * beta = Y/Z.
 */
class CuboidGeometry
{
  public:
    CuboidGeometry(double x, double y, double z);

    /// Build from shape ratios and the volume scale a = V^{1/3}.
    static CuboidGeometry from_shape(double alpha, double beta, double a);
    static CuboidGeometry cube(double edge) { return {edge, edge, edge}; }

    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }
    double z() const noexcept { return z_; }

    double alpha() const noexcept { return x_ / z_; }
    double beta() const noexcept { return y_ / z_; }
    double volume() const noexcept { return x_ * y_ * z_; }
    /// Volume scale a = (X Y Z)^{1/3}.
    double scale() const noexcept;

    /// Same shape, every edge multiplied by factor.
    CuboidGeometry scaled(double factor) const;

    bool operator==(CuboidGeometry const&) const = default;

  private:
    double x_;
    double y_;
    double z_;
};

/// Remove the partitions of an mx * my * mz block of identical cubes.
CuboidGeometry merge_grid(int mx, int my, int mz, double cube_edge);

/// M cubes in a row along x: the cuboid (M e, e, e).
CuboidGeometry merge_inline(int cubes, double cube_edge);

}  // namespace photonbox
