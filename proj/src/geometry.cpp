#include "photonbox/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace photonbox {

namespace {
bool positive(double v)
{
    return v > 0 && std::isfinite(v);
}
}  // namespace

CuboidGeometry::CuboidGeometry(double x, double y, double z) : x_{x}, y_{y}, z_{z}
{
    if (!positive(x) || !positive(y) || !positive(z))
        throw std::invalid_argument("cuboid edges must be positive and finite");
}

CuboidGeometry CuboidGeometry::from_shape(double alpha, double beta, double a)
{
    if (!positive(alpha) || !positive(beta) || !positive(a))
        throw std::invalid_argument("alpha, beta and a must be positive and finite");
    // V = alpha beta Z^3 = a^3
    double z = a / std::cbrt(alpha * beta);
    return {alpha * z, beta * z, z};
}

double CuboidGeometry::scale() const noexcept
{
    return std::cbrt(x_ * y_ * z_);
}

CuboidGeometry CuboidGeometry::scaled(double factor) const
{
    return {x_ * factor, y_ * factor, z_ * factor};
}

CuboidGeometry merge_grid(int mx, int my, int mz, double cube_edge)
{
    if (mx < 1 || my < 1 || mz < 1)
        throw std::invalid_argument("cube counts per axis must be at least 1");
    return {mx * cube_edge, my * cube_edge, mz * cube_edge};
}

CuboidGeometry merge_inline(int cubes, double cube_edge)
{
    return merge_grid(cubes, 1, 1, cube_edge);
}

}  // namespace photonbox
