#pragma once

namespace hykin {

/// Embedded obstacle description. Geometry is expressed in cell indices,
/// matching how the test cases define their shapes. The interior state is
/// constant and uniform for the whole run; obstacle cells are never
/// integrated, they only feed the stencils of their neighbours.
struct ObstacleSpec {
    enum class Shape { none, rectangle, disk };

    Shape shape = Shape::none;

    // Geometry (cell indices). Rectangles use half extents, disks a radius.
    int center_i = 0;
    int center_j = 0;
    int half_i = 0;
    int half_j = 0;
    int radius = 0;

    // Fixed interior state; temperature follows as pressure/rho.
    double rho = 1.0;
    double pressure = 1.0;
    double ux = 0.0;
    double uy = 0.0;

    // Displacement in cells applied once per time step (0,0 = static).
    int move_di = 0;
    int move_dj = 0;

    bool enabled() const { return shape != Shape::none; }
    double temperature() const { return pressure / rho; }
};

} // namespace hykin
