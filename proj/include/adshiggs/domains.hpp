#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "adshiggs/core_algebra.hpp"

namespace adshiggs {

enum class ChartKind { torus, disk_patch, octagon };

/// Discretized coordinate chart. Nodes sit at cell centers of a uniform
/// grid; quadrature weights carry coordinate area (dx dy). For masked
/// charts a cell's weight is its area clipped by a 4x4 supersampled inside
/// test, so boundary cells contribute their covered fraction.
struct ChartGrid {
    ChartKind kind;
    int n = 0;  // nodes per side
    cxd modulus;
    double radius = 0.0;         // disk patch
    double vertex_radius = 0.0;  // octagon
    cxd step_a, step_b;          // node displacement per +i / +j index step
    bool periodic = false;

    std::vector<cxd> z;
    std::vector<double> weight;
    std::vector<uint8_t> inside;
    std::vector<uint8_t> deriv_ok;  // full central stencil available

    std::size_t size() const { return z.size(); }
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * n + i; }
    bool closed_surface() const { return kind != ChartKind::disk_patch; }
    int genus() const { return kind == ChartKind::torus ? 1 : kind == ChartKind::octagon ? 2 : -1; }
    double total_weight() const;
};

using GridPtr = std::shared_ptr<const ChartGrid>;

/// Uniform periodic grid on C / (Z + modulus Z). Weights sum to the area
/// of the fundamental parallelogram, Im(modulus).
GridPtr make_torus(int n, cxd modulus);

/// Uniform grid on [-radius, radius]^2 masked to the disk |z| <= radius.
GridPtr make_disk_patch(double radius, int n);

/// Regular hyperbolic octagon centered at 0 in the Poincare disk with all
/// interior angles pi/4 (the genus-2 gluing condition), vertices at angles
/// j pi/4. Weights are coordinate-area weights.
GridPtr make_genus2_octagon(int n);

/// Euclidean radius of the octagon vertices: the root of the
/// interior-angle-equals-pi/4 equation, solved by bisection.
double octagon_vertex_radius();

/// One complex value per node, with a validity mask (shrinks under
/// differentiation on non-periodic charts).
struct ComplexField {
    GridPtr grid;
    std::vector<cxd> v;
    std::vector<uint8_t> valid;
};

struct RealField {
    GridPtr grid;
    std::vector<double> v;
    std::vector<uint8_t> valid;
};

ComplexField make_field(GridPtr grid);
ComplexField sample(GridPtr grid, const std::function<cxd(cxd)>& f);

enum class Deriv { dz, dzbar, dx, dy };

/// Second-order central differences; dz = (dx - i dy)/2, dzbar = (dx + i dy)/2.
/// On non-periodic charts the result is valid only where the full stencil
/// carries valid input values.
ComplexField derivative(const ComplexField& f, Deriv dir);

/// Weighted sum over nodes that are inside and valid.
double integrate(const RealField& f);

/// Same, checking that the field is real on valid nodes (|Im| below
/// 1e-9 of the field scale); throws std::invalid_argument otherwise.
double integrate(const ComplexField& f);

/// Weighted sum scaled by total inside area / valid area, for integrands
/// only available on an interior-valid mask.
double integrate_renormalized(const RealField& f);

}  // namespace adshiggs
