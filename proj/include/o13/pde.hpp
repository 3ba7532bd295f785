#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "o13/k4.hpp"
#include "o13/mat4.hpp"

namespace o13 {

/// Uniform node-centered grid over (x, y, z, t). Nodes on each axis are
/// placed symmetrically about the axis offset, coord_i = (i - (n-1)/2) * h
/// + offset, so that reflection about zero offset is an exact index
/// permutation. Axes with a single node carry no extent.
struct Grid {
  std::array<int, 4> counts;     // nx, ny, nz, nt
  std::array<double, 4> lengths; // full extents
  std::array<double, 4> offsets{0.0, 0.0, 0.0, 0.0};

  double spacing(int axis) const;
  double coord(int axis, int i) const;
  std::size_t size() const;
  std::size_t index(int ix, int iy, int iz, int it) const;
  bool symmetric(int axis) const { return offsets[axis] == 0.0; }
};

/// E, B, rho, J sampled on grid nodes (Gaussian units, c = 1).
struct FieldSample {
  Grid grid;
  std::vector<double> ex, ey, ez;
  std::vector<double> bx, by, bz;
  std::vector<double> rho;
  std::vector<double> jx, jy, jz;
};

/// Closed-form electromagnetic configuration; evaluated pointwise.
struct MaxwellSolution {
  std::function<Vec3(const Vec3&, double)> e;
  std::function<Vec3(const Vec3&, double)> b;
  std::function<double(const Vec3&, double)> rho;
  std::function<Vec3(const Vec3&, double)> j;
};

enum class SolutionId { plane_wave, static_coulomb_free_region, heat_mode };

SolutionId parse_solution_id(std::string_view name);

/// plane_wave: E = x^ cos(z - t), B = y^ cos(z - t), source free.
/// static_coulomb_free_region: point-charge field centered outside the
/// grid box, static and source free inside it. Throws for heat_mode.
MaxwellSolution maxwell_solution(SolutionId id);

/// u(x, t) = exp(-t) sin(x), solving du/dt = d2u/dx2.
std::function<double(double, double)> heat_solution();

FieldSample sample_maxwell(const MaxwellSolution& sol, const Grid& grid);

/// u on a 1+1 grid (ny = nz = 1), flattened x-major.
std::vector<double> sample_heat(const std::function<double(double, double)>& u,
                                const Grid& grid);

/// Charge-correct reflection of all fields about the grid center:
/// P negates E and J and reverses the spatial axes; T negates B and J and
/// reverses time. Pure index permutation plus signs; grids with a nonzero
/// offset on a reflected axis are rejected.
FieldSample reflect_fields(const FieldSample& f, K4Charge r);

/// Same index-permutation reflection for a 1+1 heat sample.
std::vector<double> reflect_heat(const std::vector<double>& u,
                                 const Grid& grid, K4Charge r);

struct MaxwellResiduals {
  double gauss;     // div E - rho
  double monopole;  // div B
  double faraday;   // curl E + dB/dt
  double ampere;    // curl B - J - dE/dt
  double max() const;
};

/// Max-norm residuals of the four equations over interior nodes, using
/// second-order central differences. All four axes need at least five
/// nodes.
MaxwellResiduals maxwell_residual(const FieldSample& f);

/// Max-norm residual of du/dt - d2u/dx2 over interior nodes of a 1+1 grid,
/// optionally reflecting the sample first (r = 1 means none).
double heat_residual(const std::vector<double>& u, const Grid& grid,
                     K4Charge r = k4_one);

/// Least-squares slope of log(norm) against log(h).
double fit_order(const std::vector<double>& hs,
                 const std::vector<double>& norms);

/// One refinement level of a verification run.
struct VerifyPoint {
  std::array<int, 4> counts;
  double h;
  std::array<double, 4> maxwell{};  // gauss, monopole, faraday, ampere
  double norm = 0.0;                // fitted quantity
};

struct VerifyReport {
  std::string case_name;   // maxwell | coulomb | heat
  std::string reflection;  // none | P | T
  std::vector<VerifyPoint> points;
  double fitted_order = 0.0;
};

/// Runs a named case ("maxwell", "maxwell-P", "maxwell-T", "coulomb",
/// "coulomb-P", "coulomb-T", "heat", "heat-P", "heat-T") over the given
/// refinement levels. For Maxwell cases the levels refine the axes the
/// solution varies along; the fitted norm is the max over the four
/// equations. Throws std::invalid_argument for unknown case names.
VerifyReport run_verify(std::string_view case_name,
                        const std::vector<int>& grids);

std::string verify_report_json(const VerifyReport& report);
std::string verify_report_text(const VerifyReport& report);

}  // namespace o13
