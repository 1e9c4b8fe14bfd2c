#pragma once

#include <functional>
#include <vector>

#include "mrlab/weight.hpp"

namespace mrlab {

/// Axis-aligned box of grid cells: start index and number of cells per axis.
struct IndexCube {
  std::vector<std::size_t> start;
  std::vector<std::size_t> cells;
};

/// Dyadic cubes of side 2^{-g} * 2L_k at every aligned position, for one generation.
std::vector<IndexCube> dyadic_cubes(const Grid& grid, int generation);
/// Number of dyadic generations available: g = 0 .. log2(min m) - 2.
int dyadic_generation_count(const Grid& grid);
/// Default family: every dyadic generation.
std::vector<IndexCube> default_cube_family(const Grid& grid);

/// (avg_Q gamma) * (avg_Q gamma^{-1/(p-1)})^{p-1} for one cube.
double ap_cube_value(const Weight& gamma, double p, const IndexCube& cube);

/// Max of the two-average product over a cube family. Always >= 1.
double ap_constant(const Weight& gamma, double p, const std::vector<IndexCube>& cubes);

struct ApGenerationValue {
  int generation = 0;
  double side = 0.0;
  std::size_t cube_count = 0;
  double constant = 0.0;
};

/// Per-generation constants over the default dyadic family.
std::vector<ApGenerationValue> ap_profile(const Weight& gamma, double p);

struct ApRefinementStep {
  std::size_t points = 0;
  double constant = 0.0;
};

/// Dyadic-family constant for a weight re-sampled on grids of increasing size.
/// Each refinement adds one generation of cubes around any point singularity.
std::vector<ApRefinementStep> ap_refinement_ladder(
    const std::function<Weight(const Grid&)>& make_weight, const Grid& coarsest, double p,
    int levels);

enum class ApVerdict { stable, growing, inconclusive };

/// Stable when the last relative change is <= stable_tol; growing when every
/// step increases by more than growth_tol.
ApVerdict classify_ladder(const std::vector<ApRefinementStep>& ladder, double stable_tol = 0.02,
                          double growth_tol = 0.05);

}  // namespace mrlab
