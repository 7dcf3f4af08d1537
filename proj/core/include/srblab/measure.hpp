#ifndef SRBLAB_MEASURE_HPP
#define SRBLAB_MEASURE_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include "srblab/orbit.hpp"

namespace srblab {

/// A normalized occupancy histogram on a regular grid over the square.
/// Cells are indexed (row, col) with row 0 at y = +1 (image convention)
/// and col 0 at x = -1; weights sum to 1 after normalization.
struct EmpiricalMeasure {
    int grid_res = 0;
    std::vector<double> weights;  // row-major, grid_res * grid_res
    double total = 0.0;           // raw deposited mass before normalization

    double& at(int row, int col) {
        return weights[static_cast<std::size_t>(row) * grid_res + col];
    }
    double at(int row, int col) const {
        return weights[static_cast<std::size_t>(row) * grid_res + col];
    }
};

/// Mutable deposit grid used to build measures incrementally.
struct GridAccumulator {
    int grid_res = 0;
    std::vector<double> mass;

    explicit GridAccumulator(int res)
        : grid_res(res), mass(static_cast<std::size_t>(res) * res, 0.0) {}
    void deposit(Point2 p, double m);
    void add(const GridAccumulator& other);
    EmpiricalMeasure normalized() const;
};

/// Cell of a point; clamped to the grid.
int grid_row(double y, int grid_res);
int grid_col(double x, int grid_res);

/// Normalized cell-occupancy frequencies over all retained points of the
/// given orbits. Throws EmptyInputError when no points are present.
EmpiricalMeasure histogram(std::span<const OrbitRecord> orbits, int grid_res);

/// L1 distance (total variation times 2) between equal-resolution measures.
double measure_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b);

/// Sums 'factor x factor' blocks; grid_res must be divisible by factor.
EmpiricalMeasure coarsen(const EmpiricalMeasure& m, int factor);

/// Runs an ensemble and bins every recorded step of every completed orbit
/// directly into a histogram (integer per-orbit counts merged in a fixed
/// order, so the result is bitwise independent of worker count). Orbits
/// use the same seeding and resampling rules as ensemble().
EmpiricalMeasure ensemble_histogram(const SingularMap& map, const EnsembleOptions& opt,
                                    int grid_res);

/// CSV rows "row,col,weight" for the nonzero cells, row-major.
void write_measure_csv(const EmpiricalMeasure& m, std::ostream& os);

/// Binary 8-bit PGM (P5, maxval 255), row-major from y = +1 downward,
/// log-scaled occupancy normalized to the maximum cell (dynamic range 1e6).
void write_measure_pgm(const EmpiricalMeasure& m, std::ostream& os);

} // namespace srblab

#endif
