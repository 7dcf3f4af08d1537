#include "srblab/measure.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <ostream>

#include "srblab/parallel.hpp"

namespace srblab {

int grid_col(double x, int grid_res) {
    const int c = static_cast<int>((x + 1.0) * 0.5 * grid_res);
    return std::clamp(c, 0, grid_res - 1);
}

int grid_row(double y, int grid_res) {
    const int r = static_cast<int>((1.0 - y) * 0.5 * grid_res);
    return std::clamp(r, 0, grid_res - 1);
}

void GridAccumulator::deposit(Point2 p, double m) {
    mass[static_cast<std::size_t>(grid_row(p.y, grid_res)) * grid_res +
         grid_col(p.x, grid_res)] += m;
}

void GridAccumulator::add(const GridAccumulator& other) {
    for (std::size_t i = 0; i < mass.size(); ++i) mass[i] += other.mass[i];
}

EmpiricalMeasure GridAccumulator::normalized() const {
    EmpiricalMeasure m;
    m.grid_res = grid_res;
    m.weights.assign(mass.size(), 0.0);
    double total = 0.0;
    for (double v : mass) total += v;
    m.total = total;
    if (total > 0.0) {
        for (std::size_t i = 0; i < mass.size(); ++i) m.weights[i] = mass[i] / total;
    }
    return m;
}

EmpiricalMeasure histogram(std::span<const OrbitRecord> orbits, int grid_res) {
    if (grid_res < 1) {
        throw DomainError("histogram: grid_res >= 1 required");
    }
    if (orbits.empty()) {
        throw EmptyInputError("histogram: no orbits");
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(grid_res) * grid_res, 0);
    std::uint64_t total = 0;
    for (const OrbitRecord& rec : orbits) {
        for (const Point2& p : rec.points) {
            counts[static_cast<std::size_t>(grid_row(p.y, grid_res)) * grid_res +
                   grid_col(p.x, grid_res)] += 1;
            ++total;
        }
    }
    if (total == 0) {
        throw EmptyInputError("histogram: orbits carry no retained points");
    }
    EmpiricalMeasure m;
    m.grid_res = grid_res;
    m.total = static_cast<double>(total);
    m.weights.resize(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        m.weights[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
    return m;
}

double measure_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b) {
    if (a.grid_res != b.grid_res) {
        throw GridMismatchError("measure_distance: grids differ");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < a.weights.size(); ++i) {
        d += std::fabs(a.weights[i] - b.weights[i]);
    }
    return d;
}

EmpiricalMeasure coarsen(const EmpiricalMeasure& m, int factor) {
    if (factor < 1 || m.grid_res % factor != 0) {
        throw GridMismatchError("coarsen: factor must divide grid_res");
    }
    const int res = m.grid_res / factor;
    EmpiricalMeasure out;
    out.grid_res = res;
    out.total = m.total;
    out.weights.assign(static_cast<std::size_t>(res) * res, 0.0);
    for (int r = 0; r < m.grid_res; ++r) {
        for (int c = 0; c < m.grid_res; ++c) {
            out.at(r / factor, c / factor) += m.at(r, c);
        }
    }
    return out;
}

EmpiricalMeasure ensemble_histogram(const SingularMap& map, const EnsembleOptions& opt,
                                    int grid_res) {
    if (grid_res < 1) {
        throw DomainError("ensemble_histogram: grid_res >= 1 required");
    }
    if (opt.count <= 0) {
        throw EmptyInputError("ensemble_histogram: count >= 1 required");
    }
    const Rect region = opt.region.value_or(square_K());
    const std::size_t cells = static_cast<std::size_t>(grid_res) * grid_res;
    std::vector<std::uint64_t> counts(cells, 0);
    std::uint64_t total = 0;
    std::mutex merge_mutex;
    const long thin = std::max<long>(1, opt.thin);

    parallel_for(static_cast<std::size_t>(opt.count), opt.workers, [&](std::size_t i) {
        std::vector<std::uint64_t> local(cells, 0);
        std::uint64_t local_total = 0;
        Rng rng = Rng::substream(opt.seed, i);
        for (int attempt = 0; attempt <= opt.max_resamples; ++attempt) {
            const Point2 x0 = sample_initial_point(map, rng, region, opt.collar_eps);
            const OrbitTail burn =
                run_orbit(map, x0, opt.burn_in, opt.collar_eps, [](long, int, Point2) {});
            if (burn.termination != Termination::Completed) continue;
            std::fill(local.begin(), local.end(), 0);
            local_total = 0;
            const OrbitTail tail = run_orbit(
                map, burn.last, opt.n, opt.collar_eps, [&](long k, int, Point2 q) {
                    if (k % thin == 0) {
                        local[static_cast<std::size_t>(grid_row(q.y, grid_res)) * grid_res +
                              grid_col(q.x, grid_res)] += 1;
                        ++local_total;
                    }
                });
            if (tail.termination == Termination::Completed) break;
            local_total = 0;
        }
        if (local_total > 0) {
            std::lock_guard<std::mutex> lock(merge_mutex);
            for (std::size_t c = 0; c < cells; ++c) counts[c] += local[c];
            total += local_total;
        }
    });

    if (total == 0) {
        throw EmptyInputError("ensemble_histogram: no completed orbits");
    }
    EmpiricalMeasure m;
    m.grid_res = grid_res;
    m.total = static_cast<double>(total);
    m.weights.resize(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        m.weights[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
    return m;
}

namespace {

void append_double(std::string& line, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    line.append(buf, res.ptr);
}

} // namespace

void write_measure_csv(const EmpiricalMeasure& m, std::ostream& os) {
    os << "row,col,weight\n";
    std::string line;
    for (int r = 0; r < m.grid_res; ++r) {
        for (int c = 0; c < m.grid_res; ++c) {
            const double w = m.at(r, c);
            if (w == 0.0) continue;
            line.clear();
            line.append(std::to_string(r));
            line.push_back(',');
            line.append(std::to_string(c));
            line.push_back(',');
            append_double(line, w);
            line.push_back('\n');
            os << line;
        }
    }
}

void write_measure_pgm(const EmpiricalMeasure& m, std::ostream& os) {
    double wmax = 0.0;
    for (double w : m.weights) wmax = std::max(wmax, w);
    os << "P5\n" << m.grid_res << " " << m.grid_res << "\n255\n";
    const double log_range = std::log(1e6);
    std::vector<unsigned char> row(static_cast<std::size_t>(m.grid_res));
    for (int r = 0; r < m.grid_res; ++r) {
        for (int c = 0; c < m.grid_res; ++c) {
            const double w = m.at(r, c);
            unsigned char pix = 0;
            if (w > 0.0 && wmax > 0.0) {
                const double v = 1.0 - std::log(wmax / w) / log_range;
                const double scaled = v <= 0.0 ? 1.0 : 1.0 + std::round(254.0 * v);
                pix = static_cast<unsigned char>(std::clamp(scaled, 1.0, 255.0));
            }
            row[static_cast<std::size_t>(c)] = pix;
        }
        os.write(reinterpret_cast<const char*>(row.data()), m.grid_res);
    }
}

} // namespace srblab
