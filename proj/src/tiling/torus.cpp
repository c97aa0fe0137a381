#include "gpv/tiling/torus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace gpv::tiling {

namespace {

long long wrap(long long value, int modulus) {
    long long m = value % modulus;
    return m < 0 ? m + modulus : m;
}

int cell_index(Point cell, int height) {
    return static_cast<int>(cell.x) * height + static_cast<int>(cell.y);
}

// Orientations to try, skipping ones whose image of the tile duplicates an
// earlier orientation's image (up to translation).
std::vector<int> distinct_orientations(const Polygon& p, TorusOrientations mode) {
    std::vector<int> kept;
    std::set<std::vector<Point>> seen;
    const int limit = mode == TorusOrientations::translations_only
                          ? 1
                          : poly::kOrientationCount;
    for (int o = 0; o < limit; ++o) {
        std::vector<Point> image;
        for (const Point& c : p.cells())
            image.push_back(poly::apply_orientation_cell(o, c));
        Point min = image.front();
        for (const Point& c : image) {
            min.x = std::min(min.x, c.x);
            min.y = std::min(min.y, c.y);
        }
        for (Point& c : image) c = c - min;
        std::sort(image.begin(), image.end());
        if (seen.insert(std::move(image)).second) kept.push_back(o);
    }
    return kept;
}

struct Candidate {
    Placement placement;
    std::vector<int> cells;  // sorted torus cell indices
};

class CoverSearch {
public:
    CoverSearch(const Polygon& p, int width, int height, TorusOrientations mode)
        : width_(width), height_(height), cell_count_(width * height) {
        std::set<std::vector<int>> seen;
        for (int o : distinct_orientations(p, mode)) {
            for (int ax = 0; ax < width; ++ax) {
                for (int ay = 0; ay < height; ++ay) {
                    Placement pl{o, Point{ax, ay}};
                    std::vector<Point> covered =
                        placement_cells(p, width, height, pl);
                    if (covered.empty()) continue;
                    std::vector<int> idx;
                    idx.reserve(covered.size());
                    for (const Point& c : covered)
                        idx.push_back(cell_index(c, height));
                    std::sort(idx.begin(), idx.end());
                    if (!seen.insert(idx).second) continue;  // duplicate copy
                    candidates_.push_back({pl, std::move(idx)});
                }
            }
        }
        by_cell_.resize(cell_count_);
        for (std::size_t k = 0; k < candidates_.size(); ++k)
            for (int cell : candidates_[k].cells) by_cell_[cell].push_back(k);
    }

    std::optional<TorusTiling> run() {
        covered_.assign(cell_count_, false);
        stack_.clear();
        if (extend(0)) {
            TorusTiling tiling;
            tiling.width = width_;
            tiling.height = height_;
            for (std::size_t k : stack_)
                tiling.placements.push_back(candidates_[k].placement);
            return tiling;
        }
        return std::nullopt;
    }

private:
    bool extend(int covered_count) {
        if (covered_count == cell_count_) return true;
        int cell = 0;
        while (covered_[cell]) ++cell;  // least uncovered cell
        for (std::size_t k : by_cell_[cell]) {
            const Candidate& cand = candidates_[k];
            bool clash = false;
            for (int c : cand.cells)
                if (covered_[c]) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            for (int c : cand.cells) covered_[c] = true;
            stack_.push_back(k);
            if (extend(covered_count + static_cast<int>(cand.cells.size())))
                return true;
            stack_.pop_back();
            for (int c : cand.cells) covered_[c] = false;
        }
        return false;
    }

    int width_;
    int height_;
    int cell_count_;
    std::vector<Candidate> candidates_;
    std::vector<std::vector<std::size_t>> by_cell_;
    std::vector<char> covered_;
    std::vector<std::size_t> stack_;
};

}  // namespace

std::vector<Point> placement_cells(const Polygon& p, int width, int height,
                                   const Placement& placement) {
    std::vector<Point> out;
    out.reserve(p.cells().size());
    for (const Point& c : p.cells()) {
        Point q = poly::apply_orientation_cell(placement.orientation, c) +
                  placement.anchor;
        out.push_back({wrap(q.x, width), wrap(q.y, height)});
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) return {};
    return out;
}

std::optional<TorusTiling> torus_cover(const Polygon& p, int width, int height,
                                       TorusOrientations mode) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("torus dimensions must be positive");
    if ((static_cast<long long>(width) * height) % p.area() != 0)
        return std::nullopt;
    return CoverSearch(p, width, height, mode).run();
}

bool has_candidate_torus(long long area, int max_dim) {
    for (int w = 1; w <= max_dim; ++w)
        for (int h = 1; h <= max_dim; ++h)
            if ((static_cast<long long>(w) * h) % area == 0) return true;
    return false;
}

std::optional<TorusTiling> torus_search(const Polygon& p, int max_dim,
                                        TorusOrientations mode) {
    if (max_dim < 1)
        throw std::invalid_argument("max_dim must be at least 1");
    if (!has_candidate_torus(p.area(), max_dim))
        throw std::invalid_argument(
            "max_dim " + std::to_string(max_dim) +
            " is below the smallest torus whose cell count the area " +
            std::to_string(p.area()) + " divides");
    for (int w = 1; w <= max_dim; ++w) {
        for (int h = 1; h <= max_dim; ++h) {
            if ((static_cast<long long>(w) * h) % p.area() != 0) continue;
            if (auto tiling = torus_cover(p, w, h, mode)) return tiling;
        }
    }
    return std::nullopt;
}

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

// A finite-index sublattice of the grid in Hermite form: generated by
// (a, 0) and (b, c) with a*c = index and 0 <= b < a. Folding onto a
// straight torus needs width a and height c * a / gcd(a, b).
struct Lattice {
    long long a = 0;
    long long b = 0;
    long long c = 0;
    long long width = 0;
    long long height = 0;
};

// Residue of a cell modulo the lattice, packed into [0, a*c).
long long residue_index(Point z, const Lattice& lat) {
    const long long k = floor_div(z.y, lat.c);
    const long long y = z.y - k * lat.c;
    long long x = z.x - k * lat.b;
    x -= floor_div(x, lat.a) * lat.a;
    return x * lat.c + y;
}

}  // namespace

std::optional<TorusTiling> pair_domain_search(const Polygon& p) {
    const std::vector<Point>& cells = p.cells();
    const long long pair_size = 2 * p.area();

    // Every index-2*area sublattice, smallest folded torus first so the
    // first domain found yields the smallest certificate.
    std::vector<Lattice> lattices;
    for (long long a = 1; a <= pair_size; ++a) {
        if (pair_size % a != 0) continue;
        const long long c = pair_size / a;
        for (long long b = 0; b < a; ++b)
            lattices.push_back({a, b, c, a, c * (a / std::gcd(a, b))});
    }
    std::sort(lattices.begin(), lattices.end(),
              [](const Lattice& l, const Lattice& r) {
                  return std::tuple(std::max(l.width, l.height), l.a, l.b) <
                         std::tuple(std::max(r.width, r.height), r.a, r.b);
              });

    std::vector<std::vector<Point>> images;
    for (int o = 0; o < poly::kOrientationCount; ++o) {
        images.emplace_back();
        for (const Point& cell : cells)
            images.back().push_back(poly::apply_orientation_cell(o, cell));
    }

    std::vector<char> seen(pair_size);
    for (const Lattice& lat : lattices) {
        for (int o = 0; o < poly::kOrientationCount; ++o) {
            // Partner offsets beyond one lattice cell repeat earlier domains.
            for (long long ty = 0; ty < lat.c; ++ty) {
                for (long long tx = 0; tx < lat.a; ++tx) {
                    std::fill(seen.begin(), seen.end(), 0);
                    bool distinct = true;
                    for (const Point& cell : cells) {
                        char& slot = seen[residue_index(cell, lat)];
                        if (slot) { distinct = false; break; }
                        slot = 1;
                    }
                    for (std::size_t i = 0; distinct && i < images[o].size(); ++i) {
                        char& slot = seen[residue_index(
                            images[o][i] + Point{tx, ty}, lat)];
                        if (slot) distinct = false;
                        slot = 1;
                    }
                    if (!distinct) continue;

                    // The translates of tile + partner by the lattice cover
                    // every residue once; fold them onto the torus.
                    TorusTiling tiling;
                    tiling.width = static_cast<int>(lat.width);
                    tiling.height = static_cast<int>(lat.height);
                    for (long long j = 0; j < lat.height / lat.c; ++j) {
                        const Point shift{j * lat.b, j * lat.c};
                        tiling.placements.push_back(
                            {0, {shift.x % lat.width, shift.y % lat.height}});
                        tiling.placements.push_back(
                            {o, {(shift.x + tx) % lat.width,
                                 (shift.y + ty) % lat.height}});
                    }
                    if (verify_torus(p, tiling)) return tiling;
                }
            }
        }
    }
    return std::nullopt;
}

bool verify_torus(const Polygon& p, const TorusTiling& tiling) {
    const int w = tiling.width;
    const int h = tiling.height;
    if (w < 1 || h < 1 || tiling.placements.empty()) return false;
    const long long cell_count = static_cast<long long>(w) * h;
    if (static_cast<long long>(tiling.placements.size()) * p.area() !=
        cell_count)
        return false;
    std::vector<int> coverage(w * h, 0);
    for (const Placement& pl : tiling.placements) {
        if (pl.orientation < 0 || pl.orientation >= poly::kOrientationCount)
            return false;
        if (pl.anchor.x < 0 || pl.anchor.x >= w || pl.anchor.y < 0 ||
            pl.anchor.y >= h)
            return false;
        std::vector<Point> covered = placement_cells(p, w, h, pl);
        if (covered.empty()) return false;  // wrapped onto itself
        for (const Point& c : covered) ++coverage[cell_index(c, h)];
    }
    for (int count : coverage)
        if (count != 1) return false;
    return true;
}

}  // namespace gpv::tiling
