#include "gpv/tiling/bn.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "gpv/poly/word.hpp"

namespace gpv::tiling {

namespace {

Point displacement(const std::string& steps, int begin, int end) {
    Point d{0, 0};
    for (int i = begin; i < end; ++i)
        d = d + poly::unit(poly::dir_from_char(steps[i]));
    return d;
}

// True when (d.x, d.y) is an integer combination of u and v.
bool in_lattice(Point d, Point u, Point v, long long det) {
    long long alpha = d.x * v.y - d.y * v.x;
    long long beta = u.x * d.y - u.y * d.x;
    return alpha % det == 0 && beta % det == 0;
}

}  // namespace

std::string boundary_steps(const Polygon& p) {
    return poly::steps_from_turns(p.turns());
}

std::string hat(const std::string& steps) {
    std::string out(steps.rbegin(), steps.rend());
    for (char& c : out)
        c = poly::dir_char(poly::opposite(poly::dir_from_char(c)));
    return out;
}

std::optional<BNFactorization> bn_factorize(const Polygon& p) {
    const std::string word = boundary_steps(p);
    const int n = static_cast<int>(word.size());
    if (n % 2 != 0) return std::nullopt;
    const int half = n / 2;
    for (int r = 0; r < n; ++r) {
        const std::string rot = word.substr(r) + word.substr(0, r);
        for (int c = 0; c + 2 <= half; ++c) {
            for (int a = 1; a + c < half; ++a) {
                const int b = half - a - c;
                if (rot.compare(half, a, hat(rot.substr(0, a))) != 0) continue;
                if (rot.compare(half + a, b, hat(rot.substr(a, b))) != 0) continue;
                if (rot.compare(half + a + b, c, hat(rot.substr(a + b, c))) != 0)
                    continue;
                BNFactorization f;
                f.rotation_offset = r;
                f.factor_lengths = {a, b, c};
                f.u = displacement(rot, 0, a + b);
                f.v = displacement(rot, a, half);
                return f;
            }
        }
    }
    return std::nullopt;
}

bool verify_bn(const Polygon& p, const BNFactorization& f) {
    const std::string word = boundary_steps(p);
    const int n = static_cast<int>(word.size());
    const int half = n / 2;
    const auto [a, b, c] = f.factor_lengths;
    if (f.rotation_offset < 0 || f.rotation_offset >= n) return false;
    if (a < 0 || b < 0 || c < 0 || a + b + c != half) return false;
    if ((a == 0) + (b == 0) + (c == 0) > 1) return false;

    const std::string rot =
        word.substr(f.rotation_offset) + word.substr(0, f.rotation_offset);
    if (rot.compare(half, a, hat(rot.substr(0, a))) != 0) return false;
    if (rot.compare(half + a, b, hat(rot.substr(a, b))) != 0) return false;
    if (rot.compare(half + a + b, c, hat(rot.substr(a + b, c))) != 0) return false;

    if (f.u != displacement(rot, 0, a + b)) return false;
    if (f.v != displacement(rot, a, half)) return false;

    // Translates along u and v must partition the plane: the lattice cell
    // count matches the area and no two cells collide modulo the lattice.
    const long long det = f.u.x * f.v.y - f.u.y * f.v.x;
    if (det == 0 || std::llabs(det) != p.area()) return false;
    const std::vector<Point> cells = p.cells();
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            if (in_lattice(cells[j] - cells[i], f.u, f.v, det)) return false;
    return true;
}

}  // namespace gpv::tiling
