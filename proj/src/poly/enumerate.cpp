#include "gpv/poly/enumerate.hpp"

#include <set>
#include <string>

#include "gpv/poly/symmetry.hpp"
#include "gpv/poly/word.hpp"

namespace gpv::poly {

namespace {

// Depth-first search over turn words with the first edge fixed to E. The
// final letter is forced (it must turn the last edge back onto the first),
// so only the first n-1 letters are branched. Prunes: revisited lattice
// points, points too far from the origin to return in the remaining steps,
// and letter counts exceeding the counterclockwise totals.
class Search {
public:
    explicit Search(int sides) : n_(sides), max_l_((sides + 4) / 2), max_r_((sides - 4) / 2) {}

    std::set<std::string> run() {
        if (n_ < 4) return {};
        visited_.clear();
        found_.clear();
        word_.clear();
        visited_.insert({0, 0});
        visited_.insert({1, 0});
        extend(1, Dir::E, {1, 0}, 0, 0);
        return std::move(found_);
    }

private:
    void extend(int placed, Dir dir, Point pos, int ls, int rs) {
        if (placed == n_) {
            finish(dir, pos, ls, rs);
            return;
        }
        for (char turn : {'L', 'R'}) {
            int nls = ls + (turn == 'L');
            int nrs = rs + (turn == 'R');
            if (nls > max_l_ || nrs > max_r_) continue;
            Dir nd = apply_turn(dir, turn);
            Point np = pos + unit(nd);
            int remaining = n_ - placed - 1;
            if (manhattan(np) > remaining) continue;
            bool closing = placed + 1 == n_ && np == Point{0, 0};
            if (!closing) {
                auto [it, inserted] = visited_.insert(np);
                if (!inserted) continue;
                word_.push_back(turn);
                extend(placed + 1, nd, np, nls, nrs);
                word_.pop_back();
                visited_.erase(it);
            } else {
                word_.push_back(turn);
                extend(placed + 1, nd, np, nls, nrs);
                word_.pop_back();
            }
        }
    }

    void finish(Dir last_dir, Point pos, int ls, int rs) {
        if (pos != Point{0, 0}) return;
        if (is_horizontal(last_dir)) return;  // wrap turn would be straight
        char wrap = turn_between(last_dir, Dir::E);
        ls += (wrap == 'L');
        rs += (wrap == 'R');
        if (ls != max_l_ || rs != max_r_) return;  // clockwise or coiled walk
        found_.insert(canonical_turns(word_ + wrap));
    }

    int n_;
    int max_l_;
    int max_r_;
    std::set<Point> visited_;
    std::string word_;
    std::set<std::string> found_;
};

}  // namespace

std::vector<Polygon> enumerate_polygons(int sides) {
    std::vector<Polygon> out;
    for (const std::string& word : Search(sides).run())
        out.push_back(Polygon::from_turns(word));
    return out;
}

FamilyCounts family_counts(int sides) {
    FamilyCounts counts;
    for (const Polygon& p : enumerate_polygons(sides)) {
        ++counts.free_count;
        counts.one_sided_count += has_reflection_symmetry(p) ? 1 : 2;
    }
    return counts;
}

}  // namespace gpv::poly
