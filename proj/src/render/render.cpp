#include "gpv/render/render.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

#include "gpv/poly/geometry.hpp"

namespace gpv::render {

namespace {

using poly::Point;

void check_canvas(const Canvas& canvas) {
    if (canvas.unit <= 0)
        throw std::invalid_argument("canvas unit size must be positive");
    if (canvas.margin < 0)
        throw std::invalid_argument("canvas margin must not be negative");
    if (canvas.palette.empty())
        throw std::invalid_argument("canvas palette must not be empty");
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Maps lattice coordinates to pixels, with the y axis flipped so larger
// lattice y is drawn higher.
struct Frame {
    long long min_x = 0, min_y = 0, max_x = 0, max_y = 0;  // lattice corners
    int unit = 32;
    int margin = 1;

    long long px(long long x) const { return (x - min_x + margin) * unit; }
    long long py(long long y) const { return (max_y - y + margin) * unit; }
    long long width() const { return (max_x - min_x + 2 * margin) * unit; }
    long long height() const { return (max_y - min_y + 2 * margin) * unit; }
};

std::string document(const Frame& frame, const std::string& body) {
    const std::string w = std::to_string(frame.width());
    const std::string h = std::to_string(frame.height());
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
           w + " " + h + "\" width=\"" + w + "\" height=\"" + h + "\">\n" +
           body + "</svg>\n";
}

std::string cell_rect(const Frame& frame, Point cell, const std::string& fill) {
    return "<rect x=\"" + std::to_string(frame.px(cell.x)) + "\" y=\"" +
           std::to_string(frame.py(cell.y + 1)) + "\" width=\"" +
           std::to_string(frame.unit) + "\" height=\"" +
           std::to_string(frame.unit) + "\" fill=\"" + xml_escape(fill) +
           "\" stroke=\"#2e3440\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string polygon_figure(const poly::Polygon& p, const Canvas& canvas) {
    check_canvas(canvas);
    Frame frame;
    frame.unit = canvas.unit;
    frame.margin = canvas.margin;
    const auto& vertices = p.vertices();
    for (const Point v : vertices) {
        frame.min_x = std::min(frame.min_x, v.x);
        frame.min_y = std::min(frame.min_y, v.y);
        frame.max_x = std::max(frame.max_x, v.x);
        frame.max_y = std::max(frame.max_y, v.y);
    }
    std::string path;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        path += i == 0 ? "M" : " L";
        path += std::to_string(frame.px(vertices[i].x)) + " " +
                std::to_string(frame.py(vertices[i].y));
    }
    path += " Z";
    const std::string body =
        "<path d=\"" + path +
        "\" fill=\"#eceff4\" stroke=\"#2e3440\" stroke-width=\"2\"/>\n";
    return document(frame, body);
}

std::string tiling_figure(const tiling::TilingCertificate& cert,
                          const poly::Polygon& p, int repeats,
                          const Canvas& canvas) {
    check_canvas(canvas);
    if (repeats < 1)
        throw std::invalid_argument("repeats must be at least 1");
    if (!tiling::verify_certificate(p, cert))
        throw std::invalid_argument(
            "certificate does not verify against the polygon");

    // One entry per drawn copy of the tile, in a fixed traversal order.
    std::vector<std::vector<Point>> copies;
    const std::vector<Point> base = p.cells();
    if (const auto* f = std::get_if<tiling::BNFactorization>(&cert)) {
        for (int i = 0; i < repeats; ++i) {
            for (int j = 0; j < repeats; ++j) {
                const Point offset{i * f->u.x + j * f->v.x,
                                   i * f->u.y + j * f->v.y};
                std::vector<Point> copy;
                copy.reserve(base.size());
                for (const Point cell : base) copy.push_back(cell + offset);
                copies.push_back(std::move(copy));
            }
        }
    } else {
        const auto& torus = std::get<tiling::TorusTiling>(cert);
        for (int i = 0; i < repeats; ++i) {
            for (int j = 0; j < repeats; ++j) {
                const Point offset{static_cast<long long>(i) * torus.width,
                                   static_cast<long long>(j) * torus.height};
                for (const auto& placement : torus.placements) {
                    std::vector<Point> copy;
                    copy.reserve(base.size());
                    for (const Point cell : base)
                        copy.push_back(
                            poly::apply_orientation_cell(placement.orientation,
                                                         cell) +
                            placement.anchor + offset);
                    copies.push_back(std::move(copy));
                }
            }
        }
    }

    Frame frame;
    frame.unit = canvas.unit;
    frame.margin = canvas.margin;
    frame.min_x = frame.max_x = copies[0][0].x;
    frame.min_y = frame.max_y = copies[0][0].y;
    for (const auto& copy : copies) {
        for (const Point cell : copy) {
            frame.min_x = std::min(frame.min_x, cell.x);
            frame.min_y = std::min(frame.min_y, cell.y);
            frame.max_x = std::max(frame.max_x, cell.x + 1);
            frame.max_y = std::max(frame.max_y, cell.y + 1);
        }
    }

    std::string body;
    for (std::size_t c = 0; c < copies.size(); ++c) {
        const std::string& fill =
            canvas.palette[c % canvas.palette.size()];
        for (const Point cell : copies[c])
            body += cell_rect(frame, cell, fill);
    }
    return document(frame, body);
}

std::string board_figure(const game::Board& board, const Canvas& canvas) {
    check_canvas(canvas);
    Frame frame;
    frame.unit = canvas.unit;
    frame.margin = canvas.margin;
    frame.min_x = 0;
    frame.min_y = 0;
    frame.max_x = board.length();
    frame.max_y = 1;
    std::string body;
    for (int cell = 1; cell <= board.length(); ++cell)
        body += cell_rect(frame, Point{cell - 1, 0}, "#eceff4");
    for (const int cell : board.occupied()) {
        const long long cx = frame.px(cell - 1) + canvas.unit / 2;
        const long long cy = frame.py(1) + canvas.unit / 2;
        body += "<circle cx=\"" + std::to_string(cx) + "\" cy=\"" +
                std::to_string(cy) + "\" r=\"" +
                std::to_string(canvas.unit * 3 / 8) +
                "\" fill=\"#2e3440\"/>\n";
    }
    return document(frame, body);
}

}  // namespace gpv::render
