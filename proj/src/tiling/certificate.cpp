#include "gpv/tiling/certificate.hpp"

#include <stdexcept>

namespace gpv::tiling {

namespace {

Point point_from_json(const nlohmann::json& doc, const char* what) {
    if (!doc.is_array() || doc.size() != 2 || !doc[0].is_number_integer() ||
        !doc[1].is_number_integer())
        throw std::invalid_argument(std::string(what) +
                                    " must be a two-integer array");
    return Point{doc[0].get<long long>(), doc[1].get<long long>()};
}

nlohmann::json point_to_json(Point p) {
    return nlohmann::json::array({p.x, p.y});
}

BNFactorization translation_from_json(const nlohmann::json& doc) {
    BNFactorization f;
    if (!doc.contains("rotation_offset") ||
        !doc["rotation_offset"].is_number_integer())
        throw std::invalid_argument("translation certificate needs an integer "
                                    "rotation_offset");
    f.rotation_offset = doc["rotation_offset"].get<int>();
    if (!doc.contains("factors") || !doc["factors"].is_array() ||
        doc["factors"].size() != 3)
        throw std::invalid_argument(
            "translation certificate needs three factor ranges");
    int expected_begin = 0;
    for (int i = 0; i < 3; ++i) {
        const nlohmann::json& range = doc["factors"][i];
        if (!range.is_array() || range.size() != 2 ||
            !range[0].is_number_integer() || !range[1].is_number_integer())
            throw std::invalid_argument(
                "factor ranges must be [begin, end] integer pairs");
        const int begin = range[0].get<int>();
        const int end = range[1].get<int>();
        if (begin != expected_begin || end < begin)
            throw std::invalid_argument(
                "factor ranges must be contiguous from 0");
        f.factor_lengths[i] = end - begin;
        expected_begin = end;
    }
    f.u = point_from_json(doc.value("u", nlohmann::json()), "u");
    f.v = point_from_json(doc.value("v", nlohmann::json()), "v");
    return f;
}

TorusTiling periodic_from_json(const nlohmann::json& doc) {
    TorusTiling t;
    if (!doc.contains("width") || !doc["width"].is_number_integer() ||
        !doc.contains("height") || !doc["height"].is_number_integer())
        throw std::invalid_argument(
            "periodic certificate needs integer width and height");
    t.width = doc["width"].get<int>();
    t.height = doc["height"].get<int>();
    if (!doc.contains("placements") || !doc["placements"].is_array())
        throw std::invalid_argument(
            "periodic certificate needs a placements array");
    for (const nlohmann::json& pj : doc["placements"]) {
        if (!pj.is_object() || !pj.contains("orientation") ||
            !pj["orientation"].is_number_integer())
            throw std::invalid_argument(
                "each placement needs an integer orientation");
        Placement pl;
        pl.orientation = pj["orientation"].get<int>();
        pl.anchor = point_from_json(pj.value("anchor", nlohmann::json()),
                                    "placement anchor");
        t.placements.push_back(pl);
    }
    return t;
}

}  // namespace

std::string certificate_kind(const TilingCertificate& cert) {
    return std::holds_alternative<BNFactorization>(cert) ? "translation"
                                                         : "periodic";
}

std::optional<TilingCertificate> tile_any(const Polygon& p, int max_dim) {
    if (auto f = bn_factorize(p)) return TilingCertificate{*f};
    if (auto d = pair_domain_search(p)) return TilingCertificate{*d};
    // Out-of-reach torus bounds mean the bounded search has nothing to try;
    // that is a failed search, not a usage error, so report absence.
    if (!has_candidate_torus(p.area(), max_dim)) return std::nullopt;
    if (auto t = torus_search(p, max_dim, TorusOrientations::all_8))
        return TilingCertificate{*t};
    return std::nullopt;
}

bool verify_certificate(const Polygon& p, const TilingCertificate& cert) {
    if (const auto* f = std::get_if<BNFactorization>(&cert))
        return verify_bn(p, *f);
    return verify_torus(p, std::get<TorusTiling>(cert));
}

nlohmann::json certificate_to_json(const TilingCertificate& cert) {
    nlohmann::json doc;
    if (const auto* f = std::get_if<BNFactorization>(&cert)) {
        doc["kind"] = "translation";
        doc["rotation_offset"] = f->rotation_offset;
        const auto [a, b, c] = f->factor_lengths;
        doc["factors"] = nlohmann::json::array(
            {{0, a}, {a, a + b}, {a + b, a + b + c}});
        doc["u"] = point_to_json(f->u);
        doc["v"] = point_to_json(f->v);
        return doc;
    }
    const TorusTiling& t = std::get<TorusTiling>(cert);
    doc["kind"] = "periodic";
    doc["width"] = t.width;
    doc["height"] = t.height;
    doc["placements"] = nlohmann::json::array();
    for (const Placement& pl : t.placements)
        doc["placements"].push_back({{"orientation", pl.orientation},
                                     {"anchor", point_to_json(pl.anchor)}});
    return doc;
}

TilingCertificate certificate_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        throw std::invalid_argument("certificate needs a string \"kind\"");
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "translation") return translation_from_json(doc);
    if (kind == "periodic") return periodic_from_json(doc);
    throw std::invalid_argument("unknown certificate kind \"" + kind + "\"");
}

}  // namespace gpv::tiling
