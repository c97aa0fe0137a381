#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "gpv/tiling/bn.hpp"
#include "gpv/tiling/torus.hpp"

namespace gpv::tiling {

// Evidence that a polygon tiles the plane: either a boundary-word
// factorization (translation tiling) or a torus cover (periodic tiling that
// may rotate/reflect the tile).
using TilingCertificate = std::variant<BNFactorization, TorusTiling>;

// "translation" for factorizations, "periodic" for torus covers.
std::string certificate_kind(const TilingCertificate& cert);

// Tries the exact factorization first, then the two-tile fundamental-domain
// search, then the bounded torus search with all eight orientations. Absent
// means every stage failed within bounds — the polygon is then "unknown",
// never "does not tile".
std::optional<TilingCertificate> tile_any(const Polygon& p, int max_dim);

bool verify_certificate(const Polygon& p, const TilingCertificate& cert);

nlohmann::json certificate_to_json(const TilingCertificate& cert);

// Parses either certificate kind; throws std::invalid_argument on malformed
// documents.
TilingCertificate certificate_from_json(const nlohmann::json& doc);

}  // namespace gpv::tiling
