#pragma once

#include <string>

#include "json.hpp"
#include "starcol/colouring.hpp"
#include "starcol/detect.hpp"
#include "starcol/graph.hpp"
#include "starcol/tournament.hpp"

namespace starcol {

nlohmann::json to_json(const SimpleGraph& g);
nlohmann::json to_json(const StarColouring& c);
nlohmann::json to_json(const Tournament& t);
nlohmann::json to_json(const RainbowCertificate& cert);

SimpleGraph graph_from_json(const nlohmann::json& j);
StarColouring colouring_from_json(const nlohmann::json& j);
Tournament tournament_from_json(const nlohmann::json& j);
RainbowCertificate certificate_from_json(const nlohmann::json& j);

// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace starcol
