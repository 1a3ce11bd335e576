#pragma once

#include "superrep/cliffmat.hpp"
#include "superrep/embed.hpp"
#include "superrep/gkrs.hpp"
#include "superrep/superring.hpp"

#include "json.hpp"

#include <map>
#include <string>

namespace superrep {

using Json = nlohmann::ordered_json;

/// Weights are stored doubled internally. A JSON object carries either
/// "weight" (true coordinates, when integral) or "weight_x2" (doubled
/// coordinates, when the weight sits on the half-integral coset).
void put_weight_x2(Json& obj, const std::string& key, const Weight& w2);

Json multiplet_to_json(const Multiplet& m);
Json decomposition_to_json(const std::map<Weight, long long>& dec_x2);
Json sr_to_json(const SRElement& u);
Json report_to_json(const Report& r);
Json embedding_to_json(const Embedding& e);

/// Accepts {"g":"A2","h_roots":[[2,-1]]}; h roots are in fundamental-weight
/// coordinates of g and an empty list designates the maximal torus.
Embedding embedding_from_json(const Json& j);

/// Comma-separated coordinates, each an integer or a fraction over 2
/// ("1,0" or "3/2,-1/2"); returns doubled coordinates.
Weight parse_weight_x2(const std::string& text, std::size_t rank);

}  // namespace superrep
