#include "superrep/serialize.hpp"

#include <stdexcept>

namespace superrep {

namespace {

Json coords_json(const Weight& w) {
  Json arr = Json::array();
  for (Coord c : w) arr.push_back(c);
  return arr;
}

}  // namespace

void put_weight_x2(Json& obj, const std::string& key, const Weight& w2) {
  if (weight_all_even(w2))
    obj[key] = coords_json(weight_halve(w2));
  else
    obj[key + "_x2"] = coords_json(w2);
}

Json multiplet_to_json(const Multiplet& m) {
  Json arr = Json::array();
  for (const auto& t : m.members) {
    Json entry;
    entry["sign"] = t.sign;
    put_weight_x2(entry, "weight", t.weight);
    arr.push_back(std::move(entry));
  }
  return arr;
}

Json decomposition_to_json(const std::map<Weight, long long>& dec_x2) {
  Json arr = Json::array();
  for (const auto& [w2, mult] : dec_x2) {
    if (mult == 0) continue;
    Json entry;
    put_weight_x2(entry, "weight", w2);
    entry["mult"] = mult;
    arr.push_back(std::move(entry));
  }
  return arr;
}

Json sr_to_json(const SRElement& u) {
  Json out;
  out["degree"] = u.degree;
  out["twist"] = u.twist.name();
  Json terms = Json::array();
  for (const auto& [w2, coeff] : u.terms_x2) {
    if (coeff == 0) continue;
    Json entry;
    put_weight_x2(entry, "weight", w2);
    entry["coeff"] = coeff;
    terms.push_back(std::move(entry));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json report_to_json(const Report& r) {
  Json arr = Json::array();
  for (const auto& c : r.checks) {
    Json entry;
    entry["identity"] = c.identity;
    entry["status"] = c.passed ? "pass" : "fail";
    if (!c.passed) entry["witness"] = c.witness;
    arr.push_back(std::move(entry));
  }
  return arr;
}

Json embedding_to_json(const Embedding& e) {
  Json out;
  out["g"] = e.g.label;
  Json roots = Json::array();
  for (const auto& beta : e.h_simple) roots.push_back(coords_json(beta));
  out["h_roots"] = std::move(roots);
  return out;
}

Embedding embedding_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("g") || !j["g"].is_string())
    throw std::invalid_argument("embedding JSON needs a string field \"g\"");
  RootSystem g = build_root_system(j["g"].get<std::string>());
  std::vector<Weight> roots;
  if (j.contains("h_roots")) {
    const Json& hr = j["h_roots"];
    if (!hr.is_array())
      throw std::invalid_argument("\"h_roots\" must be an array of root vectors");
    for (const Json& rj : hr) {
      if (!rj.is_array())
        throw std::invalid_argument("each entry of \"h_roots\" must be an integer vector");
      Weight beta;
      for (const Json& c : rj) {
        if (!c.is_number_integer())
          throw std::invalid_argument("root coordinates must be integers");
        beta.push_back(c.get<long long>());
      }
      roots.push_back(std::move(beta));
    }
  }
  return build_embedding(g, roots);
}

Weight parse_weight_x2(const std::string& text, std::size_t rank) {
  Weight out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos
                                           ? std::string::npos
                                           : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    bool half = false;
    if (tok.size() > 2 && tok.substr(tok.size() - 2) == "/2") {
      half = true;
      tok.resize(tok.size() - 2);
    }
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse weight coordinate \"" + tok + "\"");
    }
    if (used != tok.size())
      throw std::invalid_argument("cannot parse weight coordinate \"" + tok + "\"");
    out.push_back(half ? value : 2 * value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != rank)
    throw std::invalid_argument("weight has " + std::to_string(out.size()) +
                                " coordinates but the root system has rank " +
                                std::to_string(rank));
  return out;
}

}  // namespace superrep
