#include "houghton/json_io.hpp"

#include "houghton/errors.hpp"

namespace houghton {

nlohmann::ordered_json element_to_json(const Element& g) {
  nlohmann::ordered_json j;
  j["n"] = g.arity();
  j["v"] = g.lambda_vec();
  auto exc = nlohmann::ordered_json::array();
  for (const auto& e : g.exceptions())
    exc.push_back({{e.first.ray, e.first.coord}, {e.second.ray, e.second.coord}});
  j["exc"] = std::move(exc);
  return j;
}

Element element_from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    auto v = j.at("v").get<std::vector<long long>>();
    std::vector<std::pair<RayPoint, RayPoint>> overrides;
    for (const auto& e : j.at("exc")) {
      if (!e.is_array() || e.size() != 2 || e[0].size() != 2 || e[1].size() != 2)
        throw usage_error("element json: bad exc entry");
      overrides.push_back({{e[0][0].get<int>(), e[0][1].get<long long>()},
                           {e[1][0].get<int>(), e[1][1].get<long long>()}});
    }
    return Element::from_map(n, std::move(v), std::move(overrides));
  } catch (const nlohmann::json::exception& ex) {
    throw usage_error(std::string("element json: ") + ex.what());
  }
}

Element element_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw usage_error("element json: parse failure");
  return element_from_json(j);
}

}  // namespace houghton
