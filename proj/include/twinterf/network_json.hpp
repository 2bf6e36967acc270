#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "twinterf/errors.hpp"
#include "twinterf/splitters.hpp"

// JSON wire format for beam-splitter networks:
//
//   {"dim": 4,
//    "elements": [{"i": 0, "j": 2, "r": 0.5, "convention": "real"}, ...],
//    "input_a": 0, "input_b": 2}
//
// "convention" may be omitted (defaults to "real"); all other fields are
// required. Unknown keys are rejected by name.

namespace twinterf {

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<const char*> known,
                                const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) {
      if (it.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw InvalidInput("unknown key \"" + it.key() + "\" in " + where);
  }
}

}  // namespace detail

inline NetworkDescription network_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("network JSON: top level must be an object");
  detail::reject_unknown_keys(j, {"dim", "elements", "input_a", "input_b"}, "network");
  for (const char* key : {"dim", "elements", "input_a", "input_b"}) {
    if (!j.contains(key)) throw InvalidInput(std::string("network JSON: missing \"") + key + "\"");
  }

  NetworkDescription net;
  net.dim = j.at("dim").get<int>();
  net.input_a = j.at("input_a").get<int>();
  net.input_b = j.at("input_b").get<int>();
  if (!j.at("elements").is_array()) throw InvalidInput("network JSON: \"elements\" must be an array");
  for (const auto& ej : j.at("elements")) {
    detail::reject_unknown_keys(ej, {"i", "j", "r", "convention"}, "network element");
    for (const char* key : {"i", "j", "r"}) {
      if (!ej.contains(key)) {
        throw InvalidInput(std::string("network element: missing \"") + key + "\"");
      }
    }
    BeamSplitterElement el;
    el.mode_i = ej.at("i").get<int>();
    el.mode_j = ej.at("j").get<int>();
    el.reflectivity = ej.at("r").get<double>();
    el.convention = ej.contains("convention")
                        ? convention_from_string(ej.at("convention").get<std::string>())
                        : Convention::real;
    net.elements.push_back(el);
  }
  net.validate();
  return net;
}

inline nlohmann::json network_to_json(const NetworkDescription& net) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& el : net.elements) {
    elements.push_back({{"i", el.mode_i},
                        {"j", el.mode_j},
                        {"r", el.reflectivity},
                        {"convention", to_string(el.convention)}});
  }
  return {{"dim", net.dim},
          {"elements", std::move(elements)},
          {"input_a", net.input_a},
          {"input_b", net.input_b}};
}

inline NetworkDescription load_network_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open network file: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("network file " + path.string() + " is not valid JSON: " + e.what());
  }
  return network_from_json(j);
}

}  // namespace twinterf
