// SPDX-License-Identifier: Apache-2.0
//
// State file format: JSON with "dims" (array of integers) and "amps"
// (array of [re, im] pairs, length prod(dims), party 1 most significant).

#pragma once

#include "groverian/core.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <string>

namespace groverian {

inline PureState state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("amps"))
    throw std::invalid_argument("state file needs \"dims\" and \"amps\"");
  PureState psi;
  for (const auto& d : j.at("dims")) {
    if (!d.is_number_integer())
      throw std::invalid_argument("dims must be integers");
    psi.dims.push_back(d.get<int>());
  }
  detail::require_dims(psi.dims);
  const auto& amps = j.at("amps");
  if (!amps.is_array() || static_cast<long>(amps.size()) != psi.total_dim())
    throw std::invalid_argument("amps length must equal the product of dims");
  psi.amps = Vector(psi.total_dim());
  long i = 0;
  for (const auto& pair : amps) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("each amplitude must be a [re, im] pair");
    psi.amps(i++) = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  return psi;
}

inline nlohmann::json state_to_json(const PureState& state) {
  nlohmann::json j;
  j["dims"] = state.dims;
  auto& amps = j["amps"] = nlohmann::json::array();
  for (long i = 0; i < state.amps.size(); ++i)
    amps.push_back({state.amps(i).real(), state.amps(i).imag()});
  return j;
}

inline PureState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed state file: ") + e.what());
  }
  return state_from_json(j);
}

inline void save_state(const PureState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write state file: " + path);
  out << state_to_json(state).dump(2) << "\n";
}

}  // namespace groverian
