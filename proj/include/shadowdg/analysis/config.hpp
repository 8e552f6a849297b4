#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shadowdg/analysis/initial_condition.hpp"
#include "shadowdg/time_integrator.hpp"

namespace shadowdg::analysis {

enum class Scheme { DgP1, DgP2, Fv1, Fv2Central, Fv2Upwind };

inline Scheme parse_scheme(std::string_view name) {
  if (name == "dg-p1") return Scheme::DgP1;
  if (name == "dg-p2") return Scheme::DgP2;
  if (name == "fv1") return Scheme::Fv1;
  if (name == "fv2-central") return Scheme::Fv2Central;
  if (name == "fv2-upwind") return Scheme::Fv2Upwind;
  throw std::invalid_argument("unknown scheme '" + std::string(name) +
                              "' (dg-p1|dg-p2|fv1|fv2-central|fv2-upwind)");
}

inline const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::DgP1:
      return "dg-p1";
    case Scheme::DgP2:
      return "dg-p2";
    case Scheme::Fv1:
      return "fv1";
    case Scheme::Fv2Central:
      return "fv2-central";
    default:
      return "fv2-upwind";
  }
}

inline bool is_dg(Scheme s) { return s == Scheme::DgP1 || s == Scheme::DgP2; }

/// "20,40,80" -> {20, 40, 80}; must be positive and strictly increasing.
inline std::vector<int> parse_grid_list(std::string_view text) {
  std::vector<int> grids;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad grid entry '" + item + "'");
    grids.push_back(n);
  }
  if (grids.empty()) throw std::invalid_argument("empty grid list");
  return grids;
}

struct RunConfig {
  Scheme scheme = Scheme::DgP2;
  std::vector<int> grids{20, 40, 80, 160, 320};
  double cfl = 0.1;
  double periods = 1.0;  // t_final, in periods of the unit domain
  InitialCondition ic;
  Method integrator = Method::SSPRK3;
  std::string out_dir = "results";
  std::uint64_t seed = 20240601;

  void validate() const {
    if (grids.empty()) throw std::invalid_argument("grid list is empty");
    for (std::size_t i = 0; i < grids.size(); ++i) {
      if (grids[i] < 1) throw std::invalid_argument("grid sizes must be positive");
      if (i > 0 && grids[i] <= grids[i - 1]) throw std::invalid_argument("grid list must be strictly increasing");
    }
    if (!(cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
    if (!(periods >= 0.0)) throw std::invalid_argument("periods must be non-negative");
  }

  bool grids_doubling() const {
    for (std::size_t i = 1; i < grids.size(); ++i)
      if (grids[i] != 2 * grids[i - 1]) return false;
    return true;
  }
};

}  // namespace shadowdg::analysis
