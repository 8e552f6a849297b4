#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shadowdg::analysis {

/// Periodic initial data on [0, 1).
struct InitialCondition {
  enum class Kind { Sine, Gauss, Step };
  Kind kind = Kind::Sine;
  double sigma = 0.05;  // Gauss width

  bool smooth() const { return kind != Kind::Step; }

  double operator()(double x) const {
    x -= std::floor(x);
    switch (kind) {
      case Kind::Sine:
        return std::sin(2.0 * std::numbers::pi * x);
      case Kind::Gauss: {
        const double r = (x - 0.5) / sigma;
        return std::exp(-r * r);
      }
      default:
        return (x >= 0.25 && x < 0.75) ? 1.0 : 0.0;
    }
  }

  /// Exact solution of u_t + u_x = 0 at time t.
  double exact(double x, double t) const { return (*this)(x - t); }

  std::string str() const {
    switch (kind) {
      case Kind::Sine:
        return "sine";
      case Kind::Gauss:
        return "gauss:" + std::to_string(sigma);
      default:
        return "step";
    }
  }
};

/// "sine", "step" or "gauss:SIGMA".
inline InitialCondition parse_initial_condition(std::string_view text) {
  InitialCondition ic;
  if (text == "sine") return ic;
  if (text == "step") {
    ic.kind = InitialCondition::Kind::Step;
    return ic;
  }
  if (text.starts_with("gauss")) {
    ic.kind = InitialCondition::Kind::Gauss;
    if (text.size() > 5) {
      if (text[5] != ':') throw std::invalid_argument("bad initial condition '" + std::string(text) + "'");
      const std::string num(text.substr(6));
      std::size_t used = 0;
      try {
        ic.sigma = std::stod(num, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != num.size() || !(ic.sigma > 0.0))
        throw std::invalid_argument("gauss width must be a positive number, got '" + num + "'");
    }
    return ic;
  }
  throw std::invalid_argument("unknown initial condition '" + std::string(text) + "' (sine|gauss:SIGMA|step)");
}

/// p-th derivative of sin(2 pi x).
inline double sine_derivative(int p, double x) {
  const double w = 2.0 * std::numbers::pi;
  return std::pow(w, p) * std::sin(w * x + p * std::numbers::pi / 2.0);
}

}  // namespace shadowdg::analysis
