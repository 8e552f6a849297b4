#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace shadowdg {

/// Anything with a contiguous, fixed-size block of doubles: ModalField, AverageField, ...
template <typename S>
concept FieldState = std::copyable<S> && requires(S s, const S cs) {
  { s.values() } -> std::convertible_to<std::span<double>>;
  { cs.values() } -> std::convertible_to<std::span<const double>>;
};

enum class Method { Euler, SSPRK2, SSPRK3 };

inline Method parse_method(std::string_view name) {
  if (name == "euler") return Method::Euler;
  if (name == "ssprk2") return Method::SSPRK2;
  if (name == "ssprk3") return Method::SSPRK3;
  throw std::invalid_argument("unknown integrator '" + std::string(name) + "'");
}

inline const char* to_string(Method m) {
  switch (m) {
    case Method::Euler:
      return "euler";
    case Method::SSPRK2:
      return "ssprk2";
    default:
      return "ssprk3";
  }
}

struct Integrator {
  Method method = Method::SSPRK3;
  double cfl = 0.1;
  double t_final = 1.0;
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, long step) : std::runtime_error(what), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

namespace detail {

// out = alpha * x + beta * y
template <FieldState S>
void combine(S& out, double alpha, const S& x, double beta, const S& y) {
  auto o = out.values();
  auto xs = x.values();
  auto ys = y.values();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = alpha * xs[i] + beta * ys[i];
}

}  // namespace detail

/// One explicit step. SSPRK2/3 are the Shu-Osher convex forms.
template <FieldState S, typename Rhs>
S step(const S& u, Rhs&& rhs, double dt, Method method) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  S next = u;
  switch (method) {
    case Method::Euler:
      detail::combine(next, 1.0, u, dt, rhs(u));
      break;
    case Method::SSPRK2: {
      S u1 = u;
      detail::combine(u1, 1.0, u, dt, rhs(u));
      S tmp = u1;
      detail::combine(tmp, 1.0, u1, dt, rhs(u1));
      detail::combine(next, 0.5, u, 0.5, tmp);
      break;
    }
    case Method::SSPRK3: {
      S u1 = u;
      detail::combine(u1, 1.0, u, dt, rhs(u));
      S tmp = u1;
      detail::combine(tmp, 1.0, u1, dt, rhs(u1));
      S u2 = u;
      detail::combine(u2, 0.75, u, 0.25, tmp);
      detail::combine(tmp, 1.0, u2, dt, rhs(u2));
      detail::combine(next, 1.0 / 3.0, u, 2.0 / 3.0, tmp);
      break;
    }
  }
  return next;
}

template <FieldState S>
struct IntegrationResult {
  S state;
  long steps = 0;
};

/// Integrate to t_final with dt = cfl * dx; the last step is shortened to land on t_final.
/// rhs must be autonomous: rhs(state) -> state.
template <FieldState S, typename Rhs>
IntegrationResult<S> integrate(const S& initial, Rhs&& rhs, const Integrator& integrator, double dx) {
  if (!(integrator.t_final >= 0.0)) throw std::invalid_argument("integrate: t_final must be non-negative");
  if (!(integrator.cfl > 0.0)) throw std::invalid_argument("integrate: cfl must be positive");
  const double dt = integrator.cfl * dx;
  // Tolerate round-off in t_final/dt so an exact multiple does not grow a sliver step.
  const long n_steps = integrator.t_final == 0.0 ? 0 : static_cast<long>(std::ceil(integrator.t_final / dt - 1e-9));

  IntegrationResult<S> result{initial, 0};
  for (long i = 0; i < n_steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    const double h = (i + 1 == n_steps) ? integrator.t_final - t : dt;
    result.state = step(result.state, rhs, h, integrator.method);
    for (double v : std::as_const(result.state).values())
      if (!std::isfinite(v))
        throw IntegrationError("integrate: non-finite state after step " + std::to_string(i + 1), i + 1);
    result.steps = i + 1;
  }
  return result;
}

}  // namespace shadowdg
