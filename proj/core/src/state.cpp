#include "nsfd/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "nsfd/errors.hpp"

namespace nsfd {

namespace {

void require_finite(const std::vector<double>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!std::isfinite(c[i])) {
      throw InvalidInput("state component " + std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace

State::State(std::vector<double> components) : components_(std::move(components)) {
  require_finite(components_);
}

State::State(std::initializer_list<double> components) : components_(components) {
  require_finite(components_);
}

State State::unchecked(std::vector<double> components) {
  State s;
  s.components_ = std::move(components);
  return s;
}

bool State::all_finite() const noexcept {
  return std::all_of(components_.begin(), components_.end(),
                     [](double v) { return std::isfinite(v); });
}

double max_norm(std::span<const double> v) noexcept {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_distance(const State& a, const State& b) {
  if (a.size() != b.size()) {
    throw InvalidInput("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::string to_string(const State& y) {
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", y[i]);
    if (i) out += ", ";
    out += buf;
  }
  out += ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const State& y) { return os << to_string(y); }

}  // namespace nsfd
