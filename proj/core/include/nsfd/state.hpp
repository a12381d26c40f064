#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace nsfd {

/// A point of R^n. Components are finite on construction.
class State {
 public:
  State() = default;
  explicit State(std::vector<double> components);
  State(std::initializer_list<double> components);

  /// Builds a state without the finiteness check. Used by integrators that
  /// must be able to report a divergent iterate instead of throwing.
  static State unchecked(std::vector<double> components);

  std::size_t size() const noexcept { return components_.size(); }
  bool empty() const noexcept { return components_.empty(); }
  double operator[](std::size_t i) const { return components_[i]; }

  std::span<const double> components() const noexcept { return components_; }
  const std::vector<double>& vector() const noexcept { return components_; }
  auto begin() const noexcept { return components_.begin(); }
  auto end() const noexcept { return components_.end(); }

  bool all_finite() const noexcept;

  friend bool operator==(const State&, const State&) = default;

 private:
  std::vector<double> components_;
};

double max_norm(std::span<const double> v) noexcept;
inline double max_norm(const State& y) noexcept { return max_norm(y.components()); }

/// max_i |a_i - b_i|; lengths must agree.
double max_distance(const State& a, const State& b);

std::string to_string(const State& y);
std::ostream& operator<<(std::ostream& os, const State& y);

}  // namespace nsfd
