#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace maxqc {

/// The quasi-clique density parameter, held as an exact reduced fraction.
///
/// Every threshold derived from gamma is evaluated in integer arithmetic so
/// that boundary cases such as 0.75 * 4 == 3 are never perturbed by rounding.
class Gamma {
 public:
  /// Parses a plain decimal literal ("0.75", "1", ".6", "1.00").
  /// Throws std::invalid_argument on anything else or on a value outside (0, 1].
  static Gamma parse(std::string_view text);
  static Gamma from_fraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  // ceil(gamma * x), x >= 0
  std::int64_t ceil_times(std::int64_t x) const;
  // floor(gamma * x), x >= 0
  std::int64_t floor_times(std::int64_t x) const;
  // floor((1 - gamma) * x), x >= 0
  std::int64_t floor_complement_times(std::int64_t x) const;
  // ceil(x / gamma), x >= 0
  std::int64_t ceil_divided(std::int64_t x) const;

  /// Minimum internal degree a member of a gamma-quasi-clique of `size`
  /// vertices needs: ceil(gamma * (size - 1)).
  std::int64_t min_degree(std::int64_t size) const;

  bool in_solver_range() const { return 2 * num_ >= den_ && num_ <= den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// Shortest decimal rendering ("0.75", "1").
  std::string str() const;

  friend bool operator==(const Gamma&, const Gamma&) = default;

 private:
  Gamma(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace maxqc
