#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace darboux {

/// Values sampled on a strictly increasing momentum grid.
class GridFunction {
 public:
  GridFunction() = default;
  /// Throws GridMismatchError on unequal lengths, DomainError on a grid
  /// that is not strictly increasing.
  GridFunction(std::vector<double> grid, std::vector<double> values);

  static GridFunction sample(std::span<const double> grid, const std::function<double(double)>& f);

  std::span<const double> grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return grid_.size(); }
  bool empty() const noexcept { return grid_.empty(); }
  double p(std::size_t i) const { return grid_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Common spacing; throws GridMismatchError if the grid is not uniform
  /// to 1e-9 relative or has fewer than two points.
  double uniform_step() const;

  bool same_grid(const GridFunction& other) const noexcept;

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
};

/// n equally spaced points from lo to hi inclusive (n >= 2).
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// lo, lo + h, ... while <= hi (within h/2); the index-based construction
/// keeps every node an exact multiple lo + i*h.
std::vector<double> uniform_grid(double lo, double hi, double h);

}  // namespace darboux
