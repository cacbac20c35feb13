#include "darboux/grid_function.hpp"

#include <cmath>
#include <string>

#include "darboux/errors.hpp"

namespace darboux {

GridFunction::GridFunction(std::vector<double> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (grid_.size() != values_.size()) {
    throw GridMismatchError("GridFunction: grid has " + std::to_string(grid_.size()) +
                            " points but values has " + std::to_string(values_.size()));
  }
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (!(grid_[i] > grid_[i - 1])) {
      throw DomainError("GridFunction: grid must be strictly increasing");
    }
  }
}

GridFunction GridFunction::sample(std::span<const double> grid,
                                  const std::function<double(double)>& f) {
  std::vector<double> values;
  values.reserve(grid.size());
  for (double p : grid) values.push_back(f(p));
  return GridFunction(std::vector<double>(grid.begin(), grid.end()), std::move(values));
}

double GridFunction::uniform_step() const {
  if (grid_.size() < 2) throw GridMismatchError("GridFunction: need at least two points");
  const double h = (grid_.back() - grid_.front()) / static_cast<double>(grid_.size() - 1);
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (std::fabs((grid_[i] - grid_[i - 1]) - h) > 1e-9 * h) {
      throw GridMismatchError("GridFunction: grid is not uniform");
    }
  }
  return h;
}

bool GridFunction::same_grid(const GridFunction& other) const noexcept {
  return grid_ == other.grid_;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw DomainError("linspace: need n >= 2");
  std::vector<double> out(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + h * static_cast<double>(i);
  out.back() = hi;
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, double h) {
  if (!(h > 0.0) || !(hi >= lo)) throw DomainError("uniform_grid: need h > 0 and hi >= lo");
  const auto n = static_cast<std::size_t>(std::floor((hi - lo) / h + 0.5)) + 1;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + h * static_cast<double>(i);
  return out;
}

}  // namespace darboux
