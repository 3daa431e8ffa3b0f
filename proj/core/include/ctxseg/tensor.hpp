#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ctxseg {

// Dense row-major tensor of doubles. Rank is arbitrary but the library only
// uses rank 1 (vectors), 2 (matrices) and 3 (H x W x C feature maps).
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> extents);

  static Tensor zeros(std::vector<int> extents);
  static Tensor full(std::vector<int> extents, double value);
  static Tensor of(std::vector<int> extents, std::vector<double> values);

  std::int64_t size() const { return static_cast<std::int64_t>(data.size()); }
  int rank() const { return static_cast<int>(shape.size()); }
  int extent(int axis) const;
  bool empty() const { return data.empty(); }
  bool same_shape(const Tensor& other) const { return shape == other.shape; }

  double& operator[](std::int64_t i) { return data[static_cast<std::size_t>(i)]; }
  double operator[](std::int64_t i) const { return data[static_cast<std::size_t>(i)]; }

  // Rank-3 accessors, (row, col, channel).
  double& at(int h, int w, int c);
  double at(int h, int w, int c) const;
  // Rank-2 accessors.
  double& at(int r, int c);
  double at(int r, int c) const;

  void fill(double value);
  bool all_finite() const;

  std::string shape_str() const;
};

std::int64_t shape_product(const std::vector<int>& extents);

// Throws InvalidArgumentError when the tensor contains NaN or Inf.
void check_finite(const Tensor& t, const std::string& context);

}  // namespace ctxseg
