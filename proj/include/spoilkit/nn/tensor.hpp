#pragma once

#include <cassert>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace spoilkit::nn {

// Dense row-major tensor. Activations use (N, C, H, W); fully connected
// activations use (N, F). The scalar type is a template parameter so the
// same operator implementations can be exercised in double precision by the
// gradient checks while production models run in float.
template <typename T>
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<T> data;

  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> s, T fill = T(0))
      : shape(std::move(s)), data(count(shape), fill) {}

  static std::size_t count(const std::vector<std::size_t>& s) {
    std::size_t n = 1;
    for (auto d : s) n *= d;
    return n;
  }

  std::size_t numel() const { return data.size(); }
  std::size_t rank() const { return shape.size(); }
  std::size_t dim(std::size_t i) const { return shape[i]; }

  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  std::string shape_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(shape[i]);
    }
    return s + ")";
  }
};

using Tensorf = Tensor<float>;
using Tensord = Tensor<double>;

}  // namespace spoilkit::nn
