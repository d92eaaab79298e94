#pragma once
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace nrkg {

// Dense row-major tensor of doubles. Rank is 1 or 2 everywhere in this
// codebase; shape is kept generic to keep the invariant checks in one place.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape);
  Tensor(std::vector<std::size_t> shape, std::vector<double> values);
  Tensor(std::initializer_list<std::initializer_list<double>> rows);

  static Tensor zeros(std::size_t rows, std::size_t cols);
  static Tensor zeros_like(const Tensor& other);
  static Tensor vector(std::vector<double> values);
  static Tensor scalar(double v);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t size() const { return data_.size(); }
  std::size_t rows() const;
  std::size_t cols() const;

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& values() { return data_; }
  const std::vector<double>& values() const { return data_; }

  double& operator()(std::size_t r, std::size_t c);
  double operator()(std::size_t r, std::size_t c) const;
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;
  void fill(double v);

  std::string shape_str() const;

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> data_;
};

std::string shape_str(const std::vector<std::size_t>& shape);

}  // namespace nrkg
