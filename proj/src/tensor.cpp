#include "nrkg/tensor.hpp"

#include <cmath>
#include <sstream>

#include "nrkg/error.hpp"

namespace nrkg {

namespace {
std::size_t product(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (auto s : shape) n *= s;
  return n;
}
}  // namespace

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(product(shape_), 0.0) {
  for (auto s : shape_)
    if (s == 0) throw DimensionError("tensor extent must be positive, got shape " + shape_str());
}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> values)
    : shape_(std::move(shape)), data_(std::move(values)) {
  if (product(shape_) != data_.size())
    throw DimensionError("tensor shape " + shape_str() + " does not match value count " +
                         std::to_string(data_.size()));
}

Tensor::Tensor(std::initializer_list<std::initializer_list<double>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  shape_ = {r, c};
  data_.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged initializer for tensor");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Tensor Tensor::zeros(std::size_t rows, std::size_t cols) { return Tensor({rows, cols}); }

Tensor Tensor::zeros_like(const Tensor& other) {
  Tensor t;
  t.shape_ = other.shape_;
  t.data_.assign(other.data_.size(), 0.0);
  return t;
}

Tensor Tensor::vector(std::vector<double> values) {
  Tensor t;
  t.shape_ = {values.size()};
  t.data_ = std::move(values);
  return t;
}

Tensor Tensor::scalar(double v) {
  Tensor t;
  t.shape_ = {1};
  t.data_ = {v};
  return t;
}

std::size_t Tensor::rows() const { return shape_.empty() ? 0 : shape_[0]; }

std::size_t Tensor::cols() const {
  if (shape_.size() == 1) return 1;
  return shape_.size() >= 2 ? shape_[1] : 0;
}

double& Tensor::operator()(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
double Tensor::operator()(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

bool Tensor::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

void Tensor::fill(double v) {
  for (auto& x : data_) x = v;
}

std::string Tensor::shape_str() const { return nrkg::shape_str(shape_); }

std::string shape_str(const std::vector<std::size_t>& shape) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) os << "x";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

}  // namespace nrkg
