#pragma once

#include "cosym/blade.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace cosym {

/// Graded basis of the exterior algebra on a subset of coframe indices. Within each
/// degree the blades are listed in lexicographic coframe order.
class BladeSpace {
 public:
  BladeSpace(ModelDims dims, std::uint32_t allowed) : dims_(dims), allowed_(allowed) {
    const int top = std::popcount(allowed_);
    basis_.resize(top + 1);
    // enumerate submasks of `allowed`
    std::uint32_t sub = allowed_;
    while (true) {
      basis_[std::popcount(sub)].push_back(Blade::from_mask(sub));
      if (sub == 0) break;
      sub = (sub - 1) & allowed_;
    }
    for (auto& list : basis_) {
      std::sort(list.begin(), list.end());
      for (std::size_t i = 0; i < list.size(); ++i) position_.emplace(list[i].mask(), static_cast<int>(i));
    }
  }

  static std::shared_ptr<const BladeSpace> full(ModelDims dims) {
    return std::make_shared<const BladeSpace>(dims, dims.all_mask());
  }
  /// Blades without any eta factor.
  static std::shared_ptr<const BladeSpace> horizontal(ModelDims dims) {
    return std::make_shared<const BladeSpace>(dims, dims.horizontal_mask());
  }

  ModelDims dims() const { return dims_; }
  std::uint32_t allowed() const { return allowed_; }
  int max_degree() const { return static_cast<int>(basis_.size()) - 1; }
  bool has_degree(int k) const { return k >= 0 && k <= max_degree(); }

  std::span<const Blade> basis(int k) const {
    if (!has_degree(k)) return {};
    return basis_[k];
  }
  int dim(int k) const { return static_cast<int>(basis(k).size()); }
  int total_dim() const { return 1 << max_degree(); }

  bool contains(Blade b) const { return (b.mask() & ~allowed_) == 0; }

  std::optional<int> index_of(Blade b) const {
    if (!contains(b)) return std::nullopt;
    return position_.at(b.mask());
  }

  friend bool operator==(const BladeSpace& a, const BladeSpace& b) {
    return a.dims_ == b.dims_ && a.allowed_ == b.allowed_;
  }

 private:
  ModelDims dims_;
  std::uint32_t allowed_;
  std::vector<std::vector<Blade>> basis_;
  std::unordered_map<std::uint32_t, int> position_;
};

}  // namespace cosym
