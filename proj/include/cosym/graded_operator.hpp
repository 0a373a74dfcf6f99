#pragma once

// Linear operators on a graded blade space, materialized as one sparse matrix per
// source degree. All arithmetic is exact; equality is entrywise equality.

#include "cosym/blade_space.hpp"
#include "cosym/multivector.hpp"
#include "cosym/rational.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cosym {

/// Affine degree map k -> sign * k + offset. Shifts have sign +1; the Hodge star has
/// sign -1 and offset equal to the coframe size.
struct DegreeMap {
  int sign = 1;
  int offset = 0;

  static constexpr DegreeMap shift(int s) { return {1, s}; }
  static constexpr DegreeMap reflection(int top) { return {-1, top}; }

  constexpr int operator()(int k) const { return sign * k + offset; }
  constexpr DegreeMap after(DegreeMap inner) const {
    return {sign * inner.sign, sign * inner.offset + offset};
  }
  std::optional<int> as_shift() const {
    return sign == 1 ? std::optional<int>(offset) : std::nullopt;
  }
  friend constexpr bool operator==(DegreeMap, DegreeMap) = default;
};

/// Location of a discrepancy between two operators.
struct Witness {
  int degree = 0;
  Blade source;
  Blade target;
  std::string value;  // entry of the difference at (target, source)
};

/// Raised when an operator would map a basis blade outside its space.
class OperatorDomainError : public std::domain_error {
 public:
  OperatorDomainError(const std::string& what, Witness witness)
      : std::domain_error(what), witness_(std::move(witness)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

template <typename Scalar>
class GradedOperator {
 public:
  using Block = SparseMatrix<Scalar>;
  using SpacePtr = std::shared_ptr<const BladeSpace>;

  GradedOperator(SpacePtr space, DegreeMap map, std::string name = {})
      : space_(std::move(space)), map_(map), name_(std::move(name)) {
    blocks_.reserve(space_->max_degree() + 1);
    for (int k = 0; k <= space_->max_degree(); ++k) {
      blocks_.emplace_back(space_->dim(map_(k)), space_->dim(k));
    }
  }

  static GradedOperator zero(SpacePtr space, DegreeMap map) { return GradedOperator(std::move(space), map); }

  static GradedOperator identity(SpacePtr space) {
    return diagonal(std::move(space), [](int) { return Scalar(1); }, "id");
  }

  /// Degree-preserving operator acting on degree k as multiplication by f(k).
  template <typename F>
  static GradedOperator diagonal(SpacePtr space, F&& f, std::string name = {}) {
    GradedOperator op(std::move(space), DegreeMap::shift(0), std::move(name));
    for (int k = 0; k <= op.space_->max_degree(); ++k) {
      const Scalar c = f(k);
      const int d = op.space_->dim(k);
      Block b(d, d);
      if (c != Scalar(0)) {
        b.reserve(Eigen::VectorXi::Constant(d, 1));
        for (int i = 0; i < d; ++i) b.insert(i, i) = c;
      }
      b.makeCompressed();
      op.blocks_[k] = std::move(b);
    }
    return op;
  }

  /// Materializes the linear extension of `action`, which sends each basis blade to
  /// a multivector whose degree agrees with the degree map. Throws std::domain_error
  /// if an image leaves the space.
  template <typename F>
  static GradedOperator from_blade_action(SpacePtr space, DegreeMap map, std::string name, F&& action) {
    GradedOperator op(std::move(space), map, std::move(name));
    const BladeSpace& sp = *op.space_;
    for (int k = 0; k <= sp.max_degree(); ++k) {
      const int target = map(k);
      auto basis = sp.basis(k);
      std::vector<Eigen::Triplet<Scalar>> triplets;
      for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
        const Multivector<Scalar> image = action(basis[col]);
        for (const auto& [b, c] : image.terms()) {
          const auto row = sp.index_of(b);
          if (!row || b.degree() != target) {
            std::ostringstream value;
            value << c;
            throw OperatorDomainError("operator " + op.name_ + " maps a blade outside its target space",
                                      Witness{k, basis[col], b, value.str()});
          }
          triplets.emplace_back(*row, col, c);
        }
      }
      op.blocks_[k].setFromTriplets(triplets.begin(), triplets.end());
      prune_zeros(op.blocks_[k]);
    }
    return op;
  }

  const BladeSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  DegreeMap degree_map() const { return map_; }
  const std::string& name() const { return name_; }
  GradedOperator& rename(std::string name) {
    name_ = std::move(name);
    return *this;
  }

  /// Block from degree k to degree degree_map()(k); zero rows when the target is empty.
  const Block& block(int k) const { return blocks_.at(k); }
  int max_degree() const { return space_->max_degree(); }

  Multivector<Scalar> apply(const Multivector<Scalar>& w) const {
    Multivector<Scalar> out;
    for (const auto& [b, c] : w.terms()) {
      const auto col = space_->index_of(b);
      if (!col) throw std::domain_error("apply: blade outside the operator's space");
      const int k = b.degree();
      const auto target = space_->basis(map_(k));
      for (typename Block::InnerIterator it(blocks_[k], *col); it; ++it) {
        out.add(target[it.row()], c * it.value());
      }
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& b : blocks_) {
      for (int j = 0; j < b.outerSize(); ++j) {
        for (typename Block::InnerIterator it(b, j); it; ++it) {
          if (it.value() != Scalar(0)) return false;
        }
      }
    }
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += static_cast<std::size_t>(b.nonZeros());
    return n;
  }

  /// First nonzero entry of this - other, scanning degrees then columns in order.
  std::optional<Witness> first_difference(const GradedOperator& other) const {
    return first_difference_where(other, [](int) { return true; });
  }

  /// As first_difference, restricted to source degrees k with keep(k).
  template <typename Pred>
  std::optional<Witness> first_difference_where(const GradedOperator& other, Pred&& keep) const {
    require_compatible(other, "compare");
    for (int k = 0; k <= max_degree(); ++k) {
      if (!keep(k)) continue;
      Block diff = blocks_[k] - other.blocks_[k];
      prune_zeros(diff);
      if (diff.nonZeros() == 0) continue;
      for (int j = 0; j < diff.outerSize(); ++j) {
        typename Block::InnerIterator it(diff, j);
        if (!it) continue;
        std::ostringstream value;
        value << it.value();
        return Witness{k, space_->basis(k)[j], space_->basis(map_(k))[it.row()], value.str()};
      }
    }
    return std::nullopt;
  }

  /// First source blade in `sub` whose image has a component outside `sub`.
  std::optional<Witness> leak_witness(const BladeSpace& sub) const {
    for (int k = 0; k <= std::min(sub.max_degree(), max_degree()); ++k) {
      const auto source = space_->basis(k);
      const auto target = space_->basis(map_(k));
      for (int j = 0; j < blocks_[k].outerSize(); ++j) {
        if (!sub.contains(source[j])) continue;
        for (typename Block::InnerIterator it(blocks_[k], j); it; ++it) {
          if (!sub.contains(target[it.row()])) {
            std::ostringstream value;
            value << it.value();
            return Witness{k, source[j], target[it.row()], value.str()};
          }
        }
      }
    }
    return std::nullopt;
  }

  /// Restriction to an invariant subspace spanned by a subset of the basis blades.
  GradedOperator restricted_to(SpacePtr sub) const {
    if (sub->dims() != space_->dims() || (sub->allowed() & ~space_->allowed()) != 0) {
      throw std::invalid_argument("restricted_to: not a subspace");
    }
    if (leak_witness(*sub)) {
      throw std::domain_error("restricted_to: " + name_ + " does not preserve the subspace");
    }
    GradedOperator out(sub, map_, name_);
    for (int k = 0; k <= sub->max_degree(); ++k) {
      const auto source = space_->basis(k);
      const auto target = space_->basis(map_(k));
      std::vector<Eigen::Triplet<Scalar>> triplets;
      for (int j = 0; j < blocks_[k].outerSize(); ++j) {
        if (!sub->contains(source[j])) continue;
        const int col = *sub->index_of(source[j]);
        for (typename Block::InnerIterator it(blocks_[k], j); it; ++it) {
          triplets.emplace_back(*sub->index_of(target[it.row()]), col, it.value());
        }
      }
      out.blocks_[k].setFromTriplets(triplets.begin(), triplets.end());
    }
    return out;
  }

  GradedOperator& operator+=(const GradedOperator& o) {
    require_compatible(o, "add");
    for (int k = 0; k <= max_degree(); ++k) {
      blocks_[k] += o.blocks_[k];
      prune_zeros(blocks_[k]);
    }
    return *this;
  }
  GradedOperator& operator-=(const GradedOperator& o) {
    require_compatible(o, "subtract");
    for (int k = 0; k <= max_degree(); ++k) {
      blocks_[k] -= o.blocks_[k];
      prune_zeros(blocks_[k]);
    }
    return *this;
  }
  GradedOperator& operator*=(const Scalar& s) {
    for (auto& b : blocks_) {
      b *= s;
      prune_zeros(b);
    }
    return *this;
  }

  friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
  friend GradedOperator operator-(GradedOperator a, const GradedOperator& b) { return a -= b; }
  friend GradedOperator operator-(GradedOperator a) { return a *= Scalar(-1); }
  friend GradedOperator operator*(const Scalar& s, GradedOperator a) { return a *= s; }

  /// Composition: (a * b)(w) = a(b(w)).
  friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
    if (!(*a.space_ == *b.space_)) throw std::invalid_argument("compose: operators live on different spaces");
    GradedOperator out(a.space_, a.map_.after(b.map_));
    for (int k = 0; k <= out.max_degree(); ++k) {
      const int middle = b.map_(k);
      if (!a.space_->has_degree(middle)) continue;
      Block product = a.blocks_[middle] * b.blocks_[k];
      prune_zeros(product);
      out.blocks_[k] = std::move(product);
    }
    return out;
  }

  friend bool operator==(const GradedOperator& a, const GradedOperator& b) {
    return !a.first_difference(b).has_value();
  }

 private:
  void require_compatible(const GradedOperator& o, const char* what) const {
    if (!(*space_ == *o.space_) || !(map_ == o.map_)) {
      throw std::invalid_argument(std::string(what) + ": operators have different spaces or degree maps");
    }
  }

  SpacePtr space_;
  DegreeMap map_;
  std::string name_;
  std::vector<Block> blocks_;
};

template <typename Scalar>
GradedOperator<Scalar> commutator(const GradedOperator<Scalar>& a, const GradedOperator<Scalar>& b) {
  return a * b - b * a;
}

template <typename Scalar>
GradedOperator<Scalar> anticommutator(const GradedOperator<Scalar>& a, const GradedOperator<Scalar>& b) {
  return a * b + b * a;
}

/// Wedge on the left by a homogeneous form.
template <typename Scalar>
GradedOperator<Scalar> wedge_operator(std::shared_ptr<const BladeSpace> space, const Multivector<Scalar>& w,
                                      std::string name = {}) {
  const auto d = w.degree();
  if (!d) throw std::invalid_argument("wedge_operator: form must be nonzero and homogeneous");
  return GradedOperator<Scalar>::from_blade_action(std::move(space), DegreeMap::shift(*d), std::move(name),
                                                   [&](Blade b) { return wedge(w, Multivector<Scalar>::blade(b)); });
}

/// Contraction by a vector.
template <typename Scalar>
GradedOperator<Scalar> interior_operator(std::shared_ptr<const BladeSpace> space, const KVector<Scalar>& v,
                                         std::string name = {}) {
  return GradedOperator<Scalar>::from_blade_action(std::move(space), DegreeMap::shift(-1), std::move(name),
                                                   [&](Blade b) { return interior(v, Multivector<Scalar>::blade(b)); });
}

/// Hodge star on the full algebra.
template <typename Scalar>
GradedOperator<Scalar> hodge_operator(std::shared_ptr<const BladeSpace> space) {
  const ModelDims dims = space->dims();
  if (space->allowed() != dims.all_mask()) throw std::invalid_argument("hodge_operator: needs the full algebra");
  return GradedOperator<Scalar>::from_blade_action(space, DegreeMap::reflection(dims.dim()), "*",
                                                   [&](Blade b) { return hodge_star(Multivector<Scalar>::blade(b), dims); });
}

}  // namespace cosym
