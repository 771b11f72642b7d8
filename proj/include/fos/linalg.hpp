#pragma once

#include "fos/rational.hpp"

#include <vector>

namespace fos {

using RatVector = std::vector<Rat>;

/// Incrementally maintained row echelon basis over the rationals.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  bool contains(const RatVector& v) const;
  /// Adds v if it is independent of the current rows; returns whether it was added.
  bool add(const RatVector& v);

 private:
  RatVector reduce(RatVector v) const;

  std::size_t dim_;
  std::vector<RatVector> rows_;      // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<RatVector>& rows);

}  // namespace fos
