#include "fos/linalg.hpp"

#include "fos/errors.hpp"

namespace fos {

RatVector RowSpace::reduce(RatVector v) const {
  if (v.size() != dim_) throw InputError("RowSpace: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat factor = v[pivots_[i]];
    if (factor == 0) continue;
    const RatVector& row = rows_[i];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (row[j] != 0) v[j] -= factor * row[j];
    }
  }
  return v;
}

bool RowSpace::contains(const RatVector& v) const {
  const RatVector r = reduce(v);
  for (const Rat& x : r) {
    if (x != 0) return false;
  }
  return true;
}

bool RowSpace::add(const RatVector& v) {
  RatVector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p] == 0) ++p;
  if (p == dim_) return false;
  const Rat lead = r[p];
  for (Rat& x : r) x /= lead;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

std::size_t rank(const std::vector<RatVector>& rows) {
  if (rows.empty()) return 0;
  RowSpace space(rows.front().size());
  for (const auto& r : rows) space.add(r);
  return space.rank();
}

}  // namespace fos
