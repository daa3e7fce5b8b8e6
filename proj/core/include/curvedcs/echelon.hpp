#pragma once

#include <map>
#include <optional>
#include <vector>

#include "curvedcs/graded.hpp"

namespace ccs {

/// Subspace of a GradedSpace kept in reduced row echelon form over Q.
/// Rows are normalized (pivot coefficient 1, pivot column eliminated from all
/// other rows), so the basis is canonical: it depends only on the span, not on
/// the insertion order.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(SpacePtr ambient) : ambient_(std::move(ambient)) {}

  const SpacePtr& ambient() const { return ambient_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Reduce a vector modulo the subspace (canonical representative of the
  /// coset, supported on non-pivot columns).
  Element reduce(const Element& v) const;

  /// Insert a vector; returns true if the rank grew.
  bool insert(const Element& v);

  bool contains(const Element& v) const { return reduce(v).is_zero(); }

  /// Canonical RREF basis, ordered by pivot column.
  std::vector<Element> basis() const;

  /// Pivot columns in increasing order.
  std::vector<int> pivots() const;

  /// Coordinates of v in the RREF basis, or nullopt if v is outside the span.
  std::optional<std::vector<Rational>> coordinates(const Element& v) const;

  /// Echelon join (sum of subspaces).
  static Subspace join(const Subspace& a, const Subspace& b);

  /// Span of a list of vectors (all in one ambient space).
  static Subspace span(SpacePtr ambient, const std::vector<Element>& vectors);

  bool operator==(const Subspace& o) const;

 private:
  SpacePtr ambient_;
  std::map<int, std::map<int, Rational>> rows_;  // pivot -> row coefficients
};

/// Quotient of a GradedSpace by a Subspace. The quotient carries its own
/// GradedSpace whose basis is the set of non-pivot ambient coordinates, so a
/// preferred linear section of the projection comes for free. Requires the
/// kernel to be homogeneous (true whenever it was generated by homogeneous
/// vectors).
class QuotientMap {
 public:
  QuotientMap() = default;
  QuotientMap(SpacePtr ambient, Subspace kernel);

  const SpacePtr& ambient() const { return ambient_; }
  const Subspace& kernel() const { return kernel_; }
  const SpacePtr& quotient_space() const { return quotient_; }
  const std::vector<int>& complement_indices() const { return coords_; }

  /// Project an ambient vector to quotient coordinates.
  Element project(const Element& v) const;

  /// Preferred section: quotient coordinate j maps to the ambient basis
  /// vector at the j-th non-pivot column. project(lift(q)) == q.
  Element lift(const Element& q) const;

  /// Push a degree-homogeneous endomorphism of the ambient space down to the
  /// quotient (caller guarantees the kernel is invariant).
  LinearMap induce(const LinearMap& ambient_map) const;

 private:
  SpacePtr ambient_;
  Subspace kernel_;
  std::vector<int> coords_;
  std::vector<int> coord_pos_;  // ambient index -> quotient index or -1
  SpacePtr quotient_;
};

struct CohomologyDegree {
  int degree = 0;
  int dimension = 0;
  std::vector<Element> representatives;  // cocycles spanning a complement of the image
};

/// Cohomology of a finite complex (V, d) with d of degree +1. Throws if
/// d*d != 0.
std::vector<CohomologyDegree> cohomology(const SpacePtr& space, const LinearMap& d);

}  // namespace ccs
