#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "curvedcs/rational.hpp"

namespace ccs {

/// Finite-dimensional graded vector space over Q: an ordered basis of
/// labelled vectors with integer degrees. Immutable after construction.
class GradedSpace {
 public:
  GradedSpace(std::vector<std::string> labels, std::vector<int> degrees);

  int dim() const { return static_cast<int>(degrees_.size()); }
  int degree(int i) const { return degrees_[i]; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// Indices of basis vectors of the given degree, in basis order.
  std::vector<int> degree_block(int deg) const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

/// Sparse vector in a GradedSpace, exact rational coefficients.
class Element {
 public:
  Element() = default;
  explicit Element(SpacePtr space) : space_(std::move(space)) {}
  Element(SpacePtr space, int basis_index, Rational coeff = 1);

  const SpacePtr& space() const { return space_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;

  void set_coeff(int i, Rational c);
  void add_coeff(int i, const Rational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  Element operator-() const;
  bool operator==(const Element& o) const { return coeffs_ == o.coeffs_; }

  /// Degree if all nonzero coefficients sit in a single degree; nullopt for 0
  /// or inhomogeneous vectors.
  std::optional<int> degree() const;

  std::string to_string() const;

 private:
  SpacePtr space_;
  std::map<int, Rational> coeffs_;
};

/// Exact linear map between graded spaces, stored by images of basis vectors.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(SpacePtr domain, SpacePtr codomain);
  static LinearMap zero(SpacePtr domain, SpacePtr codomain);
  static LinearMap identity(SpacePtr space);

  const SpacePtr& domain() const { return domain_; }
  const SpacePtr& codomain() const { return codomain_; }
  const Element& column(int i) const { return cols_[i]; }
  void set_column(int i, Element e);

  Element apply(const Element& v) const;
  LinearMap compose(const LinearMap& inner) const;  // this o inner
  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  bool operator==(const LinearMap& o) const;

 private:
  SpacePtr domain_, codomain_;
  std::vector<Element> cols_;
};

bool same_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace ccs
