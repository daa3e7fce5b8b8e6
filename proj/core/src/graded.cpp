#include "curvedcs/graded.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace ccs {

GradedSpace::GradedSpace(std::vector<std::string> labels, std::vector<int> degrees)
    : labels_(std::move(labels)), degrees_(std::move(degrees)) {
  if (labels_.size() != degrees_.size())
    throw std::invalid_argument("GradedSpace: labels/degrees size mismatch");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size())
    throw std::invalid_argument("GradedSpace: duplicate basis labels");
}

std::vector<int> GradedSpace::degree_block(int deg) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (degrees_[i] == deg) out.push_back(i);
  return out;
}

Element::Element(SpacePtr space, int basis_index, Rational coeff)
    : space_(std::move(space)) {
  if (coeff != 0) coeffs_[basis_index] = std::move(coeff);
}

Rational Element::coeff(int i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void Element::set_coeff(int i, Rational c) {
  if (c == 0)
    coeffs_.erase(i);
  else
    coeffs_[i] = std::move(c);
}

void Element::add_coeff(int i, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (!space_) space_ = o.space_;
  for (const auto& [i, c] : o.coeffs_) add_coeff(i, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (!space_) space_ = o.space_;
  for (const auto& [i, c] : o.coeffs_) add_coeff(i, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [i, v] : coeffs_) v *= c;
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [i, v] : r.coeffs_) v = -v;
  return r;
}

std::optional<int> Element::degree() const {
  std::optional<int> deg;
  for (const auto& [i, c] : coeffs_) {
    int d = space_->degree(i);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

std::string Element::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    if (!first) os << " + ";
    os << ccs::to_string(c) << "*" << (space_ ? space_->label(i) : std::to_string(i));
    first = false;
  }
  return os.str();
}

LinearMap::LinearMap(SpacePtr domain, SpacePtr codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  cols_.assign(domain_->dim(), Element(codomain_));
}

LinearMap LinearMap::zero(SpacePtr domain, SpacePtr codomain) {
  return LinearMap(std::move(domain), std::move(codomain));
}

LinearMap LinearMap::identity(SpacePtr space) {
  LinearMap m(space, space);
  for (int i = 0; i < space->dim(); ++i) m.set_column(i, Element(space, i));
  return m;
}

void LinearMap::set_column(int i, Element e) { cols_[i] = std::move(e); }

Element LinearMap::apply(const Element& v) const {
  Element out(codomain_);
  for (const auto& [i, c] : v.coeffs()) {
    Element t = cols_[i];
    t *= c;
    out += t;
  }
  return out;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  LinearMap m(inner.domain_, codomain_);
  for (int i = 0; i < inner.domain_->dim(); ++i)
    m.set_column(i, apply(inner.column(i)));
  return m;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  LinearMap m(domain_, codomain_);
  for (int i = 0; i < domain_->dim(); ++i) m.set_column(i, cols_[i] + o.cols_[i]);
  return m;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  LinearMap m(domain_, codomain_);
  for (int i = 0; i < domain_->dim(); ++i) m.set_column(i, cols_[i] - o.cols_[i]);
  return m;
}

bool LinearMap::operator==(const LinearMap& o) const {
  if (domain_->dim() != o.domain_->dim()) return false;
  for (int i = 0; i < domain_->dim(); ++i)
    if (!(cols_[i] == o.cols_[i])) return false;
  return true;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->dim() == b->dim() && a->degrees() == b->degrees();
}

}  // namespace ccs
