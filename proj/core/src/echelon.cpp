#include "curvedcs/echelon.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ccs {

Element Subspace::reduce(const Element& v) const {
  if (!same_space(v.space(), ambient_))
    throw std::invalid_argument("Subspace::reduce: mixed ambient spaces");
  Element r = v;
  for (const auto& [pivot, row] : rows_) {
    Rational c = r.coeff(pivot);
    if (c == 0) continue;
    for (const auto& [j, w] : row) r.add_coeff(j, -c * w);
  }
  return r;
}

bool Subspace::insert(const Element& v) {
  if (!ambient_) ambient_ = v.space();
  Element r = reduce(v);
  if (r.is_zero()) return false;
  int pivot = r.coeffs().begin()->first;
  Rational lead = r.coeffs().begin()->second;
  std::map<int, Rational> row;
  for (const auto& [j, c] : r.coeffs()) row[j] = c / lead;
  // eliminate the new pivot from existing rows
  for (auto& [p, existing] : rows_) {
    auto it = existing.find(pivot);
    if (it == existing.end()) continue;
    Rational c = it->second;
    for (const auto& [j, w] : row) {
      auto [jt, inserted] = existing.try_emplace(j, 0);
      jt->second -= c * w;
      if (jt->second == 0) existing.erase(jt);
    }
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<Element> Subspace::basis() const {
  std::vector<Element> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) {
    Element e(ambient_);
    for (const auto& [j, c] : row) e.set_coeff(j, c);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(pivot);
  return out;
}

std::optional<std::vector<Rational>> Subspace::coordinates(const Element& v) const {
  std::vector<Rational> coords;
  coords.reserve(rows_.size());
  Element r = v;
  for (const auto& [pivot, row] : rows_) {
    Rational c = r.coeff(pivot);
    coords.push_back(c);
    if (c == 0) continue;
    for (const auto& [j, w] : row) r.add_coeff(j, -c * w);
  }
  if (!r.is_zero()) return std::nullopt;
  return coords;
}

Subspace Subspace::join(const Subspace& a, const Subspace& b) {
  Subspace out = a;
  for (const auto& e : b.basis()) out.insert(e);
  return out;
}

Subspace Subspace::span(SpacePtr ambient, const std::vector<Element>& vectors) {
  Subspace out(std::move(ambient));
  for (const auto& v : vectors) {
    if (!same_space(v.space(), out.ambient()))
      throw std::invalid_argument("span: mixed ambient spaces");
    out.insert(v);
  }
  return out;
}

bool Subspace::operator==(const Subspace& o) const { return rows_ == o.rows_; }

QuotientMap::QuotientMap(SpacePtr ambient, Subspace kernel)
    : ambient_(std::move(ambient)), kernel_(std::move(kernel)) {
  std::set<int> piv;
  for (int p : kernel_.pivots()) piv.insert(p);
  coord_pos_.assign(ambient_->dim(), -1);
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (int i = 0; i < ambient_->dim(); ++i) {
    if (piv.count(i)) continue;
    coord_pos_[i] = static_cast<int>(coords_.size());
    coords_.push_back(i);
    labels.push_back(ambient_->label(i));
    degrees.push_back(ambient_->degree(i));
  }
  quotient_ = std::make_shared<GradedSpace>(std::move(labels), std::move(degrees));
}

Element QuotientMap::project(const Element& v) const {
  Element r = kernel_.reduce(v);
  Element out(quotient_);
  for (const auto& [i, c] : r.coeffs()) {
    // reduced vectors are supported on non-pivot columns
    out.set_coeff(coord_pos_[i], c);
  }
  return out;
}

Element QuotientMap::lift(const Element& q) const {
  Element out(ambient_);
  for (const auto& [j, c] : q.coeffs()) out.set_coeff(coords_[j], c);
  return out;
}

LinearMap QuotientMap::induce(const LinearMap& ambient_map) const {
  LinearMap m(quotient_, quotient_);
  for (int j = 0; j < quotient_->dim(); ++j)
    m.set_column(j, project(ambient_map.apply(Element(ambient_, coords_[j]))));
  return m;
}

std::vector<CohomologyDegree> cohomology(const SpacePtr& space, const LinearMap& d) {
  // d^2 = 0 is a precondition, not a report item
  for (int i = 0; i < space->dim(); ++i)
    if (!d.apply(d.column(i)).is_zero())
      throw std::invalid_argument("cohomology: differential does not square to zero");

  std::set<int> degs(space->degrees().begin(), space->degrees().end());
  std::vector<CohomologyDegree> out;
  for (int n : degs) {
    // kernel of d on degree n: solve by row-reducing the transposed system.
    // Build echelon of columns {d(e_i)} with bookkeeping of combinations.
    auto block = space->degree_block(n);
    // kernel via RREF of the matrix rows = images, tracking coefficients:
    // insert pairs (d(e_i), e_i) into an echelon over codomain coordinates.
    struct Tracked {
      std::map<int, Rational> img;  // codomain coords
      Element pre;                  // combination of domain basis
    };
    std::vector<Tracked> rows;
    std::vector<Element> kernel_vecs;
    for (int i : block) {
      Tracked t;
      Element im = d.column(i);
      for (const auto& [j, c] : im.coeffs()) t.img[j] = c;
      t.pre = Element(space, i);
      for (const auto& r : rows) {
        if (t.img.empty()) break;
        auto it = t.img.find(r.img.begin()->first);
        if (it == t.img.end()) continue;
        Rational c = it->second;
        for (const auto& [j, w] : r.img) {
          auto [jt, ins] = t.img.try_emplace(j, 0);
          jt->second -= c * w;
          if (jt->second == 0) t.img.erase(jt);
        }
        Element scaled = r.pre;
        scaled *= c;
        t.pre -= scaled;
      }
      if (t.img.empty()) {
        kernel_vecs.push_back(t.pre);
      } else {
        Rational lead = t.img.begin()->second;
        for (auto& [j, c] : t.img) c /= lead;
        t.pre *= Rational(1) / lead;
        rows.push_back(std::move(t));
        // keep rows ordered by leading coordinate for deterministic reduction
        std::sort(rows.begin(), rows.end(), [](const Tracked& a, const Tracked& b) {
          return a.img.begin()->first < b.img.begin()->first;
        });
      }
    }
    // image of d from degree n-1
    Subspace image(space);
    for (int i = 0; i < space->dim(); ++i)
      if (space->degree(i) == n - 1) image.insert(d.column(i));
    CohomologyDegree cd;
    cd.degree = n;
    Subspace reps = image;
    for (const auto& v : kernel_vecs) {
      Element r = reps.reduce(v);
      if (!r.is_zero()) {
        cd.representatives.push_back(r);
        reps.insert(r);
      }
    }
    cd.dimension = static_cast<int>(cd.representatives.size());
    out.push_back(std::move(cd));
  }
  return out;
}

}  // namespace ccs
