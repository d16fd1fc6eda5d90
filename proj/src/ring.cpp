#include "fpres/ring.hpp"

#include <algorithm>
#include <sstream>

namespace fpres {

SgPtr trivial_monoid() {
  static SgPtr instance = std::make_shared<const FiniteSemigroup>(trivial_monoid_table());
  return instance;
}

RingElement RingElement::of(SgPtr monoid, Elem s, Int coeff) {
  RingElement r(std::move(monoid));
  r.add(s, coeff);
  return r;
}

void RingElement::add(Elem s, Int const& c) {
  if (c == 0) {
    return;
  }
  auto it = coeffs_.find(s);
  if (it == coeffs_.end()) {
    coeffs_.emplace(s, c);
  } else {
    it->second += c;
    if (it->second == 0) {
      coeffs_.erase(it);
    }
  }
}

Int RingElement::coeff(Elem s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? Int(0) : it->second;
}

void RingElement::check_same_ring(RingElement const& other) const {
  if (monoid_ != other.monoid_) {
    throw RingMismatchError("ring elements over different monoids");
  }
}

RingElement& RingElement::operator+=(RingElement const& other) {
  check_same_ring(other);
  for (auto const& [s, c] : other.coeffs_) {
    add(s, c);
  }
  return *this;
}

RingElement& RingElement::operator-=(RingElement const& other) {
  check_same_ring(other);
  for (auto const& [s, c] : other.coeffs_) {
    add(s, -c);
  }
  return *this;
}

RingElement RingElement::operator+(RingElement const& other) const {
  RingElement out = *this;
  out += other;
  return out;
}

RingElement RingElement::operator-(RingElement const& other) const {
  RingElement out = *this;
  out -= other;
  return out;
}

RingElement RingElement::operator-() const {
  RingElement out(monoid_);
  for (auto const& [s, c] : coeffs_) {
    out.coeffs_.emplace(s, -c);
  }
  return out;
}

RingElement RingElement::operator*(Int const& c) const {
  RingElement out(monoid_);
  if (c == 0) {
    return out;
  }
  for (auto const& [s, v] : coeffs_) {
    out.coeffs_.emplace(s, v * c);
  }
  return out;
}

RingElement RingElement::operator*(RingElement const& other) const {
  check_same_ring(other);
  RingElement out(monoid_);
  for (auto const& [s, c] : coeffs_) {
    for (auto const& [t, d] : other.coeffs_) {
      out.add(monoid_->product(s, t), c * d);
    }
  }
  return out;
}

bool RingElement::operator==(RingElement const& other) const {
  return monoid_ == other.monoid_ && coeffs_ == other.coeffs_;
}

Int RingElement::augmentation() const {
  Int sum = 0;
  for (auto const& [s, c] : coeffs_) {
    sum += c;
  }
  return sum;
}

std::string RingElement::to_string() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (auto const& [s, c] : coeffs_) {
    if (!first) {
      os << (c > 0 ? " + " : " - ");
    } else if (c < 0) {
      os << "-";
    }
    Int a = abs(c);
    if (a != 1) {
      os << a << "*";
    }
    os << monoid_->name(s);
    first = false;
  }
  return os.str();
}

std::string Label::text() const {
  switch (kind) {
    case Kind::Unit:
      return "[.]";
    case Kind::Gen:
      return "[x" + std::to_string(stratum) + "." + std::to_string(index) + "]";
    case Kind::Pair:
      return "[f" + std::to_string(idem) + ",x" + std::to_string(stratum) + "."
             + std::to_string(index) + "]";
    case Kind::Idem:
      return "[e" + std::to_string(idem) + "]";
  }
  return "[?]";
}

FreeModule::FreeModule(SgPtr monoid, std::vector<Label> labels)
    : monoid_(std::move(monoid)), labels_(std::move(labels)) {
  if (!monoid_->is_monoid()) {
    throw NotAMonoidError("free modules require an acting monoid");
  }
  auto sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("DuplicateLabel", "module basis labels must be distinct");
  }
}

std::size_t FreeModule::position(Label const& l) const {
  auto it = std::find(labels_.begin(), labels_.end(), l);
  if (it == labels_.end()) {
    throw Error("NoSuchLabel", "label " + l.text() + " not in module basis");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

ModPtr make_module(SgPtr monoid, std::vector<Label> labels) {
  return std::make_shared<const FreeModule>(std::move(monoid), std::move(labels));
}

ModPtr integers_module() {
  static ModPtr instance = make_module(trivial_monoid(), {Label::make_unit()});
  return instance;
}

ModuleElement::ModuleElement(ModPtr module) : module_(std::move(module)) {
  comps_.assign(module_->rank(), RingElement(module_->monoid()));
}

ModuleElement ModuleElement::basis(ModPtr module, std::size_t position) {
  ModuleElement m(module);
  Elem one = *m.module_->monoid()->identity();
  m.comps_[position].add(one, 1);
  return m;
}

bool ModuleElement::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](RingElement const& c) { return c.is_zero(); });
}

ModuleElement& ModuleElement::operator+=(ModuleElement const& other) {
  if (!module_->same_as(*other.module_)) {
    throw RingMismatchError("module elements from different modules");
  }
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    comps_[i] += other.comps_[i];
  }
  return *this;
}

ModuleElement& ModuleElement::operator-=(ModuleElement const& other) {
  if (!module_->same_as(*other.module_)) {
    throw RingMismatchError("module elements from different modules");
  }
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    comps_[i] -= other.comps_[i];
  }
  return *this;
}

ModuleElement ModuleElement::operator+(ModuleElement const& other) const {
  ModuleElement out = *this;
  out += other;
  return out;
}

ModuleElement ModuleElement::operator-(ModuleElement const& other) const {
  ModuleElement out = *this;
  out -= other;
  return out;
}

ModuleElement ModuleElement::operator*(Int const& c) const {
  ModuleElement out = *this;
  for (auto& comp : out.comps_) {
    comp = comp * c;
  }
  return out;
}

bool ModuleElement::operator==(ModuleElement const& other) const {
  return module_->same_as(*other.module_) && comps_ == other.comps_;
}

std::string ModuleElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) {
      continue;
    }
    if (!first) {
      os << " + ";
    }
    os << "(" << comps_[i].to_string() << ")" << module_->labels()[i].text();
    first = false;
  }
  return first ? "0" : os.str();
}

ModuleElement scalar_act(RingElement const& lam, ModuleElement const& m) {
  ModuleElement out(m.module());
  if (m.module()->monoid() == trivial_monoid()
      && lam.monoid() != trivial_monoid()) {
    // trivial module: scalars act through the augmentation
    Int z = lam.augmentation();
    for (std::size_t i = 0; i < m.module()->rank(); ++i) {
      out.component(i) = m.component(i) * z;
    }
    return out;
  }
  if (lam.monoid() != m.module()->monoid()) {
    throw RingMismatchError("scalar and module over different monoids");
  }
  for (std::size_t i = 0; i < m.module()->rank(); ++i) {
    out.component(i) = lam * m.component(i);
  }
  return out;
}

ModuleMap::ModuleMap(ModPtr domain, ModPtr codomain, std::vector<ModuleElement> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_->rank()) {
    throw DimensionMismatchError("one image per domain basis label required");
  }
  for (auto const& im : images_) {
    if (!im.module()->same_as(*codomain_)) {
      throw RingMismatchError("image not in the codomain");
    }
  }
}

ModuleElement ModuleMap::apply(ModuleElement const& m) const {
  if (!m.module()->same_as(*domain_)) {
    throw RingMismatchError("argument not in the domain");
  }
  ModuleElement out(codomain_);
  for (std::size_t i = 0; i < domain_->rank(); ++i) {
    if (!m.component(i).is_zero()) {
      out += scalar_act(m.component(i), images_[i]);
    }
  }
  return out;
}

ModuleMap ModuleMap::compose(ModuleMap const& f) const {
  if (!f.codomain_->same_as(*domain_)) {
    throw DimensionMismatchError("composition shape mismatch");
  }
  std::vector<ModuleElement> images;
  images.reserve(f.domain_->rank());
  for (auto const& im : f.images_) {
    images.push_back(apply(im));
  }
  return ModuleMap(f.domain_, codomain_, std::move(images));
}

bool ModuleMap::is_zero_map() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](ModuleElement const& m) { return m.is_zero(); });
}

ModuleMap ModuleMap::with_bumped_coefficient(std::size_t label_pos, std::size_t comp,
                                             Elem elem, Int const& delta) const {
  std::vector<ModuleElement> images = images_;
  images[label_pos].component(comp).add(elem, delta);
  return ModuleMap(domain_, codomain_, std::move(images));
}

ModuleMap augmentation(SgPtr monoid) {
  if (!monoid->is_monoid()) {
    throw NotAMonoidError("augmentation requires a monoid");
  }
  ModPtr dom = make_module(monoid, {Label::make_unit()});
  ModuleElement one = ModuleElement::basis(integers_module(), 0);
  return ModuleMap(dom, integers_module(), {one});
}

std::size_t flat_dim(FreeModule const& m) { return m.rank() * m.monoid()->order(); }

IntRow flatten(ModuleElement const& x) {
  std::size_t n = x.module()->monoid()->order();
  IntRow row(flat_dim(*x.module()));
  for (std::size_t b = 0; b < x.module()->rank(); ++b) {
    for (auto const& [s, c] : x.component(b).coeffs()) {
      row[b * n + s] = c;
    }
  }
  return row;
}

ModuleElement unflatten(ModPtr module, IntRow const& row) {
  if (row.size() != flat_dim(*module)) {
    throw DimensionMismatchError("flattened row has wrong dimension");
  }
  std::size_t n = module->monoid()->order();
  ModuleElement out(module);
  for (std::size_t b = 0; b < module->rank(); ++b) {
    for (std::size_t s = 0; s < n; ++s) {
      out.component(b).add(static_cast<Elem>(s), row[b * n + s]);
    }
  }
  return out;
}

IntMatrix z_matrix_of(ModuleMap const& f) {
  std::size_t n = f.domain()->monoid()->order();
  IntMatrix m(flat_dim(*f.domain()), flat_dim(*f.codomain()));
  for (std::size_t b = 0; b < f.domain()->rank(); ++b) {
    for (std::size_t s = 0; s < n; ++s) {
      RingElement lam = RingElement::of(f.domain()->monoid(), static_cast<Elem>(s));
      IntRow row = flatten(scalar_act(lam, f.image_of(b)));
      for (std::size_t c = 0; c < row.size(); ++c) {
        m.at(b * n + s, c) = std::move(row[c]);
      }
    }
  }
  return m;
}

}  // namespace fpres
