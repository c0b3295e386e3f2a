#include "powergraph/groups.hpp"

#include <stdexcept>

namespace powergraph {

GroupDescriptor GroupDescriptor::Z() { return {GroupKind::Z, 1, HeightFunction(), 0}; }

GroupDescriptor GroupDescriptor::Zn(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be at least 1");
  return {GroupKind::Zn, dim, HeightFunction(), 0};
}

GroupDescriptor GroupDescriptor::Q() { return {GroupKind::Q, 1, HeightFunction(), 0}; }

GroupDescriptor GroupDescriptor::Qn(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be at least 1");
  return {GroupKind::Qn, dim, HeightFunction(), 0};
}

GroupDescriptor GroupDescriptor::Unitary(const HeightFunction& h) {
  return {GroupKind::Unitary, 1, h, 0};
}

GroupDescriptor GroupDescriptor::FiniteCyclic(long long order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  return {GroupKind::FiniteCyclic, 1, HeightFunction(), order};
}

std::string GroupDescriptor::str() const {
  switch (kind_) {
    case GroupKind::Z:
      return "Z";
    case GroupKind::Zn:
      return "Z^" + std::to_string(dim_);
    case GroupKind::Q:
      return "Q";
    case GroupKind::Qn:
      return "Q^" + std::to_string(dim_);
    case GroupKind::Unitary:
      return "U" + height_.str();
    case GroupKind::FiniteCyclic:
      return "C" + std::to_string(order_);
  }
  return "";
}

GroupDescriptor GroupDescriptor::parse(const std::string& s) {
  if (s == "Z") return Z();
  if (s == "Q") return Q();
  if (s.rfind("Z^", 0) == 0) return Zn(std::stoi(s.substr(2)));
  if (s.rfind("Q^", 0) == 0) return Qn(std::stoi(s.substr(2)));
  if (s.rfind("U{", 0) == 0 && s.back() == '}') {
    std::string body = s.substr(2, s.size() - 3);
    std::map<BigInt, HeightValue> entries;
    std::size_t pos = 0;
    while (pos < body.size()) {
      auto comma = body.find(',', pos);
      std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      auto colon = item.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("malformed group descriptor: " + s);
      BigInt p(item.substr(0, colon));
      std::string val = item.substr(colon + 1);
      HeightValue v = val == "inf" ? HeightValue::inf() : HeightValue::fin(std::stoll(val));
      if (entries.count(p)) throw std::invalid_argument("malformed group descriptor: " + s);
      entries.emplace(p, v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return Unitary(HeightFunction::from_entries(entries));
  }
  if (s.size() > 1 && s[0] == 'C') return FiniteCyclic(std::stoll(s.substr(1)));
  throw std::invalid_argument("unknown group descriptor: " + s);
}

bool GroupDescriptor::operator==(const GroupDescriptor& o) const {
  return kind_ == o.kind_ && dim_ == o.dim_ && height_ == o.height_ && order_ == o.order_;
}

bool Element::operator<(const Element& o) const {
  std::size_t k = std::min(coords.size(), o.coords.size());
  for (std::size_t i = 0; i < k; ++i) {
    if (coords[i] != o.coords[i]) return coords[i] < o.coords[i];
  }
  return coords.size() < o.coords.size();
}

std::string Element::str() const {
  if (coords.size() == 1) return coords[0].str();
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += coords[i].str();
  }
  s += ")";
  return s;
}

Element Element::parse(const GroupDescriptor& g, const std::string& s) {
  std::vector<Rational> coords;
  if (g.dimension() == 1) {
    coords.push_back(Rational::parse(s));
  } else {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
      throw std::invalid_argument("malformed element literal: " + s);
    }
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (true) {
      auto comma = body.find(',', pos);
      coords.push_back(Rational::parse(
          body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  Element x(std::move(coords));
  validate_element(g, x);
  return x;
}

Element identity(const GroupDescriptor& g) {
  return Element(std::vector<Rational>(static_cast<std::size_t>(g.dimension()), Rational(0)));
}

bool is_identity(const GroupDescriptor& g, const Element& x) {
  return x == identity(g);
}

bool contains(const GroupDescriptor& g, const Element& x) {
  if (x.coords.size() != static_cast<std::size_t>(g.dimension())) return false;
  switch (g.kind()) {
    case GroupKind::Z:
    case GroupKind::Zn:
      for (const Rational& c : x.coords) {
        if (!c.is_integer()) return false;
      }
      return true;
    case GroupKind::Q:
    case GroupKind::Qn:
      return true;
    case GroupKind::Unitary:
      return contains(g.height(), x.coords[0]);
    case GroupKind::FiniteCyclic:
      return x.coords[0].is_integer() && x.coords[0].num >= 0 && x.coords[0].num < g.order();
  }
  return false;
}

void validate_element(const GroupDescriptor& g, const Element& x) {
  if (!contains(g, x)) throw std::invalid_argument("element/descriptor mismatch");
}

bool arc(const GroupDescriptor& g, const Element& x, const Element& y) {
  validate_element(g, x);
  validate_element(g, y);
  return arc_unchecked(g, x, y);
}

bool arc_unchecked(const GroupDescriptor& g, const Element& x, const Element& y) {
  if (g.kind() == GroupKind::FiniteCyclic) {
    // y = n*x mod k is solvable iff gcd(x, k) divides y; n = k works for y = 0.
    BigInt gk = boost::multiprecision::gcd(x.coords[0].num, BigInt(g.order()));
    return y.coords[0].num % gk == 0;
  }
  std::size_t pivot = x.coords.size();
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (!x.coords[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  if (pivot == x.coords.size()) return y == identity(g);
  Rational n = y.coords[pivot] / x.coords[pivot];
  if (!n.is_integer() || n.is_zero()) return false;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (y.coords[i] != n * x.coords[i]) return false;
  }
  return true;
}

bool adjacent(const GroupDescriptor& g, const Element& x, const Element& y) {
  if (x == y) throw std::invalid_argument("adjacency defined on distinct vertices");
  return arc(g, x, y) || arc(g, y, x);
}

bool related(const GroupDescriptor& g, const Element& x, const Element& y) {
  if (x == y) {
    validate_element(g, x);
    return true;
  }
  return arc(g, x, y) || arc(g, y, x);
}

Element negate(const GroupDescriptor& g, const Element& x) {
  validate_element(g, x);
  if (g.kind() == GroupKind::FiniteCyclic) {
    BigInt k(g.order());
    BigInt r = (k - x.coords[0].num) % k;
    return Element({Rational(r)});
  }
  std::vector<Rational> coords;
  coords.reserve(x.coords.size());
  for (const Rational& c : x.coords) coords.push_back(-c);
  return Element(std::move(coords));
}

Element maximal_cyclic_generator(const GroupDescriptor& g, const Element& x) {
  if (g.kind() != GroupKind::Z && g.kind() != GroupKind::Zn) {
    throw std::invalid_argument("maximal cyclic generator defined for Z and Z^n");
  }
  validate_element(g, x);
  if (is_identity(g, x)) {
    throw std::invalid_argument("identity lies in no maximal cyclic subgroup");
  }
  std::vector<BigInt> ints;
  ints.reserve(x.coords.size());
  for (const Rational& c : x.coords) ints.push_back(c.num);
  BigInt d = gcd_vector(ints);
  std::vector<Rational> coords;
  coords.reserve(x.coords.size());
  for (const Rational& c : x.coords) coords.push_back(Rational(c.num / d));
  return Element(std::move(coords));
}

bool same_component(const GroupDescriptor& g, const Element& x, const Element& y) {
  if (!g.torsion_free()) {
    throw std::invalid_argument("component structure analysed for torsion-free groups");
  }
  validate_element(g, x);
  validate_element(g, y);
  if (is_identity(g, x) || is_identity(g, y)) {
    throw std::invalid_argument("identity input");
  }
  switch (g.kind()) {
    case GroupKind::Z:
    case GroupKind::Q:
    case GroupKind::Unitary:
      return true;
    case GroupKind::Zn: {
      Element a = maximal_cyclic_generator(g, x);
      Element b = maximal_cyclic_generator(g, y);
      return a == b || a == negate(g, b);
    }
    case GroupKind::Qn: {
      // Components of the power graph minus identity are the rational lines.
      std::size_t pivot = 0;
      while (x.coords[pivot].is_zero()) ++pivot;
      if (y.coords[pivot].is_zero()) return false;
      Rational q = y.coords[pivot] / x.coords[pivot];
      for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (y.coords[i] != q * x.coords[i]) return false;
      }
      return true;
    }
    default:
      return false;
  }
}

}  // namespace powergraph
