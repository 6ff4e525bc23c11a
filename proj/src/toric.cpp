#include "hilbtaut/toric.hpp"

#include <cctype>
#include <string>

#include "hilbtaut/error.hpp"

namespace hilbtaut {

namespace {

Chart make_chart(const std::vector<std::array<long, 2>>& rays, int i, int j) {
  const auto& u1 = rays[i];
  const auto& u2 = rays[j];
  const long det = u1[0] * u2[1] - u1[1] * u2[0];
  if (det != 1 && det != -1) throw Error(ErrorCode::internal, "non-smooth cone in fan");
  Chart c;
  c.ray1 = i;
  c.ray2 = j;
  c.m1 = {u2[1] * det, -u2[0] * det};
  c.m2 = {-u1[1] * det, u1[0] * det};
  c.w1 = -c.m1;
  c.w2 = -c.m2;
  return c;
}

ToricSurface from_fan(std::string name, std::vector<std::array<long, 2>> rays) {
  ToricSurface s;
  s.name = std::move(name);
  s.rays = std::move(rays);
  const int k = static_cast<int>(s.rays.size());
  for (int i = 0; i < k; ++i) s.charts.push_back(make_chart(s.rays, i, (i + 1) % k));
  return s;
}

std::vector<long> divisor_of(const ToricSurface& s, const std::vector<long>& coords) {
  if (coords.size() != s.rank()) {
    throw Error(ErrorCode::invalid_argument, "line bundle on " + s.name + " needs " + std::to_string(s.rank()) +
                                                 " coordinates, got " + std::to_string(coords.size()));
  }
  std::vector<long> d(s.rays.size(), 0);
  for (std::size_t g = 0; g < coords.size(); ++g) {
    for (std::size_t rho = 0; rho < d.size(); ++rho) d[rho] += coords[g] * s.generator_divisors[g][rho];
  }
  return d;
}

const Specialization kValidationPoint{rational(3, 7), rational(-11, 5)};

void validate(const ToricSurface& s) {
  const std::size_t g = s.rank();
  for (std::size_t i = 0; i < g; ++i) {
    std::vector<long> ei(g, 0);
    ei[i] = 1;
    std::vector<Character> li;
    std::vector<Character> kc;
    for (std::size_t c = 0; c < s.charts.size(); ++c) {
      li.push_back(lift_at(s, {ei, {}}, c));
      kc.push_back(canonical_lift_at(s, c));
    }
    for (std::size_t j = 0; j < g; ++j) {
      std::vector<long> ej(g, 0);
      ej[j] = 1;
      std::vector<Character> lj;
      for (std::size_t c = 0; c < s.charts.size(); ++c) lj.push_back(lift_at(s, {ej, {}}, c));
      if (localize_on_surface(s, li, lj, kValidationPoint) != s.pairing[i][j]) {
        throw Error(ErrorCode::internal, s.name + ": localized pairing disagrees with stored intersection data");
      }
    }
    if (localize_on_surface(s, li, kc, kValidationPoint) != s.intersect(ei, s.canonical)) {
      throw Error(ErrorCode::internal, s.name + ": localized L.K disagrees with stored canonical class");
    }
  }
  std::vector<Character> kc;
  for (std::size_t c = 0; c < s.charts.size(); ++c) kc.push_back(canonical_lift_at(s, c));
  if (localize_on_surface(s, kc, kc, kValidationPoint) != s.Ksq || s.intersect(s.canonical, s.canonical) != s.Ksq) {
    throw Error(ErrorCode::internal, s.name + ": K^2 mismatch");
  }
}

}  // namespace

long ToricSurface::intersect(const std::vector<long>& x, const std::vector<long>& y) const {
  long out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) out += x[i] * pairing[i][j] * y[j];
  }
  return out;
}

const std::vector<std::string>& surface_names() {
  static const std::vector<std::string> names{"p2", "p1xp1", "f1"};
  return names;
}

ToricSurface make_surface(std::string_view name) {
  ToricSurface s;
  if (name == "p2") {
    s = from_fan("p2", {{1, 0}, {0, 1}, {-1, -1}});
    s.generator_names = {"H"};
    s.generator_divisors = {{0, 0, 1}};
    s.pairing = {{1}};
    s.canonical = {-3};
    s.Ksq = 9;
  } else if (name == "p1xp1") {
    s = from_fan("p1xp1", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    s.generator_names = {"F1", "F2"};
    s.generator_divisors = {{1, 0, 0, 0}, {0, 1, 0, 0}};
    s.pairing = {{0, 1}, {1, 0}};
    s.canonical = {-2, -2};
    s.Ksq = 8;
  } else if (name == "f1") {
    // H = D_{(0,-1)} pulls back the hyperplane class, E = D_{(0,1)} is the exceptional curve.
    s = from_fan("f1", {{1, 0}, {0, 1}, {-1, 1}, {0, -1}});
    s.generator_names = {"H", "E"};
    s.generator_divisors = {{0, 0, 0, 1}, {0, 1, 0, 0}};
    s.pairing = {{1, 0}, {0, -1}};
    s.canonical = {-3, 1};
    s.Ksq = 8;
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown surface '" + std::string(name) + "' (expected p2, p1xp1, f1)");
  }
  s.chiO = 1;
  validate(s);
  return s;
}

Character lift_at(const ToricSurface& s, const LineBundle& l, std::size_t chart) {
  const std::vector<long> d = divisor_of(s, l.coords);
  const Chart& c = s.charts[chart];
  return (-d[c.ray1]) * c.m1 + (-d[c.ray2]) * c.m2 + l.shift;
}

Character canonical_lift_at(const ToricSurface& s, std::size_t chart) {
  const Chart& c = s.charts[chart];
  return -(c.w1 + c.w2);
}

int EqKClass::rank() const {
  int r = 0;
  for (const auto& t : terms) r += t.sign;
  return r;
}

std::vector<long> EqKClass::c1() const {
  if (terms.empty()) return {};
  std::vector<long> out(terms.front().bundle.coords.size(), 0);
  for (const auto& t : terms) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += t.sign * t.bundle.coords[i];
  }
  return out;
}

BigRational localize_on_surface(const ToricSurface& s, const std::vector<Character>& a,
                                const std::vector<Character>& b, const Specialization& q) {
  BigRational out = 0;
  for (std::size_t c = 0; c < s.charts.size(); ++c) {
    const BigRational e = q(s.charts[c].w1) * q(s.charts[c].w2);
    out += q(a[c]) * q(b[c]) / e;
  }
  return out;
}

ClassNumerics class_numerics(const ToricSurface& s, const EqKClass& alpha) {
  ClassNumerics n;
  n.s = alpha.rank();
  n.chiO = s.chiO;
  n.Ksq = s.Ksq;
  std::vector<long> c1 = alpha.c1();
  if (c1.empty()) c1.assign(s.rank(), 0);
  n.c1sq = s.intersect(c1, c1);
  long sum_sq = 0;
  for (const auto& t : alpha.terms) sum_sq += t.sign * s.intersect(t.bundle.coords, t.bundle.coords);
  if ((n.c1sq - sum_sq) % 2 != 0) throw Error(ErrorCode::internal, "c2 of a K-class came out non-integral");
  n.c2 = (n.c1sq - sum_sq) / 2;
  n.c1K = s.intersect(c1, s.canonical);
  const long l_minus_k = n.c1sq - n.c1K;
  n.chiL = l_minus_k / 2 + s.chiO;

  // Localization cross-check of c1^2 and c2 with the actual lifts.
  BigRational c1sq_loc = 0;
  BigRational c2_loc = 0;
  const Specialization& q = kValidationPoint;
  for (std::size_t c = 0; c < s.charts.size(); ++c) {
    const BigRational e = q(s.charts[c].w1) * q(s.charts[c].w2);
    BigRational p1 = 0;
    BigRational p2 = 0;
    for (const auto& t : alpha.terms) {
      const BigRational m = q(lift_at(s, t.bundle, c));
      p1 += t.sign * m;
      p2 += t.sign * m * m;
    }
    c1sq_loc += p1 * p1 / e;
    c2_loc += (p1 * p1 - p2) / 2 / e;
  }
  if (c1sq_loc != n.c1sq || c2_loc != n.c2) {
    throw Error(ErrorCode::internal, "Whitney numerics disagree with localization");
  }
  return n;
}

EqKClass parse_class(const ToricSurface& s, std::string_view spec) {
  EqKClass out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::parse, "class spec '" + std::string(spec) + "': " + why);
  };
  skip_space();
  if (i == spec.size()) throw fail("empty");
  bool first = true;
  while (i < spec.size()) {
    int sign = 1;
    skip_space();
    if (i < spec.size() && (spec[i] == '+' || spec[i] == '-')) {
      sign = spec[i] == '-' ? -1 : 1;
      ++i;
      skip_space();
    } else if (!first) {
      throw fail("expected '+' or '-' between terms");
    }
    first = false;
    if (spec.substr(i, 2) != "O(") throw fail("expected O(...)");
    i += 2;
    std::vector<long> coords;
    while (true) {
      skip_space();
      std::size_t start = i;
      if (i < spec.size() && (spec[i] == '-' || spec[i] == '+')) ++i;
      while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
      if (start == i || !std::isdigit(static_cast<unsigned char>(spec[i - 1]))) throw fail("expected integer");
      coords.push_back(std::stol(std::string(spec.substr(start, i - start))));
      skip_space();
      if (i < spec.size() && spec[i] == ',') {
        ++i;
        continue;
      }
      if (i < spec.size() && spec[i] == ')') {
        ++i;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    if (coords.size() != s.rank()) {
      throw fail("O(...) on " + s.name + " takes " + std::to_string(s.rank()) + " integer(s)");
    }
    out.terms.push_back({sign, {coords, {}}});
    skip_space();
  }
  return out;
}

std::string format_class(const EqKClass& alpha) {
  std::string out;
  for (std::size_t k = 0; k < alpha.terms.size(); ++k) {
    const auto& t = alpha.terms[k];
    if (k > 0 || t.sign < 0) out += t.sign < 0 ? "-" : "+";
    out += "O(";
    for (std::size_t i = 0; i < t.bundle.coords.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(t.bundle.coords[i]);
    }
    out += ")";
  }
  return out;
}

}  // namespace hilbtaut
