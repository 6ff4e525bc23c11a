#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "hilbtaut/error.hpp"
#include "hilbtaut/oracle.hpp"
#include "hilbtaut/toric.hpp"

using namespace hilbtaut;

namespace {

const ToricSurface& surface(const std::string& name) {
  static const ToricSurface p2 = make_surface("p2");
  static const ToricSurface p1xp1 = make_surface("p1xp1");
  static const ToricSurface f1 = make_surface("f1");
  if (name == "p2") return p2;
  if (name == "p1xp1") return p1xp1;
  return f1;
}

/// Number of partitions of n, by adding one allowed part size at a time.
long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int m = part; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
  }
  return p[static_cast<std::size_t>(n)];
}

std::vector<BigRational> segre_values(const ToricSurface& s, const std::string& cls, int n_max, bool chern = false) {
  const EqKClass a = parse_class(s, cls);
  std::vector<BigRational> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(chern ? chern_integral(s, a, n) : segre_integral(s, a, n));
  return out;
}

}  // namespace

TEST_CASE("surfaces carry the expected invariants") {
  CHECK(surface("p2").Ksq == 9);
  CHECK(surface("p1xp1").Ksq == 8);
  CHECK(surface("f1").Ksq == 8);
  for (const auto& name : surface_names()) {
    CHECK(surface(name).chiO == 1);
    CHECK(surface(name).charts.size() == surface(name).rays.size());
  }
  CHECK_THROWS_AS(make_surface("k3"), Error);
}

TEST_CASE("class parsing and numerics") {
  const ToricSurface& f1 = surface("f1");
  const EqKClass a = parse_class(f1, "O(2,1) + O(0,1) - O(1,0)");
  CHECK(a.rank() == 1);
  CHECK(format_class(a) == "O(2,1)+O(0,1)-O(1,0)");
  const ClassNumerics n = class_numerics(f1, a);
  // c1 = (1, 2): c1^2 = 1 - 4, c1.K = -3 - 2 since E^2 = -1
  CHECK(n.c1sq == -3);
  CHECK(n.c1K == -5);
  // c2 = (c1^2 - ((4-1) + (0-1) - 1)) / 2
  CHECK(n.c2 == -2);
  CHECK_THROWS_AS(parse_class(f1, "O(1)"), Error);
  CHECK_THROWS_AS(parse_class(f1, "O(1,1)O(2,2)"), Error);
  CHECK_THROWS_AS(parse_class(f1, ""), Error);
}

TEST_CASE("fixed point enumeration") {
  const ToricSurface& p2 = surface("p2");
  CHECK(enumerate_fixed_points(p2, 0).size() == 1);
  CHECK(enumerate_fixed_points(p2, 1).size() == 3);
  CHECK(enumerate_fixed_points(p2, 2).size() == 9);
  // coefficient of x^n in P(x)^k, computed by convolution
  for (const auto& name : surface_names()) {
    const ToricSurface& s = surface(name);
    for (int n = 0; n <= 5; ++n) {
      std::vector<long> conv(static_cast<std::size_t>(n) + 1, 0);
      conv[0] = 1;
      for (std::size_t c = 0; c < s.charts.size(); ++c) {
        std::vector<long> next(conv.size(), 0);
        for (int i = 0; i <= n; ++i) {
          for (int j = 0; i + j <= n; ++j) next[static_cast<std::size_t>(i + j)] += conv[static_cast<std::size_t>(i)] * partition_count(j);
        }
        conv = next;
      }
      const auto fps = enumerate_fixed_points(s, n);
      CHECK(static_cast<long>(fps.size()) == conv[static_cast<std::size_t>(n)]);
      for (const auto& fp : fps) CHECK(fp.size() == n);
    }
  }
}

TEST_CASE("partitions") {
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(6).size() == 11);
  const Partition p{{3, 1}};
  CHECK(p.conjugate() == std::vector<int>{2, 1, 1});
}

TEST_CASE("tangent weights") {
  const ToricSurface& p2 = surface("p2");
  const Chart& c0 = p2.charts[0];
  HilbFixedPoint one{{Partition{{1}}, Partition{}, Partition{}}};
  const auto w = tangent_weights(p2, one);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == c0.w1);
  CHECK(w[1] == c0.w2);
  // a single row of two boxes: (i, j) = (0, 0), (1, 0), arm 0 throughout, legs 1 and 0
  HilbFixedPoint row{{Partition{{2}}, Partition{}, Partition{}}};
  const auto w2 = tangent_weights(p2, row);
  REQUIRE(w2.size() == 4);
  CHECK(w2[0] == 2L * c0.w1);
  CHECK(w2[1] == (-1L) * c0.w1 + c0.w2);
  CHECK(w2[2] == c0.w1);
  CHECK(w2[3] == c0.w2);
}

TEST_CASE("tautological weights") {
  const ToricSurface& p2 = surface("p2");
  const EqKClass a = parse_class(p2, "O(2)+O(1)-O(3)");
  HilbFixedPoint fp{{Partition{{2}}, Partition{{1}}, Partition{}}};
  const auto t = taut_weights(p2, a, fp);
  long signed_count = 0;
  for (const auto& x : t) signed_count += x.sign;
  CHECK(signed_count == a.rank() * fp.size());
  HilbFixedPoint single{{Partition{}, Partition{{1}}, Partition{}}};
  const EqKClass l = parse_class(p2, "O(2)");
  const auto ts = taut_weights(p2, l, single);
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].c == lift_at(p2, l.terms[0].bundle, 1));
}

TEST_CASE("n = 1 reduces to surface Chern numbers") {
  for (const auto& name : surface_names()) {
    const ToricSurface& s = surface(name);
    const std::string cls = s.rank() == 1 ? "O(2)+O(-1)-O(1)" : "O(2,1)+O(-1,1)-O(1,0)";
    const EqKClass a = parse_class(s, cls);
    const ClassNumerics n = class_numerics(s, a);
    // s(alpha) = 1 - c1 + (c1^2 - c2), c(alpha) = 1 + c1 + c2
    CHECK(segre_integral(s, a, 1) == n.c1sq - n.c2);
    CHECK(chern_integral(s, a, 1) == n.c2);
    const LineBundle l = a.terms[0].bundle;
    CHECK(verlinde_chi(s, l, 3, 1) == class_numerics(s, EqKClass{{{1, l}}}).chiL);
  }
}

TEST_CASE("P2 anchors") {
  const ToricSurface& p2 = surface("p2");
  CHECK(segre_values(p2, "O(1)", 3) == ints({1, 1, 0, 5}));
  CHECK(segre_values(p2, "O(2)", 3) == ints({1, 4, 0, 0}));
  CHECK(segre_values(p2, "O(3)", 3) == ints({1, 9, 15, 4}));
  // split rank two: C(ab, n)
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      const auto v = segre_values(p2, "O(" + std::to_string(a) + ")+O(" + std::to_string(b) + ")", 4, true);
      for (int n = 0; n <= 4; ++n) CHECK(v[static_cast<std::size_t>(n)] == oracle::int_binom(a * b, n));
    }
  }
}

TEST_CASE("Verlinde at r = 0 is (1 - w)^{-chi(L)}") {
  for (const auto& name : surface_names()) {
    const ToricSurface& s = surface(name);
    const LineBundle l{std::vector<long>(s.rank(), 1), {}};
    const long chi = class_numerics(s, EqKClass{{{1, l}}}).chiL;
    for (int n = 0; n <= 3; ++n) {
      CHECK(BigRational(verlinde_chi(s, l, 0, n)) == oracle::int_binom(chi + n - 1, n));
    }
  }
}

TEST_CASE("lift shifts and specialization seeds do not change integrals") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int trial = 0; trial < 6; ++trial) {
    const ToricSurface& s = surface(surface_names()[static_cast<std::size_t>(trial) % 3]);
    EqKClass a;
    for (int k = 0; k < 3; ++k) {
      std::vector<long> c(s.rank());
      for (auto& x : c) x = d(rng);
      a.terms.push_back({k == 2 ? -1 : 1, {c, {}}});
    }
    EqKClass shifted = a;
    for (auto& t : shifted.terms) t.bundle.shift = {d(rng), d(rng)};
    const int n = 2 + trial % 2;
    const BigRational base = segre_integral(s, a, n);
    CHECK(segre_integral(s, shifted, n) == base);
    CHECK(segre_integral(s, a, n, {12345}) == base);
    CHECK(chern_integral(s, shifted, n) == chern_integral(s, a, n));
  }
}

TEST_CASE("swapping the rulings of P1xP1") {
  const ToricSurface& s = surface("p1xp1");
  const auto a = segre_values(s, "O(2,1)+O(0,1)-O(1,1)", 3);
  const auto b = segre_values(s, "O(1,2)+O(1,0)-O(1,1)", 3);
  CHECK(a == b);
}

TEST_CASE("todd log coefficients") {
  const auto c = todd_log_coefficients(4);
  // log(x / (1 - e^{-x})) = x/2 - x^2/24 + x^4/2880
  CHECK(c[0] == 0);
  CHECK(c[1] == rational(1, 2));
  CHECK(c[2] == rational(-1, 24));
  CHECK(c[3] == 0);
  CHECK(c[4] == rational(1, 2880));
}

TEST_CASE("specialization stream is reproducible") {
  SpecializationStream a(5);
  SpecializationStream b(5);
  for (int i = 0; i < 5; ++i) {
    const Specialization x = a.next();
    const Specialization y = b.next();
    CHECK(x.q1 == y.q1);
    CHECK(x.q2 == y.q2);
  }
}
