#include <catch_amalgamated.hpp>

#include <random>

#include "ncrs/linalg.hpp"

using namespace ncrs;

namespace {

// Every vector of 𝔽_p^n, for exhaustive oracles.
std::vector<Vector> all_vectors(const Field& f, std::size_t n) {
  std::vector<Vector> out{Vector{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> next;
    for (const auto& v : out)
      for (std::uint32_t c = 0; c < f.characteristic(); ++c) {
        auto w = v;
        w.push_back(f.from_int(c));
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<int> d(0, 2);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rational scalars are canonical") {
  Field q;
  CHECK(q.parse("4/6") == q.parse("2/3"));
  CHECK(q.parse("-2/5").to_string() == "-2/5");
  CHECK(q.parse("6/3").to_string() == "2");
  CHECK((q.parse("1/2") + q.parse("1/3")).to_string() == "5/6");
  CHECK(q.parse("3").inverse() == q.parse("1/3"));
  CHECK_THROWS_AS(q.zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(q.parse("1/0"), FieldError);
  CHECK_THROWS_AS(q.parse("abc"), FieldError);
}

TEST_CASE("prime field scalars") {
  auto f = Field::prime(7);
  CHECK(f.from_int(-1).to_string() == "6");
  CHECK(f.from_int(3).inverse() == f.from_int(5));
  CHECK(f.parse("10") == f.from_int(3));
  CHECK_THROWS_AS(Field::prime(9), FieldError);
  CHECK(Field::from_flag("f3") == Field::prime(3));
  CHECK(Field::from_flag("q").is_rational());
  CHECK_THROWS_AS(f.one() + Field().one(), FieldError);
  // Fermat: a^(p-1) = 1.
  for (int a = 1; a < 7; ++a) {
    Scalar x = f.one();
    for (int i = 0; i < 6; ++i) x *= f.from_int(a);
    CHECK(x.is_one());
  }
}

TEST_CASE("kernel_basis") {
  Field q;
  CHECK(kernel_basis(Matrix(q, 2, 2)).dim() == 2);
  CHECK(kernel_basis(Matrix::identity(q, 3)).dim() == 0);

  auto f2 = Field::prime(2);
  auto m = Matrix::from_ints(f2, {{1, 1}, {0, 0}});
  auto k = kernel_basis(m);
  // Exhaustive oracle over 𝔽₂².
  std::vector<Vector> solutions;
  for (const auto& v : all_vectors(f2, 2))
    if (is_zero(m.apply(v))) solutions.push_back(v);
  CHECK(solutions.size() == 2);
  for (const auto& v : solutions) CHECK(k.contains(v));
  CHECK(k == Subspace::span(f2, 2, {Vector{f2.one(), f2.one()}}));
}

TEST_CASE("preimage") {
  Field q;
  auto m = Matrix::from_ints(q, {{2, 1}, {1, 1}});
  CHECK(preimage(m, Subspace::full(q, 2)).dim() == 2);
  CHECK(preimage(m, Subspace(q, 2)).dim() == 0);

  auto f3 = Field::prime(3);
  auto n = Matrix::from_ints(f3, {{0, 1}, {0, 0}});
  auto s = Subspace::span(f3, 2, {Vector{f3.one(), f3.zero()}});
  auto pre = preimage(n, s);
  std::size_t count = 0;
  for (const auto& v : all_vectors(f3, 2))
    if (s.contains(n.apply(v))) {
      ++count;
      CHECK(pre.contains(v));
    }
  CHECK(count == 9);
  CHECK(pre.dim() == 2);
}

TEST_CASE("intersect and extend_span") {
  Field q;
  auto e1 = unit_vector(q, 2, 0), e2 = unit_vector(q, 2, 1);
  auto a = Subspace::span(q, 2, {e1, e2});
  auto b = Subspace::span(q, 2, {Vector{q.one(), q.one()}});
  CHECK(intersect(a, b) == b);

  auto ext = Subspace(q, 2).extend_span(e1);
  CHECK_FALSE(ext.contained);
  CHECK(ext.space.dim() == 1);
  auto again = ext.space.extend_span(scaled(q.from_int(3), e1));
  CHECK(again.contained);
  REQUIRE(again.coords);
  CHECK(*again.coords == Vector{q.from_int(3)});
}

TEST_CASE("echelon form is canonical") {
  Field q;
  auto s1 = Subspace::span(q, 3, {Vector{q.from_int(1), q.from_int(2), q.from_int(3)},
                                  Vector{q.from_int(0), q.from_int(1), q.from_int(1)}});
  auto s2 = Subspace::span(q, 3, {Vector{q.from_int(1), q.from_int(3), q.from_int(4)},
                                  Vector{q.from_int(2), q.from_int(5), q.from_int(7)}});
  CHECK(s1 == s2);
}

TEST_CASE("rank-nullity and preimage of kernels over F3") {
  auto f3 = Field::prime(3);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4, r2 = 1 + rng() % 4;
    auto m = random_matrix(f3, r, c, rng);
    CHECK(kernel_basis(m).dim() + rank(m) == c);
    auto n = random_matrix(f3, r2, r, rng);
    CHECK(preimage(m, kernel_basis(n)) == kernel_basis(n * m));
  }
}

TEST_CASE("SpanBuilder coordinates are in insertion order") {
  Field q;
  SpanBuilder b(q, 3);
  Vector v1{q.from_int(1), q.from_int(1), q.from_int(0)};
  Vector v2{q.from_int(0), q.from_int(1), q.from_int(1)};
  CHECK(b.insert(v1));
  CHECK(b.insert(v2));
  auto w = add(scaled(q.from_int(2), v1), scaled(q.parse("-1/2"), v2));
  CHECK_FALSE(b.insert(w));
  auto c = b.coordinates(w);
  REQUIRE(c);
  CHECK(*c == Vector{q.from_int(2), q.parse("-1/2")});
  CHECK_FALSE(b.coordinates(unit_vector(q, 3, 2)));
}
