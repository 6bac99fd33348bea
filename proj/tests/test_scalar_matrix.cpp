#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace hecke;

TEST_CASE("gaussian rational arithmetic") {
  CHECK(qi(1, 2) + qi(3, -1) == qi(4, 1));
  CHECK(inv(q(2)) == q(1, 2));
  CHECK(qi(1, 1) * qi(1, -1) == q(2));
  CHECK(conj(qi(2, 3)) == qi(2, -3));
  CHECK(norm(qi(3, 4)) == Rational(25));
  CHECK(-q(0) == q(0));

  CHECK_THROWS_AS(inv(q(0)), InvalidScalar);
  CHECK_THROWS_AS(q(1) / q(0), InvalidScalar);
  CHECK_THROWS_AS(make_rational(1, 0), InvalidScalar);
}

TEST_CASE("rationals normalize eagerly") {
  CHECK(make_rational(6, -4) == make_rational(-3, 2));
  CHECK(numerator(make_rational(6, -4)) == -3);
  CHECK(denominator(make_rational(6, -4)) == 2);
  CHECK(q(2, 4) == q(1, 2));  // structural equality is value equality
}

TEST_CASE("scalar powers") {
  CHECK(pow(q(2), 10) == q(1024));
  CHECK(pow(q(2), -2) == q(1, 4));
  CHECK(pow(qi(0, 1), 2) == q(-1));
  CHECK(pow(q(7), 0) == q(1));
}

TEST_CASE("field axioms on the palette") {
  SeededRng rng(11);
  for (int i = 0; i < 100; ++i) {
    const GaussianRational a = random_scalar(rng);
    const GaussianRational b = random_scalar(rng);
    const GaussianRational c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) {
      CHECK(a * inv(a) == GaussianRational::one());
    }
  }
}

TEST_CASE("determinant examples") {
  CHECK(det(Matrix{{q(2), q(1)}, {q(0), q(3)}}) == q(6));
  CHECK(inverse(Matrix::identity(2)) == Matrix::identity(2));
  SeededRng rng(5);
  for (int i = 0; i < 20; ++i) {
    const GaussianRational alpha = random_scalar(rng);
    CHECK(det(unipotent_upper(alpha)) == q(1));
  }
}

TEST_CASE("determinant is multiplicative") {
  SeededRng rng(7);
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    for (int i = 0; i < 50; ++i) {
      const Matrix a = random_matrix(rng, n);
      const Matrix b = random_matrix(rng, n);
      CHECK(det(a * b) == det(a) * det(b));
    }
  }
}

TEST_CASE("inverse is certified by the round trip") {
  SeededRng rng(9);
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    for (int i = 0; i < 20; ++i) {
      const Matrix a = random_invertible(rng, n);
      CHECK((a * inverse(a)).is_identity());
      CHECK((inverse(a) * a).is_identity());
    }
  }
  CHECK_THROWS_AS(inverse(Matrix{{q(1), q(1)}, {q(1), q(1)}}), SingularMatrix);
  CHECK_THROWS_AS(det(Matrix(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(Matrix(2, 2) * Matrix(3, 3), DimensionMismatch);
}

TEST_CASE("matrix power with negative exponents") {
  const Matrix u = unipotent_upper(q(1));
  CHECK(power(u, 3) == unipotent_upper(q(3)));
  CHECK(power(u, -2) == unipotent_upper(q(-2)));
  CHECK(power(u, 0) == Matrix::identity(2));
}

TEST_CASE("intertwiner space of the identity family") {
  const auto space = intertwiner_space({Matrix::identity(2)}, {Matrix::identity(2)});
  CHECK(space.dimension() == 4);  // all of 2x2
}

TEST_CASE("intertwiner space of a unipotent against the identity") {
  // The equations T*U(1) = T force the first column of T to vanish; the
  // brute-force oracle confirms the solution space is the two-dimensional
  // {[[0,a],[0,b]]}, with no invertible element.
  const std::vector<Matrix> lhs = {unipotent_upper(q(1))};
  const std::vector<Matrix> rhs = {Matrix::identity(2)};

  const auto oracle_basis = oracle::intertwiner_basis(lhs, rhs);
  CHECK(oracle_basis.size() == 2);
  CHECK_FALSE(oracle::span_has_invertible(oracle_basis));

  const auto space = intertwiner_space(lhs, rhs);
  CHECK(space.dimension() == 2);
  for (const Matrix& t : space.basis()) {
    CHECK(t.at(0, 0).is_zero());
    CHECK(t.at(1, 0).is_zero());
  }
  CHECK(space.coordinates_of(Matrix{{q(0), q(1)}, {q(0), q(0)}}).has_value());
  CHECK_FALSE(find_invertible(space).has_value());
}

TEST_CASE("intertwiner space conjugating a diagonal to a triangular") {
  const Matrix diag{{q(2), q(0)}, {q(0), q(3)}};
  const Matrix tri{{q(2), q(1)}, {q(0), q(3)}};

  // Hand-checked witness: T = [[1,1],[0,1]] satisfies T*diag = tri*T.
  const Matrix t{{q(1), q(1)}, {q(0), q(1)}};
  CHECK(t * diag == tri * t);
  CHECK(t * diag * inverse(t) == tri);

  const auto space = intertwiner_space({diag}, {tri});
  const auto coords = space.coordinates_of(t);
  CHECK(coords.has_value());

  const auto witness = find_invertible(space);
  REQUIRE(witness.has_value());
  CHECK(*witness * diag == tri * *witness);
  CHECK(is_invertible(*witness));
}

TEST_CASE("intertwiner space input validation") {
  CHECK_THROWS_AS(intertwiner_space({Matrix::identity(2)}, {}), DimensionMismatch);
  CHECK_THROWS_AS(intertwiner_space({Matrix::identity(2)}, {Matrix::identity(3)}),
                  DimensionMismatch);
  CHECK_THROWS_AS(intertwiner_space({Matrix(2, 3)}, {Matrix(2, 3)}), DimensionMismatch);
}

TEST_CASE("find_invertible examples") {
  const auto identity_span = MatrixSubspace(2, 2, {Matrix::identity(2)});
  const auto found = find_invertible(identity_span);
  REQUIRE(found.has_value());
  CHECK(*found == Matrix::identity(2));

  const Matrix nil{{q(0), q(1)}, {q(0), q(0)}};
  CHECK_FALSE(find_invertible(MatrixSubspace(2, 2, {nil})).has_value());

  const Matrix e00{{q(1), q(0)}, {q(0), q(0)}};
  const Matrix e11{{q(0), q(0)}, {q(0), q(1)}};
  const auto diag_witness = find_invertible(MatrixSubspace(2, 2, {e00, e11}));
  REQUIRE(diag_witness.has_value());
  CHECK(is_invertible(*diag_witness));
  CHECK(*diag_witness == Matrix::identity(2));  // first grid hit is (1,1)
}

TEST_CASE("find_invertible certificates stay inside the span") {
  SeededRng rng(21);
  for (int i = 0; i < 40; ++i) {
    std::vector<Matrix> lhs;
    std::vector<Matrix> rhs;
    for (int k = 0; k < 2; ++k) {
      lhs.push_back(random_nonzero_scalar(rng) * unipotent_upper(random_scalar(rng)));
      rhs.push_back(random_nonzero_scalar(rng) * unipotent_upper(random_scalar(rng)));
    }
    const auto space = intertwiner_space(lhs, rhs);
    const auto witness = find_invertible(space);
    if (witness) {
      CHECK_FALSE(det(*witness).is_zero());
      const auto coords = space.coordinates_of(*witness);
      REQUIRE(coords.has_value());
      CHECK(space.combine(*coords) == *witness);
    }
  }
}

TEST_CASE("subspace basis independence is enforced") {
  const Matrix a{{q(1), q(0)}, {q(0), q(1)}};
  CHECK_THROWS_AS(MatrixSubspace(2, 2, {a, q(2) * a}), InvariantViolation);
  CHECK_NOTHROW(MatrixSubspace(2, 2, {}));
}

TEST_CASE("kronecker product shape and values") {
  const Matrix a{{q(2)}};
  const Matrix b = unipotent_upper(q(3));
  CHECK(kronecker(a, b) == q(2) * b);
  const Matrix c = kronecker(b, Matrix::identity(2));
  CHECK(c.rows() == 4);
  CHECK(c.at(0, 2) == q(3));
}
