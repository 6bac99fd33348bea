#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace hecke;

namespace {

Word w(std::initializer_list<Letter> letters) { return Word(std::vector<Letter>(letters)); }

}  // namespace

TEST_CASE("free reduction") {
  CHECK(w({gen_a(1), gen_b(1), gen_b(1, -1), gen_a(1, -1)}).empty());
  CHECK(Word().empty());
  CHECK(w({gen_a(1), gen_a(1, -1), gen_a(1)}) == w({gen_a(1)}));
  // reduction cascades through newly adjacent pairs
  CHECK(w({gen_a(1), gen_b(1), gen_b(1, -1), gen_a(1, -1), gen_a(2)}) == w({gen_a(2)}));
}

TEST_CASE("reduction is idempotent and length-nonincreasing") {
  SeededRng rng(17);
  for (int i = 0; i < 100; ++i) {
    const int genus = 1 + static_cast<int>(rng.index(4));
    std::vector<Letter> raw;
    const std::size_t len = rng.index(30);
    for (std::size_t k = 0; k < len; ++k) {
      raw.push_back({rng.coin() ? GenKind::A : GenKind::B,
                     static_cast<int>(rng.index(static_cast<std::size_t>(genus))) + 1,
                     rng.coin() ? 1 : -1});
    }
    const Word word(raw);
    CHECK(word.size() <= raw.size());
    CHECK(reduce(word) == word);
    CHECK((word * word.inverse()).empty());
    CHECK((word.inverse() * word).empty());
  }
}

TEST_CASE("surface relator") {
  const SurfaceGroup torus(1);
  CHECK(format_word(relator(torus)) == "a1 b1 A1 B1");
  const SurfaceGroup genus2(2);
  CHECK(format_word(relator(genus2)) == "a1 b1 A1 B1 a2 b2 A2 B2");
  for (int g = 1; g <= 4; ++g) {
    const SurfaceGroup group(g);
    const HomologyClass zero{std::vector<long long>(group.h1_rank(), 0)};
    CHECK(abelianize(relator(group), group) == zero);
  }
  CHECK_THROWS_AS(SurfaceGroup(0), ConditionNotMet);
}

TEST_CASE("abelianization") {
  const SurfaceGroup group(2);
  const HomologyClass h = abelianize(w({gen_a(1), gen_b(1), gen_a(1)}), group);
  CHECK(h.coordinates == std::vector<long long>{2, 1, 0, 0});

  SeededRng rng(23);
  for (int i = 0; i < 60; ++i) {
    const Word u = random_word(rng, 2, rng.index(15));
    const Word v = random_word(rng, 2, rng.index(15));
    HomologyClass expected = abelianize(u, group);
    const HomologyClass hv = abelianize(v, group);
    for (std::size_t k = 0; k < expected.coordinates.size(); ++k) {
      expected.coordinates[k] += hv.coordinates[k];
    }
    CHECK(abelianize(u * v, group) == expected);
    const HomologyClass zero{std::vector<long long>(group.h1_rank(), 0)};
    CHECK(abelianize(u * u.inverse(), group) == zero);
  }
}

TEST_CASE("relation check for commuting families") {
  const SurfaceGroup group(2);
  SeededRng rng(29);
  for (int i = 0; i < 20; ++i) {
    std::vector<Matrix> images;
    for (std::size_t k = 0; k < group.h1_rank(); ++k) {
      images.push_back(random_nonzero_scalar(rng) * unipotent_upper(random_scalar(rng)));
    }
    CHECK(check_relation(images, group));
  }
}

TEST_CASE("relation check rejects a non-representation") {
  // a -> [[1,1],[0,1]], b -> [[1,0],[1,1]] on the torus: the commutator is
  // not the identity, computed here by direct multiplication as the oracle.
  const SurfaceGroup torus(1);
  const Matrix a = unipotent_upper(q(1));
  const Matrix b{{q(1), q(0)}, {q(1), q(1)}};
  const Matrix commutator = a * b * inverse(a) * inverse(b);
  CHECK_FALSE(commutator.is_identity());
  CHECK(commutator.at(0, 0) == q(2));

  CHECK_FALSE(check_relation({a, b}, torus));
}

TEST_CASE("relation check on scalar images") {
  const SurfaceGroup torus(1);
  CHECK(check_relation({Matrix{{q(2)}}, Matrix{{q(3)}}}, torus));
}

TEST_CASE("relation check validates inputs") {
  const SurfaceGroup torus(1);
  CHECK_THROWS_AS(check_relation({Matrix::identity(2)}, torus), DimensionMismatch);
  const Matrix singular{{q(1), q(0)}, {q(0), q(0)}};
  CHECK_THROWS_AS(check_relation({singular, Matrix::identity(2)}, torus), SingularMatrix);
}

TEST_CASE("word evaluation matches letter order") {
  const SurfaceGroup torus(1);
  const Matrix a = unipotent_upper(q(1));
  const Matrix b = Matrix::scalar(2, q(2));
  const Word word = w({gen_a(1), gen_b(1), gen_a(1, -1)});
  CHECK(evaluate_word({a, b}, word, torus) == a * b * inverse(a));
}

TEST_CASE("word text syntax round trip") {
  const Word word = parse_word("a1 b1 A1 B1", 2);
  CHECK(format_word(word) == "a1 b1 A1 B1");
  CHECK(parse_word("", 1).empty());
  CHECK(parse_word("  a1\t b2 ", 2).size() == 2);
  CHECK(parse_word("a1 A1", 1).empty());

  CHECK_THROWS_AS(parse_word("c1", 1), ConfigError);
  CHECK_THROWS_AS(parse_word("a", 1), ConfigError);
  CHECK_THROWS_AS(parse_word("a3", 2), ConfigError);
  CHECK_THROWS_AS(parse_word("a0", 2), ConfigError);
}

TEST_CASE("word syntax round trips on random words") {
  SeededRng rng(31);
  for (int i = 0; i < 50; ++i) {
    const int genus = 1 + static_cast<int>(rng.index(4));
    const Word word = random_word(rng, genus, rng.index(20));
    CHECK(parse_word(format_word(word), genus) == word);
  }
}
