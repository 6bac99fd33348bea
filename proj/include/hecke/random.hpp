#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hecke/local_systems.hpp"
#include "hecke/matrix.hpp"
#include "hecke/scalar.hpp"
#include "hecke/spaces.hpp"
#include "hecke/words.hpp"

namespace hecke {

// Deterministic seeded source.  mt19937_64 output is pinned by the standard
// and indices are taken by modulo, so draws are identical on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::size_t index(std::size_t bound) {
    return static_cast<std::size_t>(engine_() % bound);
  }

  long long integer_in(long long lo, long long hi) {
    return lo + static_cast<long long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (engine_() & 1ULL) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Small exact palettes; characters drawn from them stay cheap to multiply
// and serialize.
inline const std::vector<GaussianRational>& nonzero_palette() {
  static const std::vector<GaussianRational> palette = [] {
    std::vector<GaussianRational> p;
    for (int n : {1, -1, 2, -2, 3, -3, 5}) {
      p.emplace_back(n);
    }
    p.emplace_back(Rational(1, 2));
    p.emplace_back(Rational(-1, 2));
    p.emplace_back(Rational(2, 3));
    p.emplace_back(Rational(0), Rational(1));    // i
    p.emplace_back(Rational(0), Rational(-1));   // -i
    p.emplace_back(Rational(1), Rational(1));    // 1+i
    p.emplace_back(Rational(1), Rational(-1));   // 1-i
    p.emplace_back(Rational(-1), Rational(1));   // -1+i
    p.emplace_back(Rational(2), Rational(1));    // 2+i
    return p;
  }();
  return palette;
}

inline const std::vector<GaussianRational>& full_palette() {
  static const std::vector<GaussianRational> palette = [] {
    std::vector<GaussianRational> p = nonzero_palette();
    p.emplace_back(0);
    return p;
  }();
  return palette;
}

inline GaussianRational random_nonzero_scalar(SeededRng& rng) {
  const auto& p = nonzero_palette();
  return p[rng.index(p.size())];
}

inline GaussianRational random_scalar(SeededRng& rng) {
  const auto& p = full_palette();
  return p[rng.index(p.size())];
}

inline MultChar random_mult_char(SeededRng& rng, const SpaceModel& space) {
  std::vector<GaussianRational> values(space.h1_rank());
  for (auto& v : values) {
    v = random_nonzero_scalar(rng);
  }
  return MultChar(space, std::move(values));
}

inline AddChar random_add_char(SeededRng& rng, const SpaceModel& space) {
  std::vector<GaussianRational> values(space.h1_rank());
  for (auto& v : values) {
    v = random_scalar(rng);
  }
  return AddChar(space, std::move(values));
}

inline Word random_word(SeededRng& rng, int genus, std::size_t length) {
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    letters.push_back({rng.coin() ? GenKind::A : GenKind::B,
                       static_cast<int>(rng.index(static_cast<std::size_t>(genus))) + 1,
                       rng.coin() ? 1 : -1});
  }
  return Word(std::move(letters));
}

inline Matrix random_matrix(SeededRng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m.at(r, c) = random_scalar(rng);
    }
  }
  return m;
}

inline Matrix random_invertible(SeededRng& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n);
    if (is_invertible(m)) {
      return m;
    }
  }
}

}  // namespace hecke
