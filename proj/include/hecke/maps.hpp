#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/int_matrix.hpp"
#include "hecke/spaces.hpp"

namespace hecke {

// Map between space models together with its induced map on first homology,
// written in the fixed bases (h1_rank(target) x h1_rank(source)).  Basepoints
// contribute nothing to loop classes, so they never show up here.
struct MapModel {
  std::string name;
  SpaceModel source;
  SpaceModel target;
  IntMatrix h1_matrix;

  MapModel(std::string map_name, SpaceModel src, SpaceModel tgt, IntMatrix h1)
      : name(std::move(map_name)),
        source(std::move(src)),
        target(std::move(tgt)),
        h1_matrix(std::move(h1)) {
    if (h1_matrix.rows != target.h1_rank() || h1_matrix.cols != source.h1_rank()) {
      throw DimensionMismatch("h1 matrix shape does not match source/target ranks");
    }
  }
};

inline MapModel identity_map(const SpaceModel& space) {
  return MapModel("id", space, space, IntMatrix::identity(space.h1_rank()));
}

// f x g acting factor-wise; block-diagonal on homology.
inline MapModel product_map(const MapModel& a, const MapModel& b) {
  IntMatrix h1(a.h1_matrix.rows + b.h1_matrix.rows, a.h1_matrix.cols + b.h1_matrix.cols);
  for (std::size_t r = 0; r < a.h1_matrix.rows; ++r) {
    for (std::size_t c = 0; c < a.h1_matrix.cols; ++c) {
      h1.at(r, c) = a.h1_matrix.at(r, c);
    }
  }
  for (std::size_t r = 0; r < b.h1_matrix.rows; ++r) {
    for (std::size_t c = 0; c < b.h1_matrix.cols; ++c) {
      h1.at(a.h1_matrix.rows + r, a.h1_matrix.cols + c) = b.h1_matrix.at(r, c);
    }
  }
  return MapModel(a.name + "x" + b.name, SpaceModel::product({a.source, b.source}),
                  SpaceModel::product({a.target, b.target}), std::move(h1));
}

inline MapModel compose(const MapModel& outer, const MapModel& inner) {
  if (inner.target != outer.source) {
    throw SpaceMismatch("composition: inner target differs from outer source");
  }
  return MapModel(outer.name + "∘" + inner.name, inner.source, outer.target,
                  outer.h1_matrix * inner.h1_matrix);
}

// Dimension n-g of the projective-space fibres of the divisor-class map on
// the n-th symmetric product; only defined in the fibration range n > 2g-2.
inline int fiber_dimension(int genus, int points) {
  if (points <= 2 * genus - 2) {
    throw ConditionNotMet("fiber dimension requires n > 2g-2");
  }
  return points - genus;
}

// Long-exact-sequence bookkeeping for the divisor-class fibration.
struct LesEvidence {
  bool iso;  // pi_1 of the symmetric product maps isomorphically onto pi_1 Pic
  std::vector<std::string> premises;
};

inline LesEvidence les_conclusion(int genus, int points) {
  if (points <= 2 * genus - 2) {
    return {false,
            {"n <= 2g-2: the divisor-class map is not a fibration with projective fibres"}};
  }
  const int fd = fiber_dimension(genus, points);
  return {true,
          {"fibre P^" + std::to_string(fd) + " is connected and simply connected",
           "base Pic^n is aspherical (universal cover C^g)",
           "pi_0 of the fibre is trivial, so the boundary maps vanish"}};
}

// Divisor-class (Abel-Jacobi) map SymProd(g,n) -> Pic(g,n).  The Pic homology
// basis is defined as the image of the curve basis, so the induced matrix is
// the identity by convention.
inline MapModel abel_jacobi_map(int genus, int points) {
  return MapModel("abel_jacobi", SpaceModel::sym_prod(genus, points),
                  SpaceModel::pic(genus, points),
                  IntMatrix::identity(2 * static_cast<std::size_t>(genus)));
}

// (x, D) -> D + x on symmetric products; both homology blocks add.
inline MapModel beta_map(int genus, int points) {
  const std::size_t r = 2 * static_cast<std::size_t>(genus);
  const IntMatrix id = IntMatrix::identity(r);
  return MapModel(
      "beta",
      SpaceModel::product({SpaceModel::curve(genus), SpaceModel::sym_prod(genus, points)}),
      SpaceModel::sym_prod(genus, points + 1), hconcat(id, id));
}

// (x, L) -> L([x]); the unique rank-1 modification.
inline MapModel hecke1_map(int genus, int degree) {
  const std::size_t r = 2 * static_cast<std::size_t>(genus);
  const IntMatrix id = IntMatrix::identity(r);
  return MapModel(
      "hecke_1",
      SpaceModel::product({SpaceModel::curve(genus), SpaceModel::pic(genus, degree)}),
      SpaceModel::pic(genus, degree + 1), hconcat(id, id));
}

// (x, [M], v) -> ([M([x])], v) on the trivialized rank-2 moduli; the
// extension coordinates carry no homology.
inline MapModel hecke2_map(int genus, int degree) {
  const std::size_t r = 2 * static_cast<std::size_t>(genus);
  const IntMatrix id = IntMatrix::identity(r);
  return MapModel(
      "hecke_2",
      SpaceModel::product({SpaceModel::curve(genus), SpaceModel::pic(genus, degree),
                           SpaceModel::ext_space(genus)}),
      SpaceModel::product({SpaceModel::pic(genus, degree + 1), SpaceModel::ext_space(genus)}),
      hconcat(id, id));
}

// (L, v) -> (L(steps*[P0]), v): translation by a fixed divisor class is
// homotopically trivial on loops, so the induced matrix is the identity and
// in particular independent of the chosen basepoint.
inline MapModel translation_map(int genus, int degree, int steps) {
  const std::size_t r = 2 * static_cast<std::size_t>(genus);
  return MapModel(
      "translation(+" + std::to_string(steps) + ")",
      SpaceModel::product({SpaceModel::pic(genus, degree), SpaceModel::ext_space(genus)}),
      SpaceModel::product(
          {SpaceModel::pic(genus, degree + steps), SpaceModel::ext_space(genus)}),
      IntMatrix::identity(r));
}

// Degree translation on Pic alone, used by the rank-1 family coherence check.
inline MapModel pic_translation_map(int genus, int degree, int steps) {
  const std::size_t r = 2 * static_cast<std::size_t>(genus);
  return MapModel("pic_translation(+" + std::to_string(steps) + ")",
                  SpaceModel::pic(genus, degree), SpaceModel::pic(genus, degree + steps),
                  IntMatrix::identity(r));
}

// Projection X x Pic^d x C^g -> Pic^d x C^g.
inline MapModel projection_map(int genus, int degree) {
  const std::size_t r = 2 * static_cast<std::size_t>(genus);
  IntMatrix h1(r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    h1.at(i, r + i) = 1;
  }
  return MapModel(
      "projection",
      SpaceModel::product({SpaceModel::curve(genus), SpaceModel::pic(genus, degree),
                           SpaceModel::ext_space(genus)}),
      SpaceModel::product({SpaceModel::pic(genus, degree), SpaceModel::ext_space(genus)}),
      std::move(h1));
}

// (x, L, v) -> (x, L([x]-[P0]), v).  On homology the loop t -> D(t)+x(t)-P0
// has class [D] + AJ([x]), so the curve block is added into the Pic block:
// (a, b) -> (a, b + a).
inline MapModel point_twist_map(int genus, int degree) {
  const std::size_t r = 2 * static_cast<std::size_t>(genus);
  IntMatrix h1(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    h1.at(i, i) = 1;          // curve block passes through
    h1.at(r + i, i) = 1;      // and is added into the Pic block
    h1.at(r + i, r + i) = 1;  // Pic block passes through
  }
  const SpaceModel both = SpaceModel::product({SpaceModel::curve(genus),
                                               SpaceModel::pic(genus, degree),
                                               SpaceModel::ext_space(genus)});
  return MapModel("point_twist", both, both, std::move(h1));
}

}  // namespace hecke
