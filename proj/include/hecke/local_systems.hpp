#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/maps.hpp"
#include "hecke/matrix.hpp"
#include "hecke/scalar.hpp"
#include "hecke/spaces.hpp"

namespace hecke {

// Multiplicative character: one nonzero scalar per homology basis vector.
struct MultChar {
  SpaceModel space;
  std::vector<GaussianRational> values;

  MultChar(SpaceModel s, std::vector<GaussianRational> v)
      : space(std::move(s)), values(std::move(v)) {
    if (values.size() != space.h1_rank()) {
      throw DimensionMismatch("character length differs from h1 rank");
    }
    for (const GaussianRational& x : values) {
      if (x.is_zero()) {
        throw InvalidScalar("multiplicative character value must be nonzero");
      }
    }
  }

  bool is_trivial() const {
    for (const GaussianRational& x : values) {
      if (!x.is_one()) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const MultChar& a, const MultChar& b) {
    return a.space == b.space && a.values == b.values;
  }
  friend bool operator!=(const MultChar& a, const MultChar& b) { return !(a == b); }
};

// Additive character: one scalar per homology basis vector, zero allowed.
struct AddChar {
  SpaceModel space;
  std::vector<GaussianRational> values;

  AddChar(SpaceModel s, std::vector<GaussianRational> v)
      : space(std::move(s)), values(std::move(v)) {
    if (values.size() != space.h1_rank()) {
      throw DimensionMismatch("character length differs from h1 rank");
    }
  }

  bool is_trivial() const {
    for (const GaussianRational& x : values) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const AddChar& a, const AddChar& b) {
    return a.space == b.space && a.values == b.values;
  }
  friend bool operator!=(const AddChar& a, const AddChar& b) { return !(a == b); }
};

inline MultChar trivial_mult_char(const SpaceModel& space) {
  return MultChar(space,
                  std::vector<GaussianRational>(space.h1_rank(), GaussianRational::one()));
}

inline AddChar trivial_add_char(const SpaceModel& space) {
  return AddChar(space, std::vector<GaussianRational>(space.h1_rank()));
}

// Rank-2 system with shared diagonal: gamma -> c(gamma) * [[1, alpha(gamma)], [0, 1]].
struct Rank2Triangular {
  MultChar c;
  AddChar alpha;

  Rank2Triangular(MultChar scalar_part, AddChar unipotent_part)
      : c(std::move(scalar_part)), alpha(std::move(unipotent_part)) {
    if (c.space != alpha.space) {
      throw SpaceMismatch("triangular system parts live on different spaces");
    }
  }

  const SpaceModel& space() const { return c.space; }

  bool is_unipotent() const { return c.is_trivial(); }

  friend bool operator==(const Rank2Triangular& a, const Rank2Triangular& b) {
    return a.c == b.c && a.alpha == b.alpha;
  }
  friend bool operator!=(const Rank2Triangular& a, const Rank2Triangular& b) {
    return !(a == b);
  }
};

// Matrix representation of the fundamental group of a space, stored by its
// images on the homology basis.  All systems in scope have commutative
// differential Galois group, so the images must pairwise commute; this is
// checked at construction together with invertibility.
class MatrixRep {
 public:
  MatrixRep(SpaceModel space, std::vector<Matrix> images)
      : space_(std::move(space)), images_(std::move(images)) {
    if (images_.size() != space_.h1_rank()) {
      throw DimensionMismatch("image count differs from h1 rank");
    }
    size_ = images_.empty() ? 1 : images_.front().rows();
    inverses_.reserve(images_.size());
    for (const Matrix& m : images_) {
      if (!m.is_square() || m.rows() != size_) {
        throw DimensionMismatch("images must be square of equal size");
      }
      if (!is_invertible(m)) {
        throw SingularMatrix("representation image is not invertible");
      }
      inverses_.push_back(inverse(m));
    }
    for (std::size_t i = 0; i < images_.size(); ++i) {
      for (std::size_t j = i + 1; j < images_.size(); ++j) {
        if (images_[i] * images_[j] != images_[j] * images_[i]) {
          throw InvariantViolation("representation images do not commute");
        }
      }
    }
  }

  const SpaceModel& space() const { return space_; }
  std::size_t size() const { return size_; }
  const std::vector<Matrix>& images() const { return images_; }
  const std::vector<Matrix>& inverses() const { return inverses_; }

  friend bool operator==(const MatrixRep& a, const MatrixRep& b) {
    return a.space_ == b.space_ && a.size_ == b.size_ && a.images_ == b.images_;
  }
  friend bool operator!=(const MatrixRep& a, const MatrixRep& b) { return !(a == b); }

 private:
  SpaceModel space_;
  std::size_t size_ = 1;
  std::vector<Matrix> images_;
  std::vector<Matrix> inverses_;
};

inline Matrix unipotent_upper(const GaussianRational& x) {
  return Matrix{{GaussianRational::one(), x},
                {GaussianRational::zero(), GaussianRational::one()}};
}

inline MatrixRep as_matrix_rep(const MultChar& chi) {
  std::vector<Matrix> images;
  images.reserve(chi.values.size());
  for (const GaussianRational& v : chi.values) {
    images.push_back(Matrix{{v}});
  }
  return MatrixRep(chi.space, std::move(images));
}

inline MatrixRep as_matrix_rep(const AddChar& alpha) {
  std::vector<Matrix> images;
  images.reserve(alpha.values.size());
  for (const GaussianRational& v : alpha.values) {
    images.push_back(unipotent_upper(v));
  }
  return MatrixRep(alpha.space, std::move(images));
}

inline MatrixRep as_matrix_rep(const Rank2Triangular& sys) {
  std::vector<Matrix> images;
  images.reserve(sys.c.values.size());
  for (std::size_t i = 0; i < sys.c.values.size(); ++i) {
    images.push_back(sys.c.values[i] * unipotent_upper(sys.alpha.values[i]));
  }
  return MatrixRep(sys.space(), std::move(images));
}

// External product on Product(S1, S2): the S1 generators act by r (x) id and
// the S2 generators by id (x) s.
inline MatrixRep external_product(const MatrixRep& r, const MatrixRep& s) {
  const SpaceModel space = SpaceModel::product({r.space(), s.space()});
  std::vector<Matrix> images;
  images.reserve(r.images().size() + s.images().size());
  const Matrix id_r = Matrix::identity(r.size());
  const Matrix id_s = Matrix::identity(s.size());
  for (const Matrix& m : r.images()) {
    images.push_back(kronecker(m, id_s));
  }
  for (const Matrix& m : s.images()) {
    images.push_back(kronecker(id_r, m));
  }
  return MatrixRep(space, std::move(images));
}

inline MultChar external_product(const MultChar& a, const MultChar& b) {
  std::vector<GaussianRational> values = a.values;
  values.insert(values.end(), b.values.begin(), b.values.end());
  return MultChar(SpaceModel::product({a.space, b.space}), std::move(values));
}

inline AddChar external_product(const AddChar& a, const AddChar& b) {
  std::vector<GaussianRational> values = a.values;
  values.insert(values.end(), b.values.begin(), b.values.end());
  return AddChar(SpaceModel::product({a.space, b.space}), std::move(values));
}

inline Rank2Triangular external_product(const MultChar& a, const Rank2Triangular& b) {
  // Rank-1 (x) rank-2 triangular: the scalar multiplies the diagonal part and
  // leaves the unipotent datum untouched on the new factor.
  return Rank2Triangular(external_product(a, b.c),
                         external_product(trivial_add_char(a.space), b.alpha));
}

inline MatrixRep tensor(const MatrixRep& r, const MatrixRep& s) {
  if (r.space() != s.space()) {
    throw SpaceMismatch("tensor product requires a common space");
  }
  std::vector<Matrix> images;
  images.reserve(r.images().size());
  for (std::size_t i = 0; i < r.images().size(); ++i) {
    images.push_back(kronecker(r.images()[i], s.images()[i]));
  }
  return MatrixRep(r.space(), std::move(images));
}

inline MultChar tensor(const MultChar& a, const MultChar& b) {
  if (a.space != b.space) {
    throw SpaceMismatch("tensor product requires a common space");
  }
  std::vector<GaussianRational> values(a.values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = a.values[i] * b.values[i];
  }
  return MultChar(a.space, std::move(values));
}

// Rank-1 twist of a unipotent datum: L (x) U(alpha) is again triangular with
// shared diagonal.
inline Rank2Triangular tensor(const MultChar& l, const AddChar& alpha) {
  if (l.space != alpha.space) {
    throw SpaceMismatch("tensor product requires a common space");
  }
  return Rank2Triangular(l, alpha);
}

// Determinant character c^2; trivial for unipotent input.
inline MultChar exterior_square(const Rank2Triangular& sys) {
  std::vector<GaussianRational> values(sys.c.values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = sys.c.values[i] * sys.c.values[i];
  }
  return MultChar(sys.space(), std::move(values));
}

inline MultChar pullback(const MultChar& chi, const MapModel& m) {
  if (chi.space != m.target) {
    throw SpaceMismatch("pullback: character does not live on the map target");
  }
  const IntMatrix& h1 = m.h1_matrix;
  std::vector<GaussianRational> values(h1.cols, GaussianRational::one());
  for (std::size_t j = 0; j < h1.cols; ++j) {
    for (std::size_t i = 0; i < h1.rows; ++i) {
      if (h1.at(i, j) != 0) {
        values[j] *= pow(chi.values[i], h1.at(i, j));
      }
    }
  }
  return MultChar(m.source, std::move(values));
}

inline AddChar pullback(const AddChar& alpha, const MapModel& m) {
  if (alpha.space != m.target) {
    throw SpaceMismatch("pullback: character does not live on the map target");
  }
  const IntMatrix& h1 = m.h1_matrix;
  std::vector<GaussianRational> values(h1.cols);
  for (std::size_t j = 0; j < h1.cols; ++j) {
    for (std::size_t i = 0; i < h1.rows; ++i) {
      if (h1.at(i, j) != 0) {
        values[j] += GaussianRational(h1.at(i, j)) * alpha.values[i];
      }
    }
  }
  return AddChar(m.source, std::move(values));
}

inline Rank2Triangular pullback(const Rank2Triangular& sys, const MapModel& m) {
  return Rank2Triangular(pullback(sys.c, m), pullback(sys.alpha, m));
}

inline MatrixRep pullback(const MatrixRep& rep, const MapModel& m) {
  if (rep.space() != m.target) {
    throw SpaceMismatch("pullback: representation does not live on the map target");
  }
  const IntMatrix& h1 = m.h1_matrix;
  std::vector<Matrix> images;
  images.reserve(h1.cols);
  for (std::size_t j = 0; j < h1.cols; ++j) {
    Matrix img = Matrix::identity(rep.size());
    for (std::size_t i = 0; i < h1.rows; ++i) {
      const long long e = h1.at(i, j);
      if (e == 0) {
        continue;
      }
      img = img * (e > 0 ? power(rep.images()[i], e) : power(rep.inverses()[i], -e));
    }
    images.push_back(std::move(img));
  }
  return MatrixRep(m.source, std::move(images));
}

// Outcome of an isomorphism test.  A Yes carries a certified invertible
// intertwiner; a No carries the full intertwiner space, in which the grid
// search found no invertible element.
struct IsoVerdict {
  std::optional<Matrix> witness;
  MatrixSubspace intertwiners;

  bool isomorphic() const { return witness.has_value(); }
};

// Simultaneous conjugacy of two generator families: decides whether an
// invertible T with T * lhs[i] = rhs[i] * T exists, exactly.
inline IsoVerdict simultaneous_conjugacy(const std::vector<Matrix>& lhs,
                                         const std::vector<Matrix>& rhs,
                                         std::size_t size) {
  if (lhs.empty()) {
    // No generators: any invertible matrix intertwines.
    std::vector<Matrix> basis;
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = 0; c < size; ++c) {
        Matrix e(size, size);
        e.at(r, c) = GaussianRational::one();
        basis.push_back(std::move(e));
      }
    }
    return {Matrix::identity(size), MatrixSubspace(size, size, std::move(basis))};
  }
  MatrixSubspace space = intertwiner_space(lhs, rhs);
  std::optional<Matrix> witness = find_invertible(space);
  if (witness) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (*witness * lhs[i] != rhs[i] * *witness) {
        throw InvariantViolation("witness failed intertwining re-verification");
      }
    }
    inverse(*witness);  // certifies invertibility or throws
  }
  return {std::move(witness), std::move(space)};
}

inline IsoVerdict is_isomorphic(const MatrixRep& r, const MatrixRep& s) {
  if (r.space() != s.space()) {
    throw SpaceMismatch("isomorphism test requires a common space");
  }
  if (r.size() != s.size()) {
    throw SizeMismatch("isomorphism test requires equal rank");
  }
  return simultaneous_conjugacy(r.images(), s.images(), r.size());
}

// Splits a rank-1 character on a product into the first factor and the rest.
inline std::pair<MultChar, MultChar> decompose_external_rank1(const MultChar& chi) {
  if (chi.space.kind() != SpaceKind::Product || chi.space.factors().size() < 2) {
    throw SpaceMismatch("decomposition requires a product of at least two factors");
  }
  const SpaceModel& first = chi.space.factors().front();
  const std::size_t cut = first.h1_rank();
  std::vector<SpaceModel> rest_factors(chi.space.factors().begin() + 1,
                                       chi.space.factors().end());
  const SpaceModel rest = rest_factors.size() == 1 ? rest_factors.front()
                                                   : SpaceModel::product(rest_factors);
  MultChar head(first, {chi.values.begin(), chi.values.begin() + cut});
  MultChar tail(rest, {chi.values.begin() + cut, chi.values.end()});
  return {std::move(head), std::move(tail)};
}

// Character of the n-th symmetric power: the permutation-invariant system has
// the same monodromy values, read on the symmetric product.
inline MultChar sym_power(const MultChar& e, int n) {
  if (e.space.kind() != SpaceKind::Curve) {
    throw SpaceMismatch("symmetric power input must live on the curve");
  }
  if (n < 1) {
    throw ConditionNotMet("symmetric power requires n >= 1");
  }
  return MultChar(SpaceModel::sym_prod(e.space.genus(), n), e.values);
}

}  // namespace hecke
