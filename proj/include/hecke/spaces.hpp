#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

enum class SpaceKind { Curve, SymProd, Pic, ExtSpace, Product };

enum class Pi1Kind { Surface, FreeAbelian, Trivial };

// Symbolic model of a moduli space: only its fundamental-group descriptor and
// first-homology rank enter any computation.  Products are kept flat, so the
// homology basis of a product is the concatenation of the factors' bases.
class SpaceModel {
 public:
  static SpaceModel curve(int genus) {
    check_genus(genus);
    return SpaceModel(SpaceKind::Curve, genus, 0);
  }

  static SpaceModel sym_prod(int genus, int points) {
    check_genus(genus);
    if (points < 1) {
      throw ConditionNotMet("symmetric product needs n >= 1");
    }
    return SpaceModel(SpaceKind::SymProd, genus, points);
  }

  static SpaceModel pic(int genus, int degree) {
    check_genus(genus);
    return SpaceModel(SpaceKind::Pic, genus, degree);
  }

  static SpaceModel ext_space(int genus) {
    check_genus(genus);
    return SpaceModel(SpaceKind::ExtSpace, genus, 0);
  }

  static SpaceModel product(std::vector<SpaceModel> factors) {
    SpaceModel m(SpaceKind::Product, 0, 0);
    for (SpaceModel& f : factors) {
      if (f.kind() == SpaceKind::Product) {
        for (SpaceModel& inner : f.factors_) {
          m.factors_.push_back(std::move(inner));
        }
      } else {
        m.factors_.push_back(std::move(f));
      }
    }
    return m;
  }

  SpaceKind kind() const { return kind_; }

  int genus() const {
    if (kind_ == SpaceKind::Product) {
      throw ConditionNotMet("product space has no single genus");
    }
    return genus_;
  }

  // SymProd point count or Pic degree.
  int degree() const { return param_; }

  const std::vector<SpaceModel>& factors() const { return factors_; }

  std::size_t h1_rank() const {
    switch (kind_) {
      case SpaceKind::Curve:
      case SpaceKind::SymProd:
      case SpaceKind::Pic:
        return 2 * static_cast<std::size_t>(genus_);
      case SpaceKind::ExtSpace:
        return 0;
      case SpaceKind::Product: {
        std::size_t total = 0;
        for (const SpaceModel& f : factors_) {
          total += f.h1_rank();
        }
        return total;
      }
    }
    return 0;
  }

  Pi1Kind pi1_kind() const {
    switch (kind_) {
      case SpaceKind::Curve:
        return Pi1Kind::Surface;
      case SpaceKind::SymProd:
        return param_ == 1 ? Pi1Kind::Surface : Pi1Kind::FreeAbelian;
      case SpaceKind::Pic:
        return Pi1Kind::FreeAbelian;
      case SpaceKind::ExtSpace:
        return Pi1Kind::Trivial;  // C^g is contractible
      case SpaceKind::Product: {
        Pi1Kind worst = Pi1Kind::Trivial;
        for (const SpaceModel& f : factors_) {
          const Pi1Kind k = f.pi1_kind();
          if (k == Pi1Kind::Surface) {
            return Pi1Kind::Surface;
          }
          if (k == Pi1Kind::FreeAbelian) {
            worst = Pi1Kind::FreeAbelian;
          }
        }
        return worst;
      }
    }
    return Pi1Kind::Trivial;
  }

  std::string to_string() const {
    switch (kind_) {
      case SpaceKind::Curve:
        return "Curve(g=" + std::to_string(genus_) + ")";
      case SpaceKind::SymProd:
        return "SymProd(g=" + std::to_string(genus_) + ",n=" + std::to_string(param_) + ")";
      case SpaceKind::Pic:
        return "Pic(g=" + std::to_string(genus_) + ",d=" + std::to_string(param_) + ")";
      case SpaceKind::ExtSpace:
        return "ExtSpace(g=" + std::to_string(genus_) + ")";
      case SpaceKind::Product: {
        std::string s = "Product[";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
          if (i > 0) {
            s += " x ";
          }
          s += factors_[i].to_string();
        }
        return s + "]";
      }
    }
    return "?";
  }

  friend bool operator==(const SpaceModel& a, const SpaceModel& b) {
    return a.kind_ == b.kind_ && a.genus_ == b.genus_ && a.param_ == b.param_ &&
           a.factors_ == b.factors_;
  }
  friend bool operator!=(const SpaceModel& a, const SpaceModel& b) { return !(a == b); }

 private:
  SpaceModel(SpaceKind kind, int genus, int param)
      : kind_(kind), genus_(genus), param_(param) {}

  static void check_genus(int genus) {
    if (genus < 1) {
      throw ConditionNotMet("space model requires genus >= 1");
    }
  }

  SpaceKind kind_;
  int genus_;
  int param_;
  std::vector<SpaceModel> factors_;
};

}  // namespace hecke
