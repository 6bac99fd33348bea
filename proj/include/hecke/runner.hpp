#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecke/config.hpp"
#include "hecke/gagm.hpp"
#include "hecke/gl1.hpp"
#include "hecke/random.hpp"
#include "hecke/serialize.hpp"

namespace hecke {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class CheckStatus { Pass, Fail, Report };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Report: return "report";
  }
  return "?";
}

struct ReportEntry {
  std::string check;
  std::optional<int> degree;
  CheckStatus status;
  Json details;
};

struct RunReport {
  RunConfig config;
  std::vector<ReportEntry> entries;
  int passed = 0;
  int failed = 0;
  int reported = 0;
  bool internal_error = false;
  std::string internal_error_message;
};

namespace detail {

template <typename Fn>
void add_entry(RunReport& report, std::string check, std::optional<int> degree, Fn&& fn) {
  try {
    auto [status, details] = fn();
    report.entries.push_back({std::move(check), degree, status, std::move(details)});
  } catch (const InvariantViolation& e) {
    report.entries.push_back(
        {std::move(check), degree, CheckStatus::Fail, Json{{"error", e.what()}}});
    report.internal_error = true;
    report.internal_error_message = e.what();
  } catch (const Error& e) {
    report.entries.push_back(
        {std::move(check), degree, CheckStatus::Fail, Json{{"error", e.what()}}});
  }
}

inline std::pair<CheckStatus, Json> pass_fail(bool ok, Json details = Json()) {
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details)};
}

// ---------------------------------------------------------------------------
// gl1 scenario
// ---------------------------------------------------------------------------

inline void run_gl1(RunReport& report) {
  const RunConfig& config = report.config;
  const SpaceModel curve = SpaceModel::curve(config.genus);
  const MultChar e(curve, config.mult);
  const DegreeWindow window = config.window;

  EigensheafFamily fam = build_eigensheaf(e, window);

  add_entry(report, "construction", std::nullopt,
            [&] { return std::make_pair(CheckStatus::Report, serialize(fam)); });

  add_entry(report, "recursion_closed_form", std::nullopt, [&] {
    bool ok = true;
    for (int d = window.lo; d <= window.hi; ++d) {
      if (fam.at(d).values != e.values) {
        ok = false;
      }
    }
    return pass_fail(ok);
  });

  add_entry(report, "uniqueness", std::nullopt,
            [&] { return pass_fail(uniqueness_check(e, window)); });

  for (int d = window.lo; d < window.hi; ++d) {
    add_entry(report, "eigen_identity", d, [&, d] {
      const bool ok = check_eigen_gl1(e, fam, d);
      Json details;
      if (!ok) {
        details["lhs"] = serialize(pullback(fam.at(d + 1), hecke1_map(config.genus, d)));
        details["rhs"] = serialize(external_product(e, fam.at(d)));
      }
      return pass_fail(ok, std::move(details));
    });
    add_entry(report, "descend_reproduces", d, [&, d] {
      return pass_fail(descend_step(fam.at(d + 1), e) == fam.at(d));
    });
    add_entry(report, "translation_coherence", d,
              [&, d] { return pass_fail(translation_coherence(fam, d)); });
  }

  for (int n = 1; n <= 6; ++n) {
    add_entry(report, "beta_compat", n,
              [&, n] { return pass_fail(beta_compat_check(e, n)); });
  }
}

// ---------------------------------------------------------------------------
// gagm scenario
// ---------------------------------------------------------------------------

inline std::pair<CheckStatus, Json> verdict_entry(const HeckeVerdict& verdict,
                                                  Expectation expect) {
  CheckStatus status = CheckStatus::Report;
  if (expect == Expectation::Isomorphic) {
    status = verdict.verdict.isomorphic() ? CheckStatus::Pass : CheckStatus::Fail;
  } else if (expect == Expectation::NotIsomorphic) {
    status = verdict.verdict.isomorphic() ? CheckStatus::Fail : CheckStatus::Pass;
  }
  return {status, serialize(verdict)};
}

inline void run_gagm(RunReport& report) {
  const RunConfig& config = report.config;
  const SpaceModel curve = SpaceModel::curve(config.genus);
  const TriangularSystem sys(MultChar(curve, config.mult), AddChar(curve, config.add));
  const DegreeWindow window = config.window;

  add_entry(report, "classification", std::nullopt, [&] {
    const Classification cls = classify_connection(as_matrix_rep(sys.system()));
    const bool trivial_twist = sys.p.is_trivial();
    bool ok = false;
    std::string kind;
    if (cls.kind == Classification::Kind::Unipotent) {
      kind = "unipotent";
      ok = trivial_twist && cls.alpha && *cls.alpha == sys.alpha;
    } else if (cls.kind == Classification::Kind::GmGaTriangular) {
      kind = "gm_ga_triangular";
      ok = !trivial_twist && cls.p && *cls.p == sys.p && cls.alpha && *cls.alpha == sys.alpha;
    } else {
      kind = "out_of_scope";
    }
    return pass_fail(ok, Json{{"kind", kind}});
  });

  add_entry(report, "surface_relation", std::nullopt, [&] {
    return pass_fail(
        check_relation(as_matrix_rep(sys.system()).images(), SurfaceGroup(config.genus)));
  });

  add_entry(report, "admissibility_table", std::nullopt, [&] {
    const AdmissibleIndices rank1 = admissible_hecke_indices(ModelKind::Rank1);
    const AdmissibleIndices bun2 = admissible_hecke_indices(ModelKind::BunPrime2);
    const AdmissibleIndices strict = admissible_hecke_indices(ModelKind::StrictGa);
    const bool ok = rank1.indices == std::set<int>{1} && bun2.indices == std::set<int>{2} &&
                    strict.indices.empty();
    Json details{{"rank1", std::vector<int>(rank1.indices.begin(), rank1.indices.end())},
                 {"bunprime2", std::vector<int>(bun2.indices.begin(), bun2.indices.end())},
                 {"strict_ga", std::vector<int>(strict.indices.begin(), strict.indices.end())},
                 {"notes", Json::array()}};
    for (const auto* table : {&rank1, &bun2, &strict}) {
      for (const std::string& note : table->notes) {
        details["notes"].push_back(note);
      }
    }
    return pass_fail(ok, std::move(details));
  });

  add_entry(report, "exterior_square", std::nullopt, [&] {
    const MultChar sq = exterior_square(sys.system());
    return pass_fail(sq == tensor(sys.p, sys.p), serialize(sq));
  });

  const CandidateFamily fam = build_candidate_K(sys, window);

  add_entry(report, "construction", std::nullopt, [&] {
    Json members = Json::array();
    for (const auto& [d, k] : fam) {
      Json entry{{"degree", d}};
      entry.update(serialize(k));
      members.push_back(std::move(entry));
    }
    return std::make_pair(CheckStatus::Report, Json{{"members", std::move(members)}});
  });

  for (int d = window.lo; d < window.hi; ++d) {
    add_entry(report, "hecke2_identity", d, [&, d] {
      return verdict_entry(check_eigen_gagm(sys, fam, d), config.expect);
    });
    add_entry(report, "factorization_audit", d, [&, d] {
      const ProofPathAudit audit = audit_hecke2_factorization(sys, fam, d);
      const bool ok = audit.u_step && audit.p2_step && audit.composition_matches_hecke2;
      return pass_fail(ok, serialize(audit));
    });
  }
}

// ---------------------------------------------------------------------------
// classify scenario
// ---------------------------------------------------------------------------

inline void run_classify(RunReport& report) {
  const RunConfig& config = report.config;
  const SpaceModel curve = SpaceModel::curve(config.genus);
  const std::vector<Matrix>& images = report.config.images;

  bool all_invertible = true;
  add_entry(report, "images_invertible", std::nullopt, [&] {
    Json bad = Json::array();
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!is_invertible(images[i])) {
        bad.push_back(i);
      }
    }
    all_invertible = bad.empty();
    return pass_fail(all_invertible, Json{{"singular_indices", std::move(bad)}});
  });
  if (!all_invertible) {
    return;
  }

  bool commuting = true;
  add_entry(report, "commuting", std::nullopt, [&] {
    for (std::size_t i = 0; i < images.size() && commuting; ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) {
        if (images[i] * images[j] != images[j] * images[i]) {
          commuting = false;
          break;
        }
      }
    }
    return std::make_pair(CheckStatus::Report, Json{{"commutes", commuting}});
  });

  add_entry(report, "classification", std::nullopt, [&] {
    Json details;
    if (!commuting) {
      details["kind"] = "out_of_scope";
      details["reason"] = "generator images do not commute";
      return std::make_pair(CheckStatus::Report, std::move(details));
    }
    const Classification cls = classify_connection(MatrixRep(curve, images));
    switch (cls.kind) {
      case Classification::Kind::Unipotent:
        details["kind"] = "unipotent";
        details["alpha"] = serialize(*cls.alpha);
        break;
      case Classification::Kind::GmGaTriangular:
        details["kind"] = "gm_ga_triangular";
        details["p"] = serialize(*cls.p);
        details["alpha"] = serialize(*cls.alpha);
        break;
      case Classification::Kind::OutOfScope:
        details["kind"] = "out_of_scope";
        details["reason"] = "images are not shared-diagonal triangular";
        break;
    }
    return std::make_pair(CheckStatus::Report, std::move(details));
  });

  add_entry(report, "surface_relation", std::nullopt, [&] {
    return pass_fail(check_relation(images, SurfaceGroup(config.genus)));
  });
}

// ---------------------------------------------------------------------------
// selftest scenario: seeded invariant suites
// ---------------------------------------------------------------------------

struct SuiteResult {
  int cases = 0;
  int failures = 0;

  void expect(bool ok) {
    ++cases;
    if (!ok) {
      ++failures;
    }
  }
};

inline std::pair<CheckStatus, Json> suite_entry(const SuiteResult& r) {
  return {r.failures == 0 ? CheckStatus::Pass : CheckStatus::Fail,
          Json{{"cases", r.cases}, {"failures", r.failures}}};
}

inline SuiteResult suite_scalar_field_axioms(SeededRng& rng) {
  SuiteResult r;
  for (int i = 0; i < 200; ++i) {
    const GaussianRational a = random_scalar(rng);
    const GaussianRational b = random_scalar(rng);
    const GaussianRational c = random_scalar(rng);
    r.expect((a + b) + c == a + (b + c));
    r.expect(a * (b + c) == a * b + a * c);
    r.expect(a * b == b * a);
    r.expect(-(-a) == a);
    if (!a.is_zero()) {
      r.expect(a * inv(a) == GaussianRational::one());
    }
  }
  return r;
}

inline SuiteResult suite_det_multiplicative(SeededRng& rng) {
  SuiteResult r;
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    for (int i = 0; i < 60; ++i) {
      const Matrix a = random_matrix(rng, n);
      const Matrix b = random_matrix(rng, n);
      r.expect(det(a * b) == det(a) * det(b));
    }
  }
  return r;
}

inline SuiteResult suite_word_reduction(SeededRng& rng) {
  SuiteResult r;
  for (int i = 0; i < 150; ++i) {
    const int g = 1 + static_cast<int>(rng.index(3));
    const SurfaceGroup group(g);
    const std::size_t raw_len = rng.index(24);
    std::vector<Letter> raw;
    for (std::size_t k = 0; k < raw_len; ++k) {
      raw.push_back({rng.coin() ? GenKind::A : GenKind::B,
                     static_cast<int>(rng.index(static_cast<std::size_t>(g))) + 1,
                     rng.coin() ? 1 : -1});
    }
    const Word w(raw);
    r.expect(Word(w.letters()) == w);            // idempotent
    r.expect(w.size() <= raw.size());            // length non-increasing
    r.expect((w * w.inverse()).empty());
    const Word u = random_word(rng, g, rng.index(12));
    HomologyClass sum = abelianize(u, group);
    const HomologyClass hw = abelianize(w, group);
    for (std::size_t k = 0; k < sum.coordinates.size(); ++k) {
      sum.coordinates[k] += hw.coordinates[k];
    }
    r.expect(abelianize(u * w, group) == sum);   // homomorphism property
    r.expect(abelianize(relator(group), group) ==
             HomologyClass{std::vector<long long>(group.h1_rank(), 0)});
  }
  return r;
}

// Random shared-diagonal triangular family: always commuting and invertible.
inline std::vector<Matrix> random_triangular_family(SeededRng& rng, std::size_t count) {
  std::vector<Matrix> family;
  for (std::size_t i = 0; i < count; ++i) {
    family.push_back(random_nonzero_scalar(rng) * unipotent_upper(random_scalar(rng)));
  }
  return family;
}

inline SuiteResult suite_intertwiner_certificates(SeededRng& rng) {
  SuiteResult r;
  for (int i = 0; i < 80; ++i) {
    const std::vector<Matrix> lhs = random_triangular_family(rng, 2);
    const std::vector<Matrix> rhs = random_triangular_family(rng, 2);
    const MatrixSubspace space = intertwiner_space(lhs, rhs);
    for (const Matrix& t : space.basis()) {
      for (std::size_t k = 0; k < lhs.size(); ++k) {
        r.expect(t * lhs[k] == rhs[k] * t);
      }
    }
    const auto witness = find_invertible(space);
    if (witness) {
      r.expect(!det(*witness).is_zero());
      const auto coords = space.coordinates_of(*witness);
      r.expect(coords.has_value());
      if (coords) {
        r.expect(space.combine(*coords) == *witness);
      }
    }
  }
  return r;
}

inline MatrixRep random_triangular_rep(SeededRng& rng, const SpaceModel& space) {
  return MatrixRep(space, random_triangular_family(rng, space.h1_rank()));
}

inline SuiteResult suite_iso_reflexive_symmetric(SeededRng& rng) {
  SuiteResult r;
  for (int i = 0; i < 40; ++i) {
    const SpaceModel curve = SpaceModel::curve(1 + static_cast<int>(rng.index(2)));
    const MatrixRep a = random_triangular_rep(rng, curve);
    const MatrixRep b = random_triangular_rep(rng, curve);
    r.expect(is_isomorphic(a, a).isomorphic());
    r.expect(is_isomorphic(a, b).isomorphic() == is_isomorphic(b, a).isomorphic());
  }
  return r;
}

inline SuiteResult suite_conjugation_invariance(SeededRng& rng) {
  SuiteResult r;
  for (int i = 0; i < 40; ++i) {
    const SpaceModel curve = SpaceModel::curve(1);
    const MatrixRep a = random_triangular_rep(rng, curve);
    const Matrix t = random_invertible(rng, 2);
    const Matrix t_inv = inverse(t);
    std::vector<Matrix> conjugated;
    for (const Matrix& m : a.images()) {
      conjugated.push_back(t * m * t_inv);
    }
    const MatrixRep b(curve, std::move(conjugated));
    r.expect(is_isomorphic(a, b).isomorphic());
    r.expect(is_isomorphic(b, a).isomorphic());
  }
  return r;
}

inline SuiteResult suite_pullback_functorial(SeededRng& rng) {
  SuiteResult r;
  for (int i = 0; i < 40; ++i) {
    const int g = 1 + static_cast<int>(rng.index(2));
    const int d = static_cast<int>(rng.index(4)) - 2;
    const MapModel inner = point_twist_map(g, d);
    const MapModel outer = hecke2_map(g, d);
    const MatrixRep rep = random_triangular_rep(rng, outer.target);
    const MatrixRep direct = pullback(rep, compose(outer, inner));
    const MatrixRep staged = pullback(pullback(rep, outer), inner);
    r.expect(direct == staged);
  }
  return r;
}

inline SuiteResult suite_tensor_exterior_identities(SeededRng& rng) {
  SuiteResult r;
  for (int i = 0; i < 80; ++i) {
    const SpaceModel curve = SpaceModel::curve(1 + static_cast<int>(rng.index(3)));
    const MultChar p = random_mult_char(rng, curve);
    const AddChar alpha = random_add_char(rng, curve);
    const Rank2Triangular tw = tensor(p, alpha);
    r.expect(exterior_square(tw) == tensor(p, p));
    const Rank2Triangular unipotent(trivial_mult_char(curve), alpha);
    r.expect(exterior_square(unipotent).is_trivial());
  }
  return r;
}

inline SuiteResult suite_decompose_roundtrip(SeededRng& rng) {
  SuiteResult r;
  for (int i = 0; i < 60; ++i) {
    const int g = 1 + static_cast<int>(rng.index(2));
    const SpaceModel curve = SpaceModel::curve(g);
    const SpaceModel pic = SpaceModel::pic(g, static_cast<int>(rng.index(5)) - 2);
    const MultChar a = random_mult_char(rng, curve);
    const MultChar b = random_mult_char(rng, pic);
    const MultChar joint = external_product(a, b);
    const auto [head, tail] = decompose_external_rank1(joint);
    r.expect(head == a);
    r.expect(tail == b);
    r.expect(external_product(head, tail) == joint);
  }
  return r;
}

inline SuiteResult suite_h1_diagram_commutes() {
  SuiteResult r;
  for (int g = 1; g <= 4; ++g) {
    for (int n = 1; n <= 6; ++n) {
      const MapModel left = compose(abel_jacobi_map(g, n + 1), beta_map(g, n));
      const MapModel right = compose(
          hecke1_map(g, n),
          product_map(identity_map(SpaceModel::curve(g)), abel_jacobi_map(g, n)));
      r.expect(left.h1_matrix == right.h1_matrix && left.source == right.source &&
               left.target == right.target);
    }
  }
  return r;
}

inline SuiteResult suite_gl1_engine_random(SeededRng& rng) {
  SuiteResult r;
  for (int g = 1; g <= 3; ++g) {
    for (int i = 0; i < 5; ++i) {
      const MultChar e = random_mult_char(rng, SpaceModel::curve(g));
      const DegreeWindow window = default_window(g);
      const EigensheafFamily fam = build_eigensheaf(e, window);
      for (int d = window.lo; d < window.hi; ++d) {
        r.expect(check_eigen_gl1(e, fam, d));
      }
      r.expect(uniqueness_check(e, window));
      for (int n = 1; n <= 3; ++n) {
        r.expect(beta_compat_check(e, n));
      }
    }
  }
  return r;
}

inline SuiteResult suite_gagm_alpha_zero(SeededRng& rng) {
  SuiteResult r;
  for (int g = 1; g <= 2; ++g) {
    const SpaceModel curve = SpaceModel::curve(g);
    for (int i = 0; i < 5; ++i) {
      const TriangularSystem sys(random_mult_char(rng, curve), trivial_add_char(curve));
      const DegreeWindow window(-1, 2);
      const CandidateFamily fam = build_candidate_K(sys, window);
      for (int d = window.lo; d < window.hi; ++d) {
        const HeckeVerdict verdict = check_eigen_gagm(sys, fam, d);
        r.expect(verdict.verdict.isomorphic());
        r.expect(verdict.semisimplified_isomorphic);
        r.expect(verdict.audit.u_step && verdict.audit.p2_step &&
                 verdict.audit.composition_matches_hecke2);
      }
    }
  }
  return r;
}

inline void run_selftest(RunReport& report) {
  const std::uint64_t seed = report.config.seed;
  const auto run_suite = [&](const std::string& name, auto&& suite) {
    add_entry(report, name, std::nullopt, [&] {
      SeededRng rng(seed);
      return suite_entry(suite(rng));
    });
  };

  run_suite("scalar_field_axioms", [](SeededRng& rng) { return suite_scalar_field_axioms(rng); });
  run_suite("det_multiplicative", [](SeededRng& rng) { return suite_det_multiplicative(rng); });
  run_suite("word_reduction", [](SeededRng& rng) { return suite_word_reduction(rng); });
  run_suite("intertwiner_certificates",
            [](SeededRng& rng) { return suite_intertwiner_certificates(rng); });
  run_suite("iso_reflexive_symmetric",
            [](SeededRng& rng) { return suite_iso_reflexive_symmetric(rng); });
  run_suite("conjugation_invariance",
            [](SeededRng& rng) { return suite_conjugation_invariance(rng); });
  run_suite("pullback_functorial",
            [](SeededRng& rng) { return suite_pullback_functorial(rng); });
  run_suite("tensor_exterior_identities",
            [](SeededRng& rng) { return suite_tensor_exterior_identities(rng); });
  run_suite("decompose_roundtrip",
            [](SeededRng& rng) { return suite_decompose_roundtrip(rng); });
  run_suite("h1_diagram_commutes", [](SeededRng&) { return suite_h1_diagram_commutes(); });
  run_suite("gl1_engine_random", [](SeededRng& rng) { return suite_gl1_engine_random(rng); });
  run_suite("gagm_alpha_zero", [](SeededRng& rng) { return suite_gagm_alpha_zero(rng); });
}

}  // namespace detail

// Executes the configured scenario.  Per-entry errors are folded into the
// report; only configuration problems abort before a report exists.
inline RunReport run(const RunConfig& config) {
  RunReport report;
  report.config = config;
  try {
    switch (config.scenario) {
      case Scenario::Gl1:
        detail::run_gl1(report);
        break;
      case Scenario::Gagm:
        detail::run_gagm(report);
        break;
      case Scenario::Classify:
        detail::run_classify(report);
        break;
      case Scenario::Selftest:
        detail::run_selftest(report);
        break;
    }
  } catch (const InvariantViolation& e) {
    report.internal_error = true;
    report.internal_error_message = e.what();
  } catch (const Error& e) {
    report.entries.push_back(
        {"scenario", std::nullopt, CheckStatus::Fail, Json{{"error", e.what()}}});
  }

  // Stable report order: degree-less summary entries first, then per-degree
  // blocks, ties broken by check name.
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const ReportEntry& a, const ReportEntry& b) {
                     const int da = a.degree.value_or(std::numeric_limits<int>::min());
                     const int db = b.degree.value_or(std::numeric_limits<int>::min());
                     if (da != db) {
                       return da < db;
                     }
                     return a.check < b.check;
                   });

  for (const ReportEntry& entry : report.entries) {
    switch (entry.status) {
      case CheckStatus::Pass: ++report.passed; break;
      case CheckStatus::Fail: ++report.failed; break;
      case CheckStatus::Report: ++report.reported; break;
    }
  }
  return report;
}

// 0: all checks passed.  1: at least one failed (including violated
// expectations).  2: configuration error (assigned by the CLI).  3: internal
// invariant violation.
inline int exit_code(const RunReport& report) {
  if (report.internal_error) {
    return 3;
  }
  if (report.failed > 0) {
    return 1;
  }
  return 0;
}

inline Json serialize(const RunReport& report) {
  Json entries = Json::array();
  for (const ReportEntry& entry : report.entries) {
    Json e{{"check", entry.check}};
    if (entry.degree) {
      e["degree"] = *entry.degree;
    }
    e["status"] = to_string(entry.status);
    if (!entry.details.is_null()) {
      e["details"] = entry.details;
    }
    entries.push_back(std::move(e));
  }
  Json out{{"schema", kSchemaVersion},
           {"engine_version", kEngineVersion},
           {"config", serialize(report.config)},
           {"entries", std::move(entries)},
           {"totals",
            Json{{"passed", report.passed},
                 {"failed", report.failed},
                 {"reported", report.reported}}}};
  if (report.internal_error) {
    out["internal_error"] = report.internal_error_message;
  }
  return out;
}

inline std::string render(const RunReport& report, bool pretty) {
  return serialize(report).dump(pretty ? 2 : -1) + "\n";
}

// One line per entry plus totals; for humans, stderr-bound in the CLI.
inline std::string render_text(const RunReport& report) {
  std::string out = "scenario " + to_string(report.config.scenario) + "  genus " +
                    std::to_string(report.config.genus) + "  window [" +
                    std::to_string(report.config.window.lo) + ", " +
                    std::to_string(report.config.window.hi) + "]  seed " +
                    std::to_string(report.config.seed) + "\n";
  for (const ReportEntry& entry : report.entries) {
    out += "  [" + to_string(entry.status) + "] " + entry.check;
    if (entry.degree) {
      out += " (d=" + std::to_string(*entry.degree) + ")";
    }
    out += "\n";
  }
  out += "totals: " + std::to_string(report.passed) + " passed, " +
         std::to_string(report.failed) + " failed, " + std::to_string(report.reported) +
         " reported\n";
  if (report.internal_error) {
    out += "internal error: " + report.internal_error_message + "\n";
  }
  return out;
}

}  // namespace hecke
