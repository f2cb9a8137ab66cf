// Acceptance suite: runs every headline criterion at its stated tolerance
// (all exact except the scan runtime bounds) and prints one line per
// criterion. The CLI binary path is expected as argv[1] for the determinism
// and round-trip checks.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "horikawa/horikawa.hpp"

using namespace horikawa;

namespace {

struct Criterion {
  int number;
  std::string description;
  bool pass = true;
  std::string detail;

  Criterion(int n, std::string d) : number(n), description(std::move(d)) {}

  void require(bool ok, const std::string& message) {
    if (!ok && pass) {
      pass = false;
      detail = message;
    }
  }
};

std::vector<ConstructionRecord> all_records(LineTag line, Int chi_max) {
  std::vector<ConstructionRecord> out;
  for (Int chi = line_chi_min(line); chi <= chi_max; ++chi)
    for (ComponentTag c : components_of(line, chi))
      out.push_back(construct(line, chi, c));
  return out;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

bool run_command(const std::string& command, std::string* output) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return false;
  char buffer[4096];
  std::ostringstream os;
  size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    os.write(buffer, static_cast<std::streamsize>(n));
  int status = pclose(pipe);
  *output = os.str();
  return status == 0;
}

Int lattice_count(Int e, Int a, Int b) {
  if (a < 0) return 0;
  Int n = 0;
  for (Int j = 0; j <= a; ++j)
    for (Int i = 0; i + j * e <= b; ++i) ++n;
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  std::vector<Criterion> criteria;

  {
    Criterion c{1,
                "L6 scan chi in [4,120]: K2 = 2chi-6 exactly, component "
                "multiplicity by the mod-8 rule, under 5 s"};
    auto start = std::chrono::steady_clock::now();
    ScanResult scan = scan_line(LineTag::L6, 4, 120);
    double elapsed = seconds_since(start);
    c.require(scan.failures.empty(), "scan reported failures");
    Int chi = 4;
    size_t i = 0;
    while (chi <= 120 && c.pass) {
      int expected = (2 * chi - 6) % 8 == 0 ? 2 : 1;
      for (int k = 0; k < expected; ++k, ++i) {
        if (i >= scan.certificates.size()) {
          c.require(false, "missing certificates");
          break;
        }
        const Certificate& cert = scan.certificates[i];
        c.require(cert.chi() == chi, "chi out of order");
        c.require(cert.k2() == 2 * chi - 6,
                  "K2 != 2chi-6 at chi=" + std::to_string(chi));
      }
      ++chi;
    }
    c.require(i == scan.certificates.size(), "extra certificates");
    c.require(elapsed < 5.0,
              "runtime " + std::to_string(elapsed) + " s exceeds 5 s");
    criteria.push_back(c);
  }

  {
    Criterion c{2,
                "L5 scan chi in [3,120]: K2 = 2chi-5 exactly, two components "
                "iff K2+1 in 8Z or (7,9), under 5 s"};
    auto start = std::chrono::steady_clock::now();
    ScanResult scan = scan_line(LineTag::L5, 3, 120);
    double elapsed = seconds_since(start);
    c.require(scan.failures.empty(), "scan reported failures");
    Int chi = 3;
    size_t i = 0;
    while (chi <= 120 && c.pass) {
      Int k2 = 2 * chi - 5;
      int expected = ((k2 + 1) % 8 == 0 || (chi == 7 && k2 == 9)) ? 2 : 1;
      for (int k = 0; k < expected; ++k, ++i) {
        if (i >= scan.certificates.size()) {
          c.require(false, "missing certificates");
          break;
        }
        const Certificate& cert = scan.certificates[i];
        c.require(cert.chi() == chi, "chi out of order");
        c.require(cert.k2() == k2, "K2 != 2chi-5 at chi=" + std::to_string(chi));
      }
      ++chi;
    }
    c.require(i == scan.certificates.size(), "extra certificates");
    c.require(elapsed < 5.0,
              "runtime " + std::to_string(elapsed) + " s exceeds 5 s");
    criteria.push_back(c);
  }

  {
    Criterion c{3,
                "spot values: (3,1) and (7,9) plane recipes, F_e family "
                "(4e-1, 8e-8) for e in [2,16], F_k family (4k+3,8k) -> "
                "(4k+2,8k-1) for k in [1,15]"};
    ConstructionRecord p31 = construct(LineTag::L5, 3, ComponentTag::Only);
    c.require(p31.invariants.chi == 3 && p31.invariants.K2 == 1 &&
                  p31.recipe.kind == RecipeKind::L5_P2,
              "(3,1) plane recipe");
    ConstructionRecord p79 = construct(LineTag::L5, 7, ComponentTag::II);
    c.require(p79.invariants.chi == 7 && p79.invariants.K2 == 9 &&
                  p79.recipe.kind == RecipeKind::L5_79_P2,
              "(7,9) plane recipe");
    for (Int e = 2; e <= 16; ++e) {
      ConstructionRecord rec =
          construct(LineTag::L6, 4 * e - 1, ComponentTag::II);
      c.require(rec.recipe.kind == RecipeKind::L6_Fe && rec.recipe.param == e,
                "F_e recipe at e=" + std::to_string(e));
      c.require(rec.invariants.chi == 4 * e - 1 &&
                    rec.invariants.K2 == 8 * e - 8,
                "F_e invariants at e=" + std::to_string(e));
    }
    for (Int k = 1; k <= 15; ++k) {
      ConstructionRecord rec =
          construct(LineTag::L5, 4 * k + 2, ComponentTag::II);
      c.require(rec.recipe.kind == RecipeKind::L5_Fk && rec.recipe.param == k,
                "F_k recipe at k=" + std::to_string(k));
      c.require(rec.singular.has_value() &&
                    rec.singular->invariants.chi == 4 * k + 3 &&
                    rec.singular->invariants.K2 == 8 * k,
                "singular stage at k=" + std::to_string(k));
      c.require(rec.invariants.chi == 4 * k + 2 &&
                    rec.invariants.K2 == 8 * k - 1,
                "resolved stage at k=" + std::to_string(k));
    }
    criteria.push_back(c);
  }

  {
    Criterion c{4,
                "stacked double-cover oracle equals the direct formulas on "
                "every rule-table construction of criteria 1-2"};
    int applicable = 0;
    for (LineTag line : {LineTag::L6, LineTag::L5}) {
      for (const ConstructionRecord& rec : all_records(line, 120)) {
        if (rec.recipe.oracle_index == 0) continue;
        const BuildingData& target = oracle_target(rec);
        CoverInvariants direct = cover_invariants(target);
        CoverInvariants stacked =
            stacked_double_cover_oracle(target, rec.recipe.oracle_index);
        c.require(direct.chi == stacked.chi && direct.K2 == stacked.K2,
                  "oracle mismatch at chi=" + std::to_string(rec.chi));
        ++applicable;
      }
    }
    c.require(applicable >= 80, "too few rule-table records exercised");
    criteria.push_back(c);
  }

  {
    Criterion c{5,
                "h0 closed form equals the lattice-point oracle for e <= 6, "
                "0 <= a <= 6, -10 <= b <= 40"};
    for (Int e = 0; e <= 6 && c.pass; ++e) {
      SurfacePtr s = Surface::hirzebruch(e);
      for (Int a = 0; a <= 6; ++a)
        for (Int b = -10; b <= 40; ++b)
          c.require(h0(divisor(s, {a, b})) == lattice_count(e, a, b),
                    "mismatch at e=" + std::to_string(e) + " a=" +
                        std::to_string(a) + " b=" + std::to_string(b));
    }
    criteria.push_back(c);
  }

  {
    Criterion c{6,
                "transports: node blow-up gives dchi=0, dK2=-1; triple-point "
                "resolution gives dchi=-1, dK2=-1 on all recipe instances"};
    int nodes = 0, triples = 0;
    for (LineTag line : {LineTag::L6, LineTag::L5}) {
      for (const ConstructionRecord& rec : all_records(line, 120)) {
        if (intersect(rec.building_data.branch[0],
                      rec.building_data.branch[1]) >= 1 &&
            rec.building_data.base->kind() != SurfaceKind::BlowUp) {
          BuildingData moved = blow_up_cover_at_node(rec.building_data, 1, 2);
          CoverInvariants after = cover_invariants(moved);
          c.require(after.chi == rec.invariants.chi &&
                        after.K2 == rec.invariants.K2 - 1,
                    "node transport at chi=" + std::to_string(rec.chi));
          c.require(validate_building_data(moved).valid,
                    "bundle identities broken by the node transport");
          ++nodes;
        }
        if (rec.singular) {
          c.require(rec.invariants.chi == rec.singular->invariants.chi - 1 &&
                        rec.invariants.K2 == rec.singular->invariants.K2 - 1,
                    "triple-point drop at chi=" + std::to_string(rec.chi));
          ++triples;
        }
      }
    }
    c.require(nodes >= 60, "too few node configurations exercised");
    c.require(triples == 29, "expected 29 resolved class-II records");
    criteria.push_back(c);
  }

  {
    Criterion c{7,
                "canonical image h0 = p_g wherever declared, and image kinds "
                "match the classification tables"};
    using K = MapImageKind::Kind;
    for (LineTag line : {LineTag::L6, LineTag::L5}) {
      for (const ConstructionRecord& rec : all_records(line, 120)) {
        if (rec.canonical.image_check)
          c.require(rec.canonical.image_check->match,
                    "h0 mismatch at chi=" + std::to_string(rec.chi));
        if (component_count(line, rec.chi) == 1) continue;
        const MapImageKind& img = rec.canonical.image;
        if (line == LineTag::L6) {
          if (rec.component == ComponentTag::I)
            c.require(img.kind == K::QuadricImage, "L6 class I image");
          else if (rec.K2 == 8)
            c.require(img == MapImageKind{K::ConeImage, 4},
                      "L6 class II image at K2=8");
          else
            c.require(img == MapImageKind{K::HirzebruchImage, rec.K2 / 4 + 2},
                      "L6 class II image");
        } else if (rec.chi == 6) {
          c.require(rec.component == ComponentTag::II
                        ? img == MapImageKind{K::ConeImage, 3}
                        : img == MapImageKind{K::HirzebruchImage, 1},
                    "(6,7) images");
        } else if (rec.chi == 7) {
          c.require(img == MapImageKind{K::HirzebruchImage, 2},
                    "(7,9) images");
        } else {
          c.require(rec.component == ComponentTag::II
                        ? img == MapImageKind{K::HirzebruchImage,
                                              (rec.K2 + 1) / 4 + 1}
                        : img == MapImageKind{K::HirzebruchImage, 1},
                    "L5 class images");
        }
      }
    }
    criteria.push_back(c);
  }

  {
    Criterion c{8,
                "genus-2 contribution: 0 on every L6 record, 1 on every L5 "
                "record carrying a fibration"};
    for (const ConstructionRecord& rec : all_records(LineTag::L6, 120)) {
      c.require(rec.canonical.genus2.has_value(),
                "missing fibration at chi=" + std::to_string(rec.chi));
      if (rec.canonical.genus2)
        c.require(rec.canonical.genus2->contribution_sum == 0,
                  "nonzero L6 contribution at chi=" + std::to_string(rec.chi));
    }
    for (const ConstructionRecord& rec : all_records(LineTag::L5, 120)) {
      bool plane = rec.building_data.base->minimal_ancestor().kind() ==
                   SurfaceKind::ProjectivePlane;
      c.require(rec.canonical.genus2.has_value() == !plane,
                "fibration presence at chi=" + std::to_string(rec.chi));
      if (rec.canonical.genus2) {
        c.require(rec.canonical.genus2->contribution_sum == 1,
                  "L5 contribution at chi=" + std::to_string(rec.chi));
        c.require(rec.canonical.genus2->contribution_sum ==
                      rec.K2 - (2 * rec.chi - 6),
                  "contribution identity at chi=" + std::to_string(rec.chi));
      }
    }
    criteria.push_back(c);
  }

  {
    Criterion c{9,
                "pullback-isometry and exceptional-class properties over "
                "1000 randomized cases"};
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> pick(0, 8);
    std::uniform_int_distribution<Int> coeff(-50, 50);
    for (int trial = 0; trial < 1000 && c.pass; ++trial) {
      int kind = pick(rng);
      SurfacePtr base = kind == 0 ? Surface::projective_plane()
                        : kind == 1 ? Surface::quadric()
                                    : Surface::hirzebruch(kind - 2);
      BlowUpMap q = blow_up(base);
      std::vector<Int> ca(base->rank()), cb(base->rank());
      for (auto& x : ca) x = coeff(rng);
      for (auto& x : cb) x = coeff(rng);
      DivisorClass da = divisor(base, ca), db = divisor(base, cb);
      c.require(intersect(q.pullback(da), q.pullback(db)) == intersect(da, db),
                "pullback isometry violated");
      c.require(intersect(q.exceptional_class(), q.exceptional_class()) == -1,
                "E^2 != -1");
      c.require(intersect(q.exceptional_class(), q.pullback(da)) == 0,
                "E not orthogonal to pullbacks");
    }
    criteria.push_back(c);
  }

  {
    Criterion c{10,
                "CLI determinism (byte-identical re-runs) and JSON "
                "parse/emit identity over the full scan corpus"};
    if (cli.empty()) {
      c.require(false, "no CLI path supplied");
    } else {
      for (const char* line : {"2chi-6", "2chi-5"}) {
        std::string base_cmd = "'" + cli + "' scan --line " + line +
                               " --chi-min " +
                               (std::string(line) == "2chi-6" ? "4" : "3") +
                               " --chi-max 120 --format json 2>/dev/null";
        std::string first, second;
        c.require(run_command(base_cmd, &first), "scan run failed");
        c.require(run_command(base_cmd, &second), "scan re-run failed");
        c.require(first == second && !first.empty(),
                  "re-runs are not byte-identical");
        std::istringstream is(first);
        std::string row;
        while (std::getline(is, row)) {
          if (row.empty()) continue;
          c.require(certificate_from_string(row).dump() == row,
                    "parse/emit identity failed");
        }
      }
    }
    criteria.push_back(c);
  }

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (c.pass) {
      std::cout << "PASS  criterion " << c.number << ": " << c.description
                << "\n";
    } else {
      ++failures;
      std::cout << "FAIL  criterion " << c.number << ": " << c.description
                << " -- " << c.detail << "\n";
    }
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                              : "ACCEPTANCE: failures present")
            << " (" << criteria.size() - failures << "/" << criteria.size()
            << ")\n";
  return failures == 0 ? 0 : 1;
}
