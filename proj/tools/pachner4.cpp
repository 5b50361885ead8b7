// Command-line front end: verify the 3->3 and 2->4 move identities,
// expand 4-simplex weights, and compute the boundary invariant of a
// triangulated cluster, as reproducible batch runs.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "berez/expansion.hpp"
#include "berez/pachner.hpp"

using namespace berez;

namespace {

struct RunConfig {
  std::string mode = "prime-field";
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  int trials = 1;
  std::string w_left = "auto";
  std::string w_right = "auto";
  std::string zeta_file;
  bool edge_factor = true;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--mode", cfg.mode, "prime-field | rational | symbolic")
      ->check(CLI::IsMember({"prime-field", "rational", "symbolic"}))
      ->capture_default_str();
  cmd->add_option("--prime", cfg.prime, "modulus for prime-field mode")
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "seed for random zeta assignments")
      ->capture_default_str();
  cmd->add_option("--trials", cfg.trials, "number of random zeta points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--zeta", cfg.zeta_file,
                  "zeta assignment file (overrides --seed/--trials)");
}

ZetaAssignment zeta_for_trial(const RunConfig& cfg, const std::set<int>& verts,
                              int trial, bool rational) {
  if (!cfg.zeta_file.empty()) return parse_zeta_file(cfg.zeta_file);
  std::uint64_t s = cfg.seed + std::uint64_t(trial);
  if (rational) return {random_rational_assignment(verts, s)};
  ZetaAssignment za;
  for (auto& [v, r] : random_prime_assignment(verts, s, cfg.prime))
    za.values[v] = Rational(static_cast<unsigned long>(r));
  return za;
}

template <class F>
std::optional<GrassmannElement<typename F::Scalar>> pick_w(
    const std::string& sel, bool left_side, bool move33,
    const GeneratorTable& table, const F& field) {
  if (sel == "auto") return std::nullopt;
  if (!move33) {
    if (sel == "monomial") return w24_monomial_candidate(table, field);
    throw CLI::ValidationError("--w", "2->4 candidates: auto | monomial");
  }
  return left_side ? w33_left_candidate(sel, table, field)
                   : w33_right_candidate(sel, table, field);
}

template <class F>
int run_move(const RunConfig& cfg, bool move33, const F& field, int trial) {
  MoveSetup setup = move33 ? move33_setup() : move24_setup();
  MoveReport<typename F::Scalar> rep =
      move33 ? verify_move_33(
                   setup, field,
                   pick_w(cfg.w_left, true, true, setup.table, field),
                   pick_w(cfg.w_right, false, true, setup.table, field))
             : verify_move_24(
                   setup, field,
                   pick_w(cfg.w_right, false, false, setup.table, field),
                   cfg.edge_factor);
  std::cout << "move: " << (move33 ? "3->3" : "2->4") << "\n"
            << "trial: " << trial << "\n"
            << "seed: " << cfg.seed << "\n";
  if (field.mode_name() == "prime-field")
    std::cout << "prime: " << cfg.prime << "\n";
  std::cout << "zeta: " << field.describe_zeta() << "\n"
            << "w-left: " << cfg.w_left << "\n"
            << "w-right: " << cfg.w_right << "\n";
  if (field.mode_name() == "symbolic") std::cout << "exact: symbolic identity\n";
  std::cout << rep.str() << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, bool move33) {
  const std::set<int> verts{1, 2, 3, 4, 5, 6};
  int status = 0;
  if (cfg.mode == "symbolic") {
    status |= run_move(cfg, move33, SymbolicField(), 0);
  } else if (cfg.mode == "rational") {
    int n = cfg.zeta_file.empty() ? cfg.trials : 1;
    for (int i = 0; i < n; ++i)
      status |= run_move(
          cfg, move33,
          RationalField(zeta_for_trial(cfg, verts, i, true).values), i);
  } else {
    int n = cfg.zeta_file.empty() ? cfg.trials : 1;
    for (int i = 0; i < n; ++i) {
      ZetaAssignment za = zeta_for_trial(cfg, verts, i, false);
      std::map<int, std::uint64_t> res;
      for (auto& [v, q] : za.values) {
        if (q.get_den() != 1 || q < 0)
          throw CLI::ValidationError("--zeta",
                                     "prime-field mode needs nonnegative "
                                     "integer zeta values");
        res[v] = q.get_num().get_ui() % cfg.prime;
      }
      status |= run_move(cfg, move33, PrimeField(cfg.prime, res), i);
    }
  }
  return status;
}

int cmd_expand(const std::vector<int>& verts, bool check_fixture) {
  std::array<int, 5> v{};
  std::copy(verts.begin(), verts.end(), v.begin());
  Simplex4 s(v);  // validates strict increase
  SymbolicField f;
  std::vector<Tet> tets;
  for (int skip = 0; skip < 5; ++skip) {
    Tet t{};
    int k = 0;
    for (int i = 0; i < 5; ++i)
      if (i != skip) t[std::size_t(k++)] = v[std::size_t(i)];
    tets.push_back(t);
  }
  GeneratorTable table = GeneratorTable::for_tetrahedra(tets);
  auto w = weight_W(s, table, f);
  std::cout << to_string(w) << "\n"
            << "terms: " << w.term_count() << "\n";
  if (check_fixture) {
    std::string fixture = std::string(BEREZ_DATA_DIR) + "/w12345_expansion.txt";
    bool ok = w == load_weight_expansion(fixture, s, table, f);
    std::cout << "fixture check: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
  }
  return 0;
}

Cluster load_cluster(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("triangulation", "cannot open " + path);
  return load_triangulation(in);
}

void print_invariant(const std::string& path, const Cluster& c,
                     const GrassmannElement<Fp>& inv_el) {
  std::cout << "file: " << path << "\n"
            << c.classification_report()
            << "invariant terms: " << inv_el.term_count() << "\n";
  if (inv_el.is_zero()) {
    std::cout << "invariant: 0\n";
  } else {
    std::cout << "degrees:";
    for (int d : degree_profile(inv_el)) std::cout << " " << d;
    std::cout << "\n" << "invariant: " << to_string(inv_el) << "\n";
  }
}

int cmd_invariant(const RunConfig& cfg, const std::string& path,
                  const std::string& compare) {
  Cluster a = load_cluster(path);
  // a shared generator table and zeta assignment make the two invariants
  // directly comparable
  std::optional<Cluster> b;
  if (!compare.empty()) b = load_cluster(compare);
  GeneratorTable table = b ? table_for_union(a, *b) : table_for(a);
  std::set<int> verts;
  for (const SimplexVerts& s : a.simplexes()) verts.insert(s.begin(), s.end());
  if (b)
    for (const SimplexVerts& s : b->simplexes())
      verts.insert(s.begin(), s.end());
  PrimeField f(cfg.prime, random_prime_assignment(verts, cfg.seed, cfg.prime));
  std::cout << "seed: " << cfg.seed << "\n"
            << "prime: " << cfg.prime << "\n"
            << "zeta: " << f.describe_zeta() << "\n\n";

  auto ia = invariant_ti(a, table, f);
  print_invariant(path, a, ia);
  if (!b) return 0;
  auto ib = invariant_ti(*b, table, f);
  std::cout << "\n";
  print_invariant(compare, *b, ib);
  bool ok = equal_up_to_sign(ia, ib);
  std::cout << "\nequal up to sign: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grassmann-algebra verifier for 4d Pachner-move identities"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* v33 = app.add_subcommand("verify-33", "verify the 3->3 move identity");
  add_common(v33, cfg);
  v33->add_option("--w-left", cfg.w_left,
                  "auto | a1234 b1234 a1235 b1235 a1236 b1236");
  v33->add_option("--w-right", cfg.w_right, "auto | b1456 b2456 b3456");

  auto* v24 = app.add_subcommand("verify-24", "verify the 2->4 move identity");
  add_common(v24, cfg);
  v24->add_option("--w", cfg.w_right, "auto | monomial (right-side w)");
  v24->add_flag("!--no-edge-factor", cfg.edge_factor,
                "drop the -zeta_56 prefactor (negative control)");

  std::vector<int> verts;
  bool check_fixture = false;
  auto* ex = app.add_subcommand("expand-weight",
                                "print the 72-term 4-simplex weight");
  ex->add_option("vertices", verts, "five strictly increasing vertices")
      ->expected(5)
      ->required();
  ex->add_flag("--check-fixture", check_fixture,
               "compare against the shipped 72-term expansion of W(1,2,3,4,5)");

  std::string tri_file, compare_file;
  auto* in = app.add_subcommand(
      "invariant", "compute the boundary invariant of a triangulation");
  in->add_option("file", tri_file, "triangulation file")->required();
  in->add_option("--compare", compare_file,
                 "second triangulation; check equality up to sign");
  in->add_option("--seed", cfg.seed, "seed for the zeta assignment")
      ->capture_default_str();
  in->add_option("--prime", cfg.prime, "prime modulus")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  try {
    if (v33->parsed()) return cmd_verify(cfg, true);
    if (v24->parsed()) return cmd_verify(cfg, false);
    if (ex->parsed()) return cmd_expand(verts, check_fixture);
    return cmd_invariant(cfg, tri_file, compare_file);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
