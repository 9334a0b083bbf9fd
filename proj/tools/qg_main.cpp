// Command-line workbench for finite quantum groups: construction and
// verification of definition documents, block decompositions, hulls and
// synthesis, idempotent states and quasi-subgroups, quantum cosets, and
// discrete crossed products.
//
// Exit codes: 0 ok, 1 parse/input error, 2 axiom failure, 3 internal
// consistency error, 4 theorem violation.

#include "qg/cosets.hpp"
#include "qg/crossed.hpp"
#include "qg/io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>

using namespace qg;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
  double eps = 1e-8;
  double rank_cutoff = 1e-10;
  std::uint64_t seed = 0;  // default seed is fixed so runs are reproducible
  std::string format = "human";

  Tolerance tol() const { return Tolerance(rank_cutoff, eps); }
  bool structured() const { return format == "structured"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--tol", opts.eps, "equality tolerance (default 1e-8)");
  cmd->add_option("--rank-cutoff", opts.rank_cutoff,
                  "relative singular value cutoff (default 1e-10)");
  cmd->add_option("--seed", opts.seed, "random seed (default 0)");
  cmd->add_option("--format", opts.format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));
}

ordered_json json_complex_vector(const Vec& v) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < v.size(); ++i)
    out.push_back({v(i).real(), v(i).imag()});
  return out;
}

ordered_json json_report(const AxiomReport& rep) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
  return checks;
}

std::string dims_string(const std::vector<int>& dims) {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims[i]);
  }
  return out;
}

GroupTable named_group(const std::string& name) {
  if (name == "z2") return GroupTable::cyclic(2);
  if (name == "z3") return GroupTable::cyclic(3);
  if (name == "z4") return GroupTable::cyclic(4);
  if (name == "klein") return GroupTable::klein_four();
  if (name == "s3") return GroupTable::symmetric3();
  if (name == "d4") return GroupTable::dihedral4();
  // Otherwise: a file with the order n followed by n*n table entries.
  std::ifstream in(name);
  if (!in) throw ParseError("unknown group '" + name + "' and no such file", 0);
  int n = 0;
  if (!(in >> n) || n <= 0) throw ParseError("bad group table header", 1);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> t[i][j])) throw ParseError("truncated group table", 1);
  return GroupTable(std::move(t));
}

int cmd_verify(const std::string& path, const CommonOpts& opts) {
  const FiniteQuantumGroup g = load_definition(path, opts.tol());
  const AxiomReport rep = verify_axioms(g, opts.tol());
  if (opts.structured()) {
    ordered_json out;
    out["name"] = g.name();
    out["dim"] = g.dim();
    out["commutative"] = g.is_commutative();
    out["cocommutative"] = g.is_cocommutative();
    out["max_residual"] = rep.max_residual();
    out["checks"] = json_report(rep);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "name: " << g.name() << "\ndim: " << g.dim() << "\n"
              << rep.summary() << "max residual: " << rep.max_residual() << "\n";
  }
  return 0;
}

int cmd_irr(const std::string& path, const CommonOpts& opts) {
  const FiniteQuantumGroup g = load_definition(path, opts.tol());
  const IrrTable table = wedderburn(g, opts.tol(), opts.seed);
  if (opts.structured()) {
    ordered_json out;
    out["name"] = g.name();
    out["dim"] = g.dim();
    out["seed"] = table.seed;
    out["blocks"] = table.block_dims();
    out["convention"] = "e_ij = tr(F) sum_k inv(F)_ik hat(star(u_kj))";
    ordered_json blocks = ordered_json::array();
    for (const auto& b : table.blocks) {
      ordered_json jb;
      jb["n"] = b.n;
      ordered_json f = ordered_json::array();
      for (int i = 0; i < b.F.size(); ++i) f.push_back(b.F(i));
      jb["F"] = f;
      jb["fingerprint"] = json_complex_vector(b.fingerprint);
      blocks.push_back(jb);
    }
    out["block_detail"] = blocks;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "name: " << g.name() << "\n";
    std::cout << "blocks: " << dims_string(table.block_dims()) << "\n";
    std::cout << irr_report(table);
  }
  return 0;
}

int cmd_hull(const std::string& path, const std::string& gens_path,
             const CommonOpts& opts) {
  const FiniteQuantumGroup g = load_definition(path, opts.tol());
  const IrrTable table = wedderburn(g, opts.tol(), opts.seed);
  std::vector<Functional> gens;
  for (Vec& v : load_covectors(gens_path, g.dim()))
    gens.emplace_back(g, std::move(v));
  const IdealSubspace ideal = left_ideal_from_generators(g, gens, opts.tol());
  const Hull hull = hull_of(table, ideal, opts.tol());
  const IdealSubspace back = ideal_I(table, hull, opts.tol());
  const SynthesisReport syn = verify_synthesis(table, ideal, opts.tol());
  if (opts.structured()) {
    ordered_json out;
    out["name"] = g.name();
    out["generators"] = gens.size();
    out["dim_ideal"] = ideal.space.dim();
    out["hull"] = hull.dims();
    out["dim_ideal_of_hull"] = back.space.dim();
    out["synthesis"] = syn.ok;
    out["forward_residual"] = syn.forward_residual;
    out["backward_residual"] = syn.backward_residual;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "E: [" << dims_string(hull.dims()) << "]; dim I(E)="
              << back.space.dim() << "; synthesis: " << (syn.ok ? "OK" : "FAIL")
              << "\n";
    std::cout << hull_report(table, hull);
  }
  return syn.ok ? 0 : 4;
}

ordered_json quasi_state_report(const FiniteQuantumGroup& g, const IrrTable& table,
                                const IntrinsicGroup& gr, const IdempotentState& st,
                                const CommonOpts& opts, std::ostream& human,
                                bool structured) {
  const IdempotentCheck chk = check_idempotent_state(g, st.omega, opts.tol());
  const Coideal n = coideal_of(g, st, opts.tol());
  const Hull hull = hull_of_quasi_subgroup(table, st, opts.tol());
  const AxiomReport runit = right_unit_check(g, st, opts.tol());
  int equals_n = 0, zero = 0;
  for (const auto& x : gr.elements) {
    const CosetRelation rel = disjointness_check(g, x, n, opts.tol());
    (rel == CosetRelation::EqualsN ? equals_n : zero) += 1;
  }
  if (structured) {
    ordered_json out;
    out["omega"] = json_complex_vector(st.omega.covec);
    out["residuals"] = {{"unital", chk.unital_residual},
                        {"idempotency", chk.idempotency_residual},
                        {"gram_min_eigenvalue", chk.positivity_min_eigenvalue}};
    out["coideal_dim"] = n.space.dim();
    out["hull"] = hull.dims();
    out["invariant"] = coideal_is_invariant(n, opts.tol());
    out["right_unit"] = runit.all_pass();
    out["right_unit_checks"] = json_report(runit);
    out["cosets"] = {{"equals_n", equals_n}, {"zero", zero}};
    return out;
  }
  human << "omega: N dim " << n.space.dim() << "; hull [" << dims_string(hull.dims())
        << "]; right-unit " << (runit.all_pass() ? "OK" : "FAIL") << "; cosets: "
        << equals_n << "xEqualsN, " << zero << "xZero\n";
  return {};
}

int cmd_quasi(const std::string& path, const std::string& omega_path, bool search,
              int starts, const CommonOpts& opts) {
  const FiniteQuantumGroup g = load_definition(path, opts.tol());
  const IrrTable table = wedderburn(g, opts.tol(), opts.seed);
  const IntrinsicGroup gr = intrinsic_group(table, opts.tol());
  std::vector<IdempotentState> states;
  bool exhaustive = false;
  if (search) {
    auto result = search_idempotent_states(g, table, starts, opts.tol(), opts.seed);
    states = std::move(result.states);
    exhaustive = result.exhaustive;
  } else {
    const auto rows = load_covectors(omega_path, g.dim());
    for (const Vec& v : rows)
      states.push_back(make_idempotent_state(Functional(g, v), opts.tol()));
  }
  if (opts.structured()) {
    ordered_json out;
    out["name"] = g.name();
    out["intrinsic_group_order"] = gr.size();
    out["search"] = search;
    if (search) out["exhaustive"] = exhaustive;
    ordered_json arr = ordered_json::array();
    for (const auto& st : states)
      arr.push_back(quasi_state_report(g, table, gr, st, opts, std::cout, true));
    out["states"] = arr;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "name: " << g.name() << "\nintrinsic group order: " << gr.size()
              << "\n";
    if (search)
      std::cout << "found " << states.size() << " idempotent state(s)"
                << (exhaustive ? " (exhaustive family)" : " (non-exhaustive search)")
                << "\n";
    for (const auto& st : states)
      quasi_state_report(g, table, gr, st, opts, std::cout, false);
  }
  return 0;
}

int cmd_coset(const std::string& path, const std::string& omega_path, int x_index,
              const CommonOpts& opts) {
  const FiniteQuantumGroup g = load_definition(path, opts.tol());
  const IrrTable table = wedderburn(g, opts.tol(), opts.seed);
  const IntrinsicGroup gr = intrinsic_group(table, opts.tol());
  const auto rows = load_covectors(omega_path, g.dim());
  if (rows.empty()) throw ParseError("omega file holds no covector", 0);
  const auto st = make_idempotent_state(Functional(g, rows.front()), opts.tol());
  const Coideal n = coideal_of(g, st, opts.tol());
  const IdealSubspace j = J1(g, n, opts.tol());

  ordered_json arr = ordered_json::array();
  for (int i = 0; i < gr.size(); ++i) {
    if (x_index >= 0 && i != x_index) continue;
    const GroupLike& x = gr.elements[i];
    const CosetRelation rel = disjointness_check(g, x, n, opts.tol());
    const IdealSubspace moved = translate_ideal(g, j, x, opts.tol());
    const bool inside = rel == CosetRelation::EqualsN;
    const bool surjective = inside ? false : surjectivity_check(g, n, x, opts.tol());
    if (opts.structured()) {
      arr.push_back({{"x", i},
                     {"relation", inside ? "EqualsN" : "Zero"},
                     {"translated_dim", moved.space.dim()},
                     {"surjective",
                      inside ? ordered_json(nullptr) : ordered_json(surjective)}});
    } else {
      std::cout << "x=" << i << ": xN cap N " << (inside ? "= N" : "= 0")
                << "; dim(J1.x)=" << moved.space.dim();
      if (!inside) std::cout << "; T_N surjective: " << (surjective ? "yes" : "NO");
      std::cout << "\n";
    }
  }
  if (opts.structured()) {
    ordered_json out;
    out["name"] = g.name();
    out["coideal_dim"] = n.space.dim();
    out["cosets"] = arr;
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_crossed(const std::string& path, const std::string& gamma_name,
                const std::string& action_kind, const std::string& perm_path,
                const std::string& out_path, const CommonOpts& opts) {
  const FiniteQuantumGroup g = load_definition(path, opts.tol());
  const GroupTable gamma = named_group(gamma_name);
  HopfAction action = trivial_action(g, gamma);
  if (action_kind == "perm") {
    std::ifstream in(perm_path);
    if (!in) throw ParseError("cannot open permutation file", 0);
    std::vector<std::vector<int>> perms(gamma.order(), std::vector<int>(g.dim()));
    for (int s = 0; s < gamma.order(); ++s)
      for (int i = 0; i < g.dim(); ++i)
        if (!(in >> perms[s][i])) throw ParseError("truncated permutation file", 0);
    action = permutation_action(g, gamma, perms);
  } else if (action_kind != "trivial") {
    throw ParseError("unknown action kind '" + action_kind + "'", 0);
  }

  const CrossedProduct cp = build_crossed_product(g, action, opts.tol());
  if (!out_path.empty()) save_definition(cp.product, out_path);
  const IrrTable gtable = wedderburn(g, opts.tol(), opts.seed);
  const AxiomReport irr_rep =
      verify_crossed_irr(gtable, cp.product, action, opts.tol(), opts.seed);
  const IrrTable ptable = wedderburn(cp.product, opts.tol(), opts.seed);

  if (opts.structured()) {
    ordered_json out;
    out["name"] = cp.product.name();
    out["dim"] = cp.product.dim();
    out["convention"] =
        (cp.convention == CrossedConvention::Standard) ? "standard" : "printed";
    out["blocks"] = ptable.block_dims();
    out["irr_check"] = json_report(irr_rep);
    out["output"] = out_path;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "product dim: " << cp.product.dim() << "\n";
    std::cout << "convention: "
              << (cp.convention == CrossedConvention::Standard ? "standard (st)"
                                                               : "printed (s^-1 t)")
              << "\n";
    std::cout << "blocks: " << dims_string(ptable.block_dims()) << "\n";
    std::cout << "irr: " << (irr_rep.all_pass() ? "duplicated OK" : "MISMATCH")
              << "\n";
    if (!out_path.empty()) std::cout << "wrote " << out_path << "\n";
  }
  return irr_rep.all_pass() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quantum group workbench"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string path, gens_path, omega_path, gamma_name = "z2";
  std::string action_kind = "trivial", perm_path, out_path;
  bool search = false;
  int starts = 24, x_index = -1;

  auto* verify =
      app.add_subcommand("verify", "parse a definition and check every axiom");
  verify->add_option("file", path)->required();
  add_common(verify, opts);

  auto* irr =
      app.add_subcommand("irr", "block decomposition of the convolution algebra");
  irr->add_option("file", path)->required();
  add_common(irr, opts);

  auto* hull =
      app.add_subcommand("hull", "hull and synthesis of a generated left ideal");
  hull->add_option("file", path)->required();
  hull->add_option("--gens", gens_path, "covector file of generators")->required();
  add_common(hull, opts);

  auto* quasi = app.add_subcommand("quasi", "idempotent states and quasi-subgroups");
  quasi->add_option("file", path)->required();
  quasi->add_option("--omega", omega_path, "covector file of candidate states");
  quasi->add_flag("--search", search, "search for idempotent states");
  quasi->add_option("--starts", starts, "random starts for the search");
  add_common(quasi, opts);

  auto* coset = app.add_subcommand("coset", "quantum cosets of a quasi-subgroup");
  coset->add_option("file", path)->required();
  coset->add_option("--omega", omega_path)->required();
  coset->add_option("--x", x_index, "intrinsic group element index (default: all)");
  add_common(coset, opts);

  auto* crossed = app.add_subcommand("crossed", "discrete crossed product");
  crossed->add_option("file", path)->required();
  crossed->add_option("--gamma", gamma_name, "z2|z3|z4|klein|s3|d4 or a table file");
  crossed->add_option("--action", action_kind, "trivial | perm");
  crossed->add_option("--perm-file", perm_path,
                      "permutations, one row per group element");
  crossed->add_option("-o,--out", out_path, "write the product definition here");
  add_common(crossed, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(path, opts);
    if (*irr) return cmd_irr(path, opts);
    if (*hull) return cmd_hull(path, gens_path, opts);
    if (*quasi) {
      if (!search && omega_path.empty()) {
        std::cerr << "quasi: need --omega or --search\n";
        return 1;
      }
      return cmd_quasi(path, omega_path, search, starts, opts);
    }
    if (*coset) return cmd_coset(path, omega_path, x_index, opts);
    if (*crossed)
      return cmd_crossed(path, gamma_name, action_kind, perm_path, out_path, opts);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const NotAGroupError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const MalformedDefinitionError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const AmbientMismatchError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const AxiomFailureError& e) {
    std::cerr << "axiom failure:\n" << e.report.summary();
    return 2;
  } catch (const ContractViolationError& e) {
    std::cerr << "axiom failure: " << e.what() << "\n";
    return 2;
  } catch (const TheoremViolationError& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
