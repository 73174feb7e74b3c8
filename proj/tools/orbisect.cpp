#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orbisect/errors.hpp"
#include "orbisect/euler.hpp"
#include "orbisect/io.hpp"
#include "orbisect/models.hpp"
#include "orbisect/sectors.hpp"

namespace {

using namespace orbisect;

struct Options {
  std::string space, group, gamma = "Z", out;
  std::optional<long long> budget;
  bool refine = false;
  bool summary = false;
  int tuples = 1;
  std::string relators = "commuting";
};

Budgets resolve_budgets(const Options& o) {
  Budgets b;
  if (const char* env = std::getenv("ORBISECT_BUDGET")) {
    try {
      b.hom_nodes = std::stoll(env);
    } catch (...) {
      throw InputError("ORBISECT_BUDGET is not an integer");
    }
  }
  if (o.budget) b.hom_nodes = *o.budget;
  if (b.hom_nodes < 1) throw InputError("budget must be positive");
  return b;
}

// Inputs are read and validated in full before any computation runs. The
// complex refers into the group, so the group is heap-owned to keep its
// address stable.
struct Loaded {
  std::shared_ptr<const FiniteGroup> group;
  EquivariantComplex space;
  io::GammaInput gamma;
  io::InputStamp stamp;
};

Loaded load(const Options& o, bool with_gamma = true) {
  const std::string group_text = io::read_file(o.group);
  const std::string space_text = io::read_file(o.space);
  Loaded in;
  in.group = std::make_shared<FiniteGroup>(io::group_from_json(group_text));
  in.space = io::complex_from_json(space_text, *in.group);
  in.stamp.space_path = o.space;
  in.stamp.space_hash = io::sha256_hex(space_text);
  in.stamp.group_path = o.group;
  in.stamp.group_hash = io::sha256_hex(group_text);
  if (with_gamma) {
    in.gamma = io::parse_gamma(o.gamma);
    in.stamp.gamma_name = in.gamma.presentation.name.empty()
                              ? "presentation(k=" +
                                    std::to_string(in.gamma.presentation.num_generators) +
                                    ",relators=" +
                                    std::to_string(in.gamma.presentation.relators.size()) + ")"
                              : in.gamma.presentation.name;
    in.stamp.gamma_path = in.gamma.path;
    in.stamp.gamma_hash = in.gamma.hash;
  }
  return in;
}

void stamp_builtin_gamma(Loaded& in, const GroupPresentation& p) {
  io::GammaInput g = io::parse_gamma(p.name);
  in.gamma = std::move(g);
  in.stamp.gamma_name = in.gamma.presentation.name;
  in.stamp.gamma_hash = in.gamma.hash;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

int emit(const Options& o, const std::string& report, const std::string& summary_text) {
  if (!o.out.empty())
    io::write_file_atomic(o.out, report);
  else
    std::cout << report;
  if (o.summary) std::cout << summary_text;
  return 0;
}

std::string sector_summary(const SectorDecomposition& d, bool refine) {
  std::ostringstream os;
  os << "gamma " << d.gamma_name << "\n";
  os << "coarse " << d.coarse.size() << "  refined " << d.refined.size()
     << "  subdivisions " << d.subdivisions << "\n";
  for (size_t i = 0; i < d.coarse.size(); ++i)
    os << "class " << i << ": rep [" << join(d.coarse[i].cls.representative.images)
       << "]  centralizer " << d.coarse[i].cls.centralizer.order() << "  components "
       << d.coarse[i].num_components << "\n";
  if (refine)
    for (size_t i = 0; i < d.refined.size(); ++i)
      os << "refined " << i << ": class " << d.refined[i].class_id << "  component "
         << d.refined[i].component_id << "  chi " << d.refined[i].chi << "  isotropy ["
         << join(d.refined[i].isotropy_orders) << "]\n";
  return os.str();
}

int cmd_sector_like(const Options& o, const GroupPresentation* fixed_gamma, int tuples) {
  Loaded in = load(o, fixed_gamma == nullptr);
  Budgets b = resolve_budgets(o);
  const GroupPresentation p =
      fixed_gamma ? *fixed_gamma
                  : in.gamma.presentation;
  if (fixed_gamma) stamp_builtin_gamma(in, p);

  SectorDecomposition d;
  if (fixed_gamma && tuples == 0)
    d = inertia(in.space, b);
  else if (fixed_gamma)
    d = multisectors(in.space, tuples, b);
  else
    d = gamma_sectors(in.space, p, b);

  auto classes = classify_homs(enumerate_homs(p, *in.group, b));
  return emit(o, io::sector_report(in.stamp, d, classes, o.refine),
              sector_summary(d, o.refine));
}

int cmd_euler(const Options& o) {
  Loaded in = load(o);
  Budgets b = resolve_budgets(o);
  auto r = gamma_euler(in.space, in.gamma.presentation, b);
  auto total = orbifold_euler_total(in.space);
  std::ostringstream os;
  os << "gamma " << r.gamma_name << "\nsector_sum " << r.sector_sum << "\noracle "
     << (r.oracle ? r.oracle->str() : "n/a") << "\nagree " << (r.agree ? "yes" : "no")
     << "\norbifold_total " << total.str() << "\n";
  int code = emit(o, io::euler_report(in.stamp, r, total), os.str());
  if (code == 0 && r.oracle && !r.agree) return 1;
  return code;
}

int cmd_leida(const Options& o) {
  Loaded in = load(o);
  Budgets b = resolve_budgets(o);
  auto l = leida_sectors(in.space, b);
  auto d = gamma_sectors(in.space, in.gamma.presentation, b);
  auto cov = covering_data(d, l);
  std::ostringstream os;
  os << "fixed-point sectors " << l.sectors.size() << "  subdivisions " << l.subdivisions
     << "\n";
  for (size_t i = 0; i < l.sectors.size(); ++i)
    os << "subgroup [" << join(l.sectors[i].subgroup.elements) << "] order "
       << l.sectors[i].subgroup.order() << ": components " << l.sectors[i].num_components
       << "\n";
  for (const auto& c : cov)
    os << "class " << c.class_id << " -> subgroup_class " << c.subgroup_class << "  index "
       << c.covering_index << "\n";
  return emit(o, io::leida_report(in.stamp, l, d, cov), os.str());
}

int cmd_covers(const Options& o) {
  Loaded in = load(o);
  Budgets b = resolve_budgets(o);
  auto r = covers_local_groups(in.space, in.gamma.presentation, b);
  std::ostringstream os;
  if (r.covers)
    os << "covers yes (" << r.witnesses.size() << " subgroups witnessed)\n";
  else
    os << "covers no (refuter subgroup [" << join(r.refuter->elements) << "])\n";
  return emit(o, io::covers_report(in.stamp, r), os.str());
}

int emit_certificate(const Options& o, const Loaded& in, const Certificate& cert) {
  std::ostringstream os;
  if (cert.ok)
    os << "check " << cert.check << " ok\n";
  else
    os << "check " << cert.check << " FAILED: " << cert.counterexample << "\n";
  for (const auto& [key, value] : cert.counts) os << "  " << key << " " << value << "\n";
  int code = emit(o, io::certificate_report(in.stamp, cert), os.str());
  if (code == 0 && !cert.ok) return 1;
  return code;
}

int cmd_verify_gamma(const Options& o, bool object_level) {
  Loaded in = load(o);
  Budgets b = resolve_budgets(o);
  auto cert = object_level ? verify_object_bijection(in.space, in.gamma.presentation, b)
                           : verify_class_equivalence(in.space, in.gamma.presentation, b);
  return emit_certificate(o, in, cert);
}

int cmd_verify_multik(const Options& o) {
  Loaded in = load(o, false);
  Budgets b = resolve_budgets(o);
  stamp_builtin_gamma(in, presentation::free_group(o.tuples));
  auto cert = verify_multisector_count(in.space, o.tuples, b);
  return emit_certificate(o, in, cert);
}

int cmd_verify_constants(const Options& o) {
  if (o.relators != "free" && o.relators != "commuting")
    throw InputError("--relators must be \"free\" or \"commuting\"");
  Loaded in = load(o, false);
  Budgets b = resolve_budgets(o);
  const bool free_mode = o.relators == "free";
  stamp_builtin_gamma(in, free_mode ? presentation::free_group(o.tuples)
                                    : presentation::free_abelian(o.tuples));
  auto cert = verify_constants_census(
      in.space, o.tuples, free_mode ? TupleRelators::Free : TupleRelators::Commuting, b);
  return emit_certificate(o, in, cert);
}

void add_common(CLI::App* cmd, Options& o, bool with_gamma) {
  cmd->add_option("--space", o.space, "complex JSON file")->required();
  cmd->add_option("--group", o.group, "group JSON file")->required();
  if (with_gamma)
    cmd->add_option("--gamma", o.gamma,
                    "builtin presentation (Z, Zk:k, Fk:k, C:n, D:n) or a JSON file");
  cmd->add_option("--out", o.out, "report file (stdout when absent)");
  cmd->add_option("--budget", o.budget, "enumeration budget override");
  cmd->add_flag("--summary", o.summary, "print a human-readable summary to stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sector decompositions of finite group actions on simplicial complexes"};
  app.require_subcommand(1);
  Options o;
  int which = 0;

  auto* sectors = app.add_subcommand("sectors", "sector decomposition for a presented group");
  add_common(sectors, o, true);
  sectors->add_flag("--refine", o.refine, "include refined sectors and their poset");
  sectors->callback([&] { which = 1; });

  auto* inert = app.add_subcommand("inertia", "single-loop sector decomposition");
  add_common(inert, o, false);
  inert->add_flag("--refine", o.refine, "include refined sectors and their poset");
  inert->callback([&] { which = 2; });

  auto* multi = app.add_subcommand("multisector", "k-loop sector decomposition");
  add_common(multi, o, false);
  multi->add_option("-k,--tuples", o.tuples, "number of loops")->required();
  multi->add_flag("--refine", o.refine, "include refined sectors and their poset");
  multi->callback([&] { which = 3; });

  auto* euler = app.add_subcommand("euler", "sector Euler characteristic sum with oracle");
  add_common(euler, o, true);
  euler->callback([&] { which = 4; });

  auto* leida = app.add_subcommand("leida", "fixed-point sectors and covering indices");
  add_common(leida, o, true);
  leida->callback([&] { which = 5; });

  auto* covers = app.add_subcommand("covers", "are all isotropy subgroups hit by images");
  add_common(covers, o, true);
  covers->callback([&] { which = 6; });

  auto* verify = app.add_subcommand("verify", "machine-checked structural equivalences");
  verify->require_subcommand(1);
  auto* thm31 = verify->add_subcommand(
      "thm31", "stabilizer-model vs global-model object identification");
  add_common(thm31, o, true);
  thm31->callback([&] { which = 7; });
  auto* lem23 = verify->add_subcommand(
      "lem23", "per-class equivalence with the centralizer action");
  add_common(lem23, o, true);
  lem23->callback([&] { which = 8; });
  auto* multik = verify->add_subcommand("multik", "k-loop object count, two ways");
  add_common(multik, o, false);
  multik->add_option("-k,--tuples", o.tuples, "number of loops")->required();
  multik->callback([&] { which = 9; });
  auto* constants = verify->add_subcommand(
      "constants", "tuple-built sectors against the sector decomposition");
  add_common(constants, o, false);
  constants->add_option("-k,--tuples", o.tuples, "tuple length")->required();
  constants->add_option("--relators", o.relators, "free | commuting");
  constants->callback([&] { which = 10; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const GroupPresentation z = presentation::integers();
    switch (which) {
      case 1: return cmd_sector_like(o, nullptr, 0);
      case 2: return cmd_sector_like(o, &z, 0);
      case 3: {
        const GroupPresentation fk = presentation::free_group(o.tuples);
        return cmd_sector_like(o, &fk, o.tuples);
      }
      case 4: return cmd_euler(o);
      case 5: return cmd_leida(o);
      case 6: return cmd_covers(o);
      case 7: return cmd_verify_gamma(o, true);
      case 8: return cmd_verify_gamma(o, false);
      case 9: return cmd_verify_multik(o);
      case 10: return cmd_verify_constants(o);
    }
  } catch (const CheckFailure& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
