#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "revcore/attractor.hpp"
#include "revcore/burnside.hpp"
#include "revcore/homotopy.hpp"
#include "revcore/inverse.hpp"
#include "revcore/io.hpp"

namespace {

using namespace revcore;

Side parse_side_flag(const std::string& s) {
  if (s == "l") return Side::Left;
  if (s == "r") return Side::Right;
  throw invalid_input("--side must be l or r");
}

void write_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_input(path + ": cannot open for writing");
  out << content;
  if (!out) throw invalid_input(path + ": write failed");
}

std::string pair_list(const FiniteBiAction& source, const FiniteBiAction& target,
                      const std::vector<int>& map) {
  std::string out;
  for (int s = 0; s < source.size(); ++s) {
    if (s > 0) out += ' ';
    out += source.carrier[s] + "->" + target.carrier[map[s]];
  }
  return out;
}

void print_inverted(const InvertedAction& inv) {
  std::cout << "core:";
  for (int x : inv.core) std::cout << ' ' << inv.base.carrier[x];
  std::cout << '\n';
  const bool right_side = inv.side != InvKind::RightToLeft;
  const char* label = right_side ? "right" : "left";
  const std::vector<Endo>& fam = right_side ? inv.action.right : inv.action.left;
  for (std::size_t g = 0; g < fam.size(); ++g) {
    std::cout << label << ' ' << inv.action.monoid.generators[g] << ':';
    for (int p = 0; p < inv.action.size(); ++p)
      std::cout << ' ' << inv.action.carrier[p] << "->" << inv.action.carrier[fam[g][p]];
    std::cout << '\n';
  }
}

int cmd_validate(const std::string& path) {
  FiniteBiAction a = load_action_file(path);
  SubActionFlags flags = validate_biaction(a);
  std::cout << "valid: true\n";
  std::cout << "semi_invertible: " << (flags.semi_invertible ? "true" : "false") << '\n';
  std::cout << "invertible_left: " << (flags.invertible_left ? "true" : "false") << '\n';
  std::cout << "invertible_right: " << (flags.invertible_right ? "true" : "false") << '\n';
  return 0;
}

int cmd_tmon(const std::string& path) {
  FiniteBiAction a = load_action_file(path);
  JointTransitionMonoid jm = biaction_monoid(a);
  std::cout << "size: " << jm.elements.size() << '\n';
  auto dump = [](const Endo& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(f[i]);
    }
    return out + "]";
  };
  for (std::size_t e = 0; e < jm.elements.size(); ++e)
    std::cout << 'e' << e << ": left=" << dump(jm.elements[e][0])
              << " right=" << dump(jm.elements[e][1]) << '\n';
  for (std::size_t g = 0; g < jm.generator_of.size(); ++g)
    std::cout << "gen " << a.monoid.generators[g] << " -> e" << jm.generator_of[g] << '\n';
  return 0;
}

int cmd_core(const std::string& path, const std::string& side) {
  FiniteBiAction a = load_action_file(path);
  std::vector<int> core = reversible_core(a, parse_side_flag(side));
  std::cout << "core:";
  for (int x : core) std::cout << ' ' << a.carrier[x];
  std::cout << '\n';
  return 0;
}

int cmd_invert(const std::string& path, const std::string& side, const std::string& out) {
  FiniteBiAction a = load_action_file(path);
  InvertedAction inv = invert(a, parse_side_flag(side));
  print_inverted(inv);
  if (!out.empty()) {
    write_file(out, serialize_action(inv.action));
    std::cout << "written: " << out << '\n';
  }
  return 0;
}

int cmd_inv(const std::string& path, const std::string& out) {
  FiniteBiAction a = load_action_file(path);
  InvertedAction inv = inv_total(a);
  print_inverted(inv);
  if (!out.empty()) {
    write_file(out, serialize_action(inv.action));
    std::cout << "written: " << out << '\n';
  }
  return 0;
}

int cmd_ev(const std::string& path) {
  FiniteBiAction a = load_action_file(path);
  if (!a.monoid.unit) {
    std::cout << "ev: n/a\n";
    return 0;
  }
  InvertedAction inv = inv_total(a);
  EquivariantMap ev = evaluate(inv);
  std::cout << "ev:";
  for (int p = 0; p < inv.action.size(); ++p)
    std::cout << ' ' << inv.action.carrier[p] << "->" << a.carrier[ev.map[p]];
  std::cout << '\n';
  return 0;
}

int cmd_equivariant(const std::string& path) {
  MapFileData data = load_map_file(path);
  if (is_equivariant(data.map, data.source, data.target)) {
    std::cout << "equivariant: true\n";
    return 0;
  }
  std::cout << "equivariant: false\n";
  for (int g = 0; g < data.source.monoid.generator_count(); ++g)
    for (int s = 0; s < data.source.size(); ++s)
      if (data.target.right[g][data.map[data.source.left[g][s]]] !=
          data.target.left[g][data.map[data.source.right[g][s]]]) {
        std::cout << "fail: generator " << data.source.monoid.generators[g] << " state "
                  << data.source.carrier[s] << '\n';
        return 1;
      }
  return 1;
}

int cmd_maps(const std::string& pa, const std::string& pb) {
  FiniteBiAction a = load_action_file(pa);
  FiniteBiAction b = load_action_file(pb);
  std::vector<EquivariantMap> maps = enumerate_equivariant_maps(a, b);
  std::cout << "count: " << maps.size() << '\n';
  for (const auto& m : maps) std::cout << "map: " << pair_list(a, b, m.map) << '\n';
  return 0;
}

int cmd_weq(const std::string& path) {
  MapFileData data = load_map_file(path);
  if (!is_equivariant(data.map, data.source, data.target))
    throw invalid_input(path + ": map is not equivariant");
  EquivariantMap f = make_equivariant_map(data.source, data.target, data.map);
  WeakEquivalenceCertificate cert = is_weak_equivalence(f);
  std::cout << "weak_equivalence: " << (cert.verdict ? "true" : "false") << '\n';
  Side sa = data.source.right_trivial() ? Side::Left : Side::Right;
  Side sb = data.target.right_trivial() ? Side::Left : Side::Right;
  std::vector<int> core_a = reversible_core(data.source, sa);
  std::vector<int> core_b = reversible_core(data.target, sb);
  std::cout << "core_map:";
  for (std::size_t p = 0; p < core_a.size(); ++p)
    std::cout << ' ' << data.source.carrier[core_a[p]] << "->"
              << data.target.carrier[core_b[cert.core_restriction[p]]];
  std::cout << '\n';
  return cert.verdict ? 0 : 1;
}

int cmd_iso(const std::string& pa, const std::string& pb) {
  FiniteBiAction a = load_action_file(pa);
  FiniteBiAction b = load_action_file(pb);
  std::optional<EquivariantMap> iso = find_isomorphism(a, b);
  if (!iso.has_value()) {
    std::cout << "iso: none\n";
    return 1;
  }
  std::cout << "iso: " << pair_list(a, b, iso->map) << '\n';
  return 0;
}

int cmd_combine(const std::string& pa, const std::string& pb, const std::string& out,
                bool is_product) {
  FiniteBiAction a = load_action_file(pa);
  FiniteBiAction b = load_action_file(pb);
  FiniteBiAction c = is_product ? product(a, b) : coproduct(a, b);
  std::cout << "states: " << c.size() << '\n';
  write_file(out, serialize_action(c));
  std::cout << "written: " << out << '\n';
  return 0;
}

EquivariantMap map_from_file(const std::string& path) {
  MapFileData data = load_map_file(path);
  if (!is_equivariant(data.map, data.source, data.target))
    throw invalid_input(path + ": map is not equivariant");
  return make_equivariant_map(data.source, data.target, data.map);
}

void write_map(const std::string& dir, const std::string& name,
               const EquivariantMap& m, const std::string& source_file,
               const std::string& target_file) {
  write_file(dir + "/" + name,
             serialize_map(m.source, m.target, m.map, source_file, target_file));
  std::cout << "written: " << dir + "/" + name << '\n';
}

void write_action(const std::string& dir, const std::string& name, const FiniteBiAction& a) {
  write_file(dir + "/" + name, serialize_action(a));
  std::cout << "written: " << dir + "/" + name << '\n';
}

int cmd_pushout(const std::string& pm1, const std::string& pm2, const std::string& dir) {
  EquivariantMap u = map_from_file(pm1);
  EquivariantMap f = map_from_file(pm2);
  PushoutResult res = pushout(u, f);
  std::cout << "object states: " << res.object.size() << '\n';
  write_action(dir, "object.json", res.object);
  write_action(dir, "aprime.json", u.target);
  write_action(dir, "b.json", f.target);
  write_map(dir, "fprime.json", res.f_prime, "aprime.json", "object.json");
  write_map(dir, "uprime.json", res.u_prime, "b.json", "object.json");
  return 0;
}

int cmd_pullback(const std::string& pm1, const std::string& pm2, const std::string& dir) {
  EquivariantMap g = map_from_file(pm1);
  EquivariantMap v = map_from_file(pm2);
  PullbackResult res = pullback(g, v);
  std::cout << "object states: " << res.object.size() << '\n';
  write_action(dir, "object.json", res.object);
  write_action(dir, "x.json", g.source);
  write_action(dir, "yprime.json", v.source);
  write_map(dir, "gprime.json", res.g_prime, "object.json", "yprime.json");
  write_map(dir, "vprime.json", res.v_prime, "object.json", "x.json");
  return 0;
}

int cmd_factorize(const std::string& path, const std::string& dir) {
  EquivariantMap w = map_from_file(path);
  FactorizationResult res = factorize_weq(w);
  std::cout << "object states: " << res.object.size() << '\n';
  std::cout << "composite equals: " << (res.factorization.composite_equals ? "true" : "false")
            << '\n';
  write_action(dir, "object.json", res.object);
  write_action(dir, "m.json", w.source);
  write_action(dir, "n.json", w.target);
  write_map(dir, "u.json", res.factorization.u, "m.json", "object.json");
  write_map(dir, "v.json", res.factorization.v, "object.json", "n.json");
  write_map(dir, "utilde.json", res.u_tilde, "n.json", "object.json");
  return 0;
}

int cmd_attractors(const std::string& path, const std::string& reach) {
  FiniteBiAction a = load_action_file(path);
  ReachMode mode;
  if (reach == "all")
    mode = ReachMode::All;
  else if (reach == "any")
    mode = ReachMode::Any;
  else
    throw invalid_input("--reach must be all or any");
  AttractorDecomposition dec = attractor_decomposition(a, mode);
  std::cout << "components: " << dec.components.size() << '\n';
  for (std::size_t c = 0; c < dec.components.size(); ++c) {
    std::cout << "component " << c << " (periodic=" << (dec.periodic[c] ? "true" : "false")
              << "):";
    for (int s : dec.components[c]) std::cout << ' ' << a.carrier[s];
    std::cout << '\n';
  }
  std::cout << "basin:";
  for (int s : dec.basin) std::cout << ' ' << a.carrier[s];
  std::cout << '\n';
  return 0;
}

int cmd_dot(const std::string& path, const std::string& out, const std::string& side) {
  FiniteBiAction a = load_action_file(path);
  std::optional<Side> s;
  if (!side.empty()) s = parse_side_flag(side);
  write_file(out, export_dot(a, s));
  std::cout << "written: " << out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite monoid biactions: reversible cores, inverse actions, "
               "weak equivalences, Burnside classes and attractors"};
  app.require_subcommand(1);

  std::string path_a, path_b, out, side = "l", reach = "all", e1, e2;

  auto* validate = app.add_subcommand("validate", "check an action file");
  validate->add_option("action", path_a)->required();

  auto* tmon = app.add_subcommand("tmon", "transition monoid of an action");
  tmon->add_option("action", path_a)->required();

  auto* core = app.add_subcommand("core", "reversible core of a one-sided action");
  core->add_option("action", path_a)->required();
  core->add_option("--side", side, "l or r");

  auto* invert_cmd = app.add_subcommand("invert", "invert a one-sided action");
  invert_cmd->add_option("action", path_a)->required();
  invert_cmd->add_option("--side", side, "l or r");
  invert_cmd->add_option("-o,--output", out, "write the inverted action here");

  auto* inv_cmd = app.add_subcommand("inv", "total inversion of a one-sided action");
  inv_cmd->add_option("action", path_a)->required();
  inv_cmd->add_option("-o,--output", out, "write the inverted action here");

  auto* ev_cmd = app.add_subcommand("ev", "evaluation map of the total inversion");
  ev_cmd->add_option("action", path_a)->required();

  auto* equivariant_cmd = app.add_subcommand("equivariant", "check a map file");
  equivariant_cmd->add_option("map", path_a)->required();

  auto* maps_cmd = app.add_subcommand("maps", "enumerate equivariant maps");
  maps_cmd->add_option("source", path_a)->required();
  maps_cmd->add_option("target", path_b)->required();

  auto* weq_cmd = app.add_subcommand("weq", "check a map file for weak equivalence");
  weq_cmd->add_option("map", path_a)->required();

  auto* iso_cmd = app.add_subcommand("iso", "search for an equivariant isomorphism");
  iso_cmd->add_option("left", path_a)->required();
  iso_cmd->add_option("right", path_b)->required();

  auto* product_cmd = app.add_subcommand("product", "product of two actions");
  product_cmd->add_option("left", path_a)->required();
  product_cmd->add_option("right", path_b)->required();
  product_cmd->add_option("-o,--output", out)->required();

  auto* coproduct_cmd = app.add_subcommand("coproduct", "disjoint union of two actions");
  coproduct_cmd->add_option("left", path_a)->required();
  coproduct_cmd->add_option("right", path_b)->required();
  coproduct_cmd->add_option("-o,--output", out)->required();

  auto* pushout_cmd = app.add_subcommand("pushout", "pushout of two maps from one source");
  pushout_cmd->add_option("u", path_a)->required();
  pushout_cmd->add_option("f", path_b)->required();
  pushout_cmd->add_option("-o,--output", out, "output directory")->required();

  auto* pullback_cmd = app.add_subcommand("pullback", "pullback of two maps into one target");
  pullback_cmd->add_option("g", path_a)->required();
  pullback_cmd->add_option("v", path_b)->required();
  pullback_cmd->add_option("-o,--output", out, "output directory")->required();

  auto* factorize_cmd =
      app.add_subcommand("factorize", "factor a weak equivalence as surjection after inclusion");
  factorize_cmd->add_option("map", path_a)->required();
  factorize_cmd->add_option("-o,--output", out, "output directory")->required();

  auto* burnside_cmd = app.add_subcommand("burnside", "Burnside ring arithmetic");
  burnside_cmd->require_subcommand(1);
  auto* b_class = burnside_cmd->add_subcommand("class", "class of a free commutative machine");
  b_class->add_option("action", path_a)->required();
  auto* b_mul = burnside_cmd->add_subcommand("mul", "product of two elements");
  b_mul->add_option("e1", e1)->required();
  b_mul->add_option("e2", e2)->required();
  auto* b_add = burnside_cmd->add_subcommand("add", "sum of two elements");
  b_add->add_option("e1", e1)->required();
  b_add->add_option("e2", e2)->required();

  auto* attractors_cmd = app.add_subcommand("attractors", "attractor decomposition");
  attractors_cmd->add_option("action", path_a)->required();
  attractors_cmd->add_option("--reach", reach, "all or any");

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export");
  dot_cmd->add_option("action", path_a)->required();
  dot_cmd->add_option("-o,--output", out)->required();
  std::string dot_side;
  dot_cmd->add_option("--side", dot_side, "l or r");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(path_a);
    if (tmon->parsed()) return cmd_tmon(path_a);
    if (core->parsed()) return cmd_core(path_a, side);
    if (invert_cmd->parsed()) return cmd_invert(path_a, side, out);
    if (inv_cmd->parsed()) return cmd_inv(path_a, out);
    if (ev_cmd->parsed()) return cmd_ev(path_a);
    if (equivariant_cmd->parsed()) return cmd_equivariant(path_a);
    if (maps_cmd->parsed()) return cmd_maps(path_a, path_b);
    if (weq_cmd->parsed()) return cmd_weq(path_a);
    if (iso_cmd->parsed()) return cmd_iso(path_a, path_b);
    if (product_cmd->parsed()) return cmd_combine(path_a, path_b, out, true);
    if (coproduct_cmd->parsed()) return cmd_combine(path_a, path_b, out, false);
    if (pushout_cmd->parsed()) return cmd_pushout(path_a, path_b, out);
    if (pullback_cmd->parsed()) return cmd_pullback(path_a, path_b, out);
    if (factorize_cmd->parsed()) return cmd_factorize(path_a, out);
    if (burnside_cmd->parsed()) {
      if (b_class->parsed()) {
        std::cout << format_burnside(burnside_class(load_action_file(path_a))) << '\n';
        return 0;
      }
      BurnsideElement x = parse_burnside(e1);
      BurnsideElement y = parse_burnside(e2);
      std::cout << format_burnside(b_mul->parsed() ? burnside_mul(x, y) : burnside_add(x, y))
                << '\n';
      return 0;
    }
    if (attractors_cmd->parsed()) return cmd_attractors(path_a, reach);
    if (dot_cmd->parsed()) return cmd_dot(path_a, out, dot_side);
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
