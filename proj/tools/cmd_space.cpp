#include <memory>

#include "cli.hpp"
#include "connective/foliation.hpp"
#include "connective/order.hpp"

namespace connective::cli {

namespace {

using Path = std::shared_ptr<std::string>;
Path path() { return std::make_shared<std::string>(); }

Space load_space(const std::string& p) { return io::space_from_json(read_input(p).doc); }

CLI::Option* input(CLI::App* sub, const char* name, const Path& p, const char* what) {
  return sub->add_option(name, *p, what)->required();
}

json components_json(const Components& c) {
  json comps = json::array();
  for (Subset s : c.components) comps.push_back(io::subset_to_json(s));
  return {{"components", comps}, {"absent", io::subset_to_json(c.absent)}};
}

}  // namespace

void register_space_commands(Registry& reg) {
  {
    auto file = path();
    auto* sub = reg.add("validate", "Check the connectivity axioms of a space", [file] {
      io::RawSpace raw = io::raw_space_from_json(read_input(*file).doc);
      bool valid = validate_structure(raw.points, raw.connected);
      json r = {{"valid", valid}, {"points", raw.points}};
      if (valid) r["integral"] = Space(raw.points, raw.connected).is_integral();
      return Report{valid, r};
    });
    input(sub, "space", file, "Space JSON");
  }
  {
    auto file = path();
    auto integral = std::make_shared<bool>(false);
    auto* sub = reg.add("generate", "Least structure containing the listed parts", [file, integral] {
      io::RawSpace raw = io::raw_space_from_json(read_input(*file).doc);
      return Report{true, io::to_json(trusted_space(raw.points, generate(raw.points, raw.connected, *integral)))};
    });
    input(sub, "space", file, "Space JSON (the family need not be closed)");
    sub->add_flag("--integral", *integral, "Also make every singleton connected");
  }
  {
    auto file = path();
    auto* sub = reg.add("components", "Connected components and absent points",
                        [file] { return Report{true, components_json(connected_components(load_space(*file)))}; });
    input(sub, "space", file, "Space JSON");
  }
  {
    auto file = path();
    auto pts = std::make_shared<std::vector<int>>();
    auto* sub = reg.add("induce", "Structure induced on a subset, points re-indexed in ascending order", [file, pts] {
      Space sp = load_space(*file);
      return Report{true, io::to_json(induced(sp, subset_arg(*pts, sp.size())))};
    });
    input(sub, "space", file, "Space JSON");
    sub->add_option("--subset", *pts, "Comma-separated point indices")->delimiter(',')->required();
  }
  {
    auto file = path(), eq = path();
    auto* sub = reg.add("quotient", "Quotient by a total equivalence, classes ordered by least member", [file, eq] {
      return Report{true, io::to_json(quotient(load_space(*file), io::partial_equiv_from_json(read_input(*eq).doc)))};
    });
    input(sub, "space", file, "Space JSON");
    input(sub, "equivalence", eq, "Equivalence JSON {\"points\", \"classes\"}");
  }
  {
    auto file = path(), eq = path();
    auto* sub = reg.add("quotient-partial", "Quotient by a partial equivalence", [file, eq] {
      return Report{true,
                    io::to_json(quotient_partial(load_space(*file), io::partial_equiv_from_json(read_input(*eq).doc)))};
    });
    input(sub, "space", file, "Space JSON");
    input(sub, "equivalence", eq, "Partial equivalence JSON {\"points\", \"classes\"}");
  }
  {
    auto file = path(), eq = path();
    auto* sub = reg.add("structural-quotient", "Initial structure along the projection onto the quotient", [file, eq] {
      return Report{true, io::to_json(structural_quotient(load_space(*file),
                                                          io::partial_equiv_from_json(read_input(*eq).doc)))};
    });
    input(sub, "space", file, "Space JSON");
    input(sub, "equivalence", eq, "Equivalence JSON {\"points\", \"classes\"}");
  }
  {
    auto file = path();
    auto* sub = reg.add("saturate", "Saturation of a structure, with its partial equivalence", [file] {
      Space sp = load_space(*file);
      json r = io::to_json(saturate(sp));
      r["partial_equiv"] = io::to_json(pe_of_structure(sp));
      return Report{true, r};
    });
    input(sub, "space", file, "Space JSON");
  }
  {
    auto file = path();
    auto pts = std::make_shared<std::vector<int>>();
    auto* sub = reg.add("separate", "Whether a separation device splits a subset (exit 1 if not)", [file, pts] {
      SeparationDevice dev = io::device_from_json(read_input(*file).doc);
      bool s = separated(dev, subset_arg(*pts, dev.size()));
      return Report{s, {{"separated", s}}};
    });
    input(sub, "device", file, "Separation device JSON {\"points\", \"pairs\"}");
    sub->add_option("--subset", *pts, "Comma-separated point indices")->delimiter(',')->required();
  }
  {
    auto file = path();
    auto* sub = reg.add("from-device", "Space of the parts no pair of the device separates", [file] {
      SeparationDevice dev = io::device_from_json(read_input(*file).doc);
      return Report{true, io::to_json(space_from_device(dev.size(), dev))};
    });
    input(sub, "device", file, "Separation device JSON {\"points\", \"pairs\"}");
  }
  {
    auto file = path();
    auto* sub = reg.add("canonical-device", "Canonical separation device of an integral space",
                        [file] { return Report{true, io::to_json(canonical_device(load_space(*file)))}; });
    input(sub, "space", file, "Space JSON");
  }
  {
    auto map = path(), x = path(), y = path();
    auto* sub = reg.add("morphism-check", "Whether a point map sends connected parts to connected parts", [map, x, y] {
      bool m = morphism_check(io::point_map_from_json(read_input(*map).doc), load_space(*x), load_space(*y));
      return Report{m, {{"morphism", m}}};
    });
    input(sub, "map", map, "Point map JSON, an array or {\"map\": [...]}");
    input(sub, "source", x, "Source space JSON");
    input(sub, "target", y, "Target space JSON");
  }
  {
    auto file = path();
    auto* sub = reg.add("order", "Irreducible parts and connectivity order", [file] {
      Space sp = load_space(*file);
      IrrPoset p = irreducibles(sp);
      std::size_t chain = longest_chain(p);
      return Report{true,
                    {{"irreducibles", io::family_to_json(p.elements)},
                     {"chain_length", chain},
                     {"order", connectivity_order(sp).value},
                     {"order_def13", connectivity_order_predecessor(sp).value}}};
    });
    input(sub, "space", file, "Space JSON");
  }
  {
    auto file = path();
    auto* sub = reg.add("leaves", "Leaves of a foliation, ordered by least member", [file] {
      Foliation z = io::foliation_from_json(read_input(*file).doc);
      json ls = json::array();
      for (Subset s : leaves(z)) ls.push_back(io::subset_to_json(s));
      return Report{true, {{"leaves", ls}, {"regular", is_regular(z)}}};
    });
    input(sub, "foliation", file, "Foliation JSON");
  }
  {
    auto file = path();
    auto entrant = std::make_shared<bool>(false), sortant = std::make_shared<bool>(false);
    auto* sub = reg.add("leaf-space", "Leaf space: induced (--entrant) or quotient (--sortant)", [file, entrant, sortant] {
      if (!*entrant && !*sortant) throw InputError("leaf-space needs --entrant or --sortant");
      Foliation z = io::foliation_from_json(read_input(*file).doc);
      return Report{true, io::to_json(*entrant ? leaf_space_induced(z) : leaf_space_quotient(z))};
    });
    input(sub, "foliation", file, "Foliation JSON");
    auto* e = sub->add_flag("--entrant", *entrant, "Induced leaf space");
    auto* s = sub->add_flag("--sortant", *sortant, "Quotient leaf space");
    e->excludes(s);
  }
}

}  // namespace connective::cli
