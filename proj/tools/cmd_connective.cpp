#include <memory>

#include "cli.hpp"
#include "connective/conncat.hpp"
#include "connective/conndyn.hpp"

namespace connective::cli {

namespace {

using Path = std::shared_ptr<std::string>;
Path path() { return std::make_shared<std::string>(); }

CLI::Option* input(CLI::App* sub, const char* name, const Path& p, const char* what) {
  return sub->add_option(name, *p, what)->required();
}

ConnCat load_conncat(const std::string& p) {
  Input in = read_input(p);
  return io::conncat_from_json(in.doc, in.base_dir);
}

ConnDynamics load_conndyn(const std::string& p, bool categorical) {
  Input in = read_input(p);
  ConnDynamics cd = io::conndyn_from_json(in.doc, in.base_dir);
  if (categorical && !conndyn_validate(cd, true))
    throw InputError(p + ": arrow structure is not closed under composition");
  return cd;
}

}  // namespace

void register_connective_commands(Registry& reg) {
  {
    auto file = path();
    auto* sub = reg.add("conncat-validate", "Check a connectivity structure on the arrows of a category", [file] {
      ConnCat cc = load_conncat(*file);
      bool v = conncat_validate(cc);
      return Report{v, {{"valid", v}}};
    });
    input(sub, "conncat", file, "Category JSON with \"arrow_connected\"");
  }
  {
    auto file = path();
    auto integral = std::make_shared<bool>(false);
    auto* sub = reg.add("conncat-generate", "Least connective structure containing the listed arrow sets",
                        [file, integral] {
      ConnCat cc = load_conncat(*file);
      cc.arrow_connected = conncat_generate(cc.category, cc.arrow_connected, *integral);
      return Report{true, io::to_json(cc)};
    });
    input(sub, "conncat", file, "Category JSON with \"arrow_connected\"");
    sub->add_flag("--integral", *integral, "Also make every single arrow connected");
  }
  {
    auto file = path();
    auto* sub = reg.add("brunnian-order", "Connectivity order of the least integral structure joining all arrows",
                        [file] {
      return Report{true, {{"order", brunnian_order(load_conncat(*file).category).value}}};
    });
    input(sub, "category", file, "Category JSON");
  }
  {
    auto file = path();
    auto* sub = reg.add("monoid-check", "Whether a structure on a monoid is connective", [file] {
      io::MonoidInput in = io::monoid_from_json(read_input(*file).doc);
      MonoidFlags f = monoid_connective_check(in.monoid, in.connected);
      json r = {{"connective", f.connective}, {"regular_law", is_regular_law(in.monoid)}};
      if (f.via_translations) r["via_translations"] = *f.via_translations;
      try {
        r["inversion_preserves"] = inversion_preserves(in.monoid, in.connected);
      } catch (const DomainError&) {
        // Not a group: no inversion to test.
      }
      return Report{f.connective, r};
    });
    input(sub, "monoid", file, "Monoid JSON {\"table\", \"unit\", \"connected\", \"integral\"}");
  }
  {
    auto file = path();
    auto* sub = reg.add("object-connectivity", "Structure on objects generated by the arrows",
                        [file] { return Report{true, io::to_json(object_connectivity(load_conncat(*file).category))}; });
    input(sub, "category", file, "Category JSON");
  }
  {
    auto file = path();
    auto categorical = std::make_shared<bool>(false);
    auto* sub = reg.add("dyn-foliation", "Foliation of the states of a connective dynamics", [file, categorical] {
      ConnDynamics cd = load_conndyn(*file, *categorical);
      json r = io::to_json(dyn_foliation(cd));
      r["states"] = cd.dynamics.state_names();
      return Report{true, r};
    });
    input(sub, "conndyn", file, "Connective dynamics JSON");
    sub->add_flag("--categorical", *categorical, "Also require the arrow structure to be closed under composition");
  }
  {
    auto file = path();
    auto categorical = std::make_shared<bool>(false);
    auto* sub = reg.add("dyn-order", "Connectivity order of the induced leaf space of a connective dynamics", [file, categorical] {
      ConnDynamics cd = load_conndyn(*file, *categorical);
      Foliation z = dyn_foliation(cd);
      return Report{true, {{"order", dyn_order(cd).value}, {"leaves", leaves(z).size()}}};
    });
    input(sub, "conndyn", file, "Connective dynamics JSON");
    sub->add_flag("--categorical", *categorical, "Also require the arrow structure to be closed under composition");
  }
}

}  // namespace connective::cli
