#include <map>
#include <memory>

#include "cli.hpp"
#include "connective/representation.hpp"

namespace connective::cli {

namespace {

using Path = std::shared_ptr<std::string>;
Path path() { return std::make_shared<std::string>(); }

Representation load_rep(const std::string& p) { return io::representation_from_json(read_input(p).doc); }
Foliation load_foliation(const std::string& p) { return io::foliation_from_json(read_input(p).doc); }

CLI::Option* input(CLI::App* sub, const char* name, const Path& p, const char* what) {
  return sub->add_option(name, *p, what)->required();
}

const std::map<std::string, StructureSelector> kSelectors = {
    {"desintegrated", StructureSelector::Desintegrated},
    {"own", StructureSelector::Own},
    {"grossier", StructureSelector::Grossier},
};

}  // namespace

void register_representation_commands(Registry& reg) {
  {
    auto file = path();
    auto connected = std::make_shared<bool>(false);
    auto* sub = reg.add("rep-validate", "Whether a representation preserves connectedness", [file, connected] {
      bool v = rep_validate(load_rep(*file), *connected);
      return Report{v, {{"valid", v}}};
    });
    input(sub, "representation", file, "Representation JSON");
    sub->add_flag("--connected-images", *connected, "Also require every single image to be connected");
  }
  {
    auto file = path();
    auto* sub = reg.add("rep-classify", "Validity, clarity and distinctness of a representation", [file] {
      Representation rho = load_rep(*file);
      bool v = rep_validate(rho);
      return Report{v, {{"valid", v}, {"clear", is_clear(rho)}, {"distinct", is_distinct(rho)}}};
    });
    input(sub, "representation", file, "Representation JSON");
  }
  {
    auto first = path(), second = path();
    auto* sub = reg.add("rep-compose", "Kleisli composite: apply the first representation, then the second",
                        [first, second] { return Report{true, io::to_json(compose(load_rep(*second), load_rep(*first)))}; });
    input(sub, "first", first, "Representation applied first");
    input(sub, "second", second, "Representation applied second; its object is the ambient of the first");
  }
  {
    auto file = path();
    auto* sub = reg.add("double", "Canonical clear and distinct doubling of a space", [file] {
      return Report{true, io::to_json(canonical_double(io::space_from_json(read_input(*file).doc)))};
    });
    input(sub, "space", file, "Space JSON");
  }
  {
    auto file = path();
    auto other = std::make_shared<std::string>("own"), conn = std::make_shared<std::string>("own");
    auto* sub = reg.add("phi", "Foliation of the ambient whose leaves come from the images", [file, other, conn] {
      return Report{true, io::to_json(phi(load_rep(*file), kSelectors.at(*other), kSelectors.at(*conn)))};
    });
    input(sub, "representation", file, "Representation JSON");
    sub->add_option("--other", *other, "Selector for points whose singleton is not connected")
        ->check(CLI::IsMember({"desintegrated", "own", "grossier"}))
        ->capture_default_str();
    sub->add_option("--connected", *conn, "Selector for points whose singleton is connected")
        ->check(CLI::IsMember({"desintegrated", "own", "grossier"}))
        ->capture_default_str();
  }
  {
    auto file = path();
    auto* sub = reg.add("rdown", "Representation of the leaves of a foliation",
                        [file] { return Report{true, io::to_json(r_down(load_foliation(*file)))}; });
    input(sub, "foliation", file, "Foliation JSON");
  }
  {
    auto file = path();
    auto* sub = reg.add("rup", "Leaf representation into the join of both structures",
                        [file] { return Report{true, io::to_json(r_up(load_foliation(*file)))}; });
    input(sub, "foliation", file, "Foliation JSON");
  }
  {
    auto fol = path(), rep = path();
    auto* sub = reg.add("adjunction-verify", "Count both hom-sets of the adjunction and check the bijection", [fol, rep] {
      AdjunctionReport r = adjunction_verify(load_foliation(*fol), load_rep(*rep));
      return Report{r.bijection, {{"hom_left", r.hom_left}, {"hom_right", r.hom_right}, {"bijection", r.bijection}}};
    });
    input(sub, "foliation", fol, "Regular foliation JSON");
    input(sub, "representation", rep, "Clear, distinct representation with integral object");
  }
  {
    auto file = path();
    auto* sub = reg.add("prop18", "Isomorphism between a clear distinct representation and its leaf form", [file] {
      Representation rho = load_rep(*file);
      LeafFormIso iso = leaf_form_iso(rho);
      bool verified = rep_morphism_check(iso.forward, rho, iso.leaf_form) &&
                      rep_morphism_check(iso.backward, iso.leaf_form, rho) &&
                      compose(iso.backward, iso.forward) == identity_morphism(rho) &&
                      compose(iso.forward, iso.backward) == identity_morphism(iso.leaf_form);
      return Report{verified,
                    {{"leaf_form", io::to_json(iso.leaf_form)},
                     {"forward", io::to_json(iso.forward)},
                     {"backward", io::to_json(iso.backward)},
                     {"isomorphism", verified}}};
    });
    sub->alias("leaf-form-iso");
    input(sub, "representation", file, "Clear, distinct representation JSON");
  }
}

}  // namespace connective::cli
