#include <memory>

#include "cli.hpp"
#include "connective/interpretation.hpp"

namespace connective::cli {

namespace {

using Path = std::shared_ptr<std::string>;
Path path() { return std::make_shared<std::string>(); }

FinCat load_category(const std::string& p) { return io::category_from_json(read_input(p).doc); }

Dynamics load_dynamics(const std::string& p) {
  Input in = read_input(p);
  return io::dynamics_from_json(in.doc, in.base_dir);
}

Dynamorphism load_morphism(const std::string& p, const Dynamics& src, const Dynamics& dst) {
  return io::dynamorphism_from_json(read_input(p).doc, src, dst);
}

CLI::Option* input(CLI::App* sub, const char* name, const Path& p, const char* what) {
  return sub->add_option(name, *p, what)->required();
}

json names(const Dynamics& a, const std::vector<int>& states) {
  json out = json::array();
  for (int s : states) out.push_back(a.state_names()[s]);
  return out;
}

// Commands taking a dynamorphism and its two ends.
struct Triple {
  Path morphism = path(), source = path(), target = path();
  void bind(CLI::App* sub, const char* src_what, const char* dst_what) const {
    input(sub, "dynamorphism", morphism, "Dynamorphism JSON");
    input(sub, "source", source, src_what);
    input(sub, "target", target, dst_what);
  }
};

}  // namespace

void register_dynamics_commands(Registry& reg) {
  {
    auto file = path();
    auto* sub = reg.add("cat-validate", "Check the category axioms of a composition table", [file] {
      bool v = cat_validate(load_category(*file));
      return Report{v, {{"valid", v}}};
    });
    input(sub, "category", file, "Category JSON");
  }
  {
    auto file = path();
    auto* sub = reg.add("dyn-validate", "Check the functor laws of a dynamics", [file] {
      Dynamics a = load_dynamics(*file);
      bool v = dynamics_validate(a);
      return Report{v, {{"valid", v}, {"proper", is_proper(a)}, {"deterministic", is_deterministic(a)}}};
    });
    input(sub, "dynamics", file, "Dynamics JSON");
  }
  {
    auto file = path();
    auto* sub = reg.add("zeta", "Essential dynamics: one state per object",
                        [file] { return Report{true, io::to_json(zeta(load_category(*file)))}; });
    input(sub, "category", file, "Category JSON");
  }
  {
    auto file = path();
    auto* sub = reg.add("xi", "Existential dynamics: the states of an object are the arrows into it",
                        [file] { return Report{true, io::to_json(xi(load_category(*file)))}; });
    input(sub, "category", file, "Category JSON");
  }
  {
    auto file = path();
    auto* sub = reg.add("preorder", "Reachability preorder on the states of a proper dynamics", [file] {
      Dynamics a = load_dynamics(*file);
      json pairs = json::array();
      for (auto [s, t] : state_preorder(a)) pairs.push_back({a.state_names()[s], a.state_names()[t]});
      return Report{true, {{"pairs", pairs}}};
    });
    input(sub, "dynamics", file, "Proper dynamics JSON");
  }
  {
    auto file = path();
    auto state = std::make_shared<std::string>();
    auto* sub = reg.add("orbit", "States reachable from a state", [file, state] {
      Dynamics a = load_dynamics(*file);
      int s = a.find_state(*state);
      if (s < 0) throw InputError("unknown state: " + *state);
      return Report{true, {{"orbit", names(a, orbit(a, s))}}};
    });
    input(sub, "dynamics", file, "Dynamics JSON");
    sub->add_option("--state", *state, "Starting state")->required();
  }
  {
    auto file = path();
    auto* sub = reg.add("tc", "Transition category of a proper dynamics",
                        [file] { return Report{true, io::to_json(tc(load_dynamics(*file)))}; });
    input(sub, "dynamics", file, "Proper dynamics JSON");
  }
  {
    auto file = path();
    auto* sub = reg.add("essentialize", "Essential dynamics of the transition category",
                        [file] { return Report{true, io::to_json(essentialize(load_dynamics(*file)))}; });
    input(sub, "dynamics", file, "Proper dynamics JSON");
  }
  {
    auto file = path();
    auto* sub = reg.add("verticalize", "Transition category of the existential dynamics",
                        [file] { return Report{true, io::to_json(verticalize(load_category(*file)))}; });
    input(sub, "category", file, "Category JSON");
  }
  {
    auto file = path();
    auto* sub = reg.add("av", "Dynamorphism from the essentialization back to the dynamics", [file] {
      Dynamics a = load_dynamics(*file);
      return Report{true, io::to_json(av(a), essentialize(a), a)};
    });
    input(sub, "dynamics", file, "Proper dynamics JSON");
  }
  {
    Triple t;
    auto* sub = reg.add("dynamorphism-check", "Validity and kind of a dynamorphism", [t] {
      Dynamics a = load_dynamics(*t.source), b = load_dynamics(*t.target);
      DynamorphismFlags f = dynamorphism_check(load_morphism(*t.morphism, a, b), a, b);
      return Report{f.valid,
                    {{"valid", f.valid},
                     {"complete", f.complete},
                     {"quasi_deterministic", f.quasi_deterministic},
                     {"deterministic", f.deterministic},
                     {"faithful", f.faithful}}};
    });
    t.bind(sub, "Source dynamics JSON", "Target dynamics JSON");
  }
  {
    Triple t;
    auto* sub = reg.add("solution-check", "Whether a dynamorphism from a time dynamics is a solution", [t] {
      Dynamics tau = load_dynamics(*t.source), a = load_dynamics(*t.target);
      SolutionFlags f = solution_check(load_morphism(*t.morphism, tau, a), tau, a);
      return Report{f.is_solution, {{"is_solution", f.is_solution}, {"complete", f.complete}}};
    });
    t.bind(sub, "Time dynamics JSON (deterministic, proper)", "Dynamics JSON");
  }
  {
    Triple t;
    auto* sub = reg.add("interp-in", "Incoming interpretation check for a map from the model to the observed", [t] {
      Dynamics alpha = load_dynamics(*t.source), beta = load_dynamics(*t.target);
      IncomingFlags f = interp_in_check(load_morphism(*t.morphism, alpha, beta), alpha, beta);
      return Report{f.entrante, {{"entrante", f.entrante}, {"via_commutation", f.via_commutation}}};
    });
    t.bind(sub, "Model dynamics JSON", "Observed dynamics JSON");
  }
  {
    Triple t;
    auto* sub = reg.add("interp-out", "Outgoing interpretation check for a map from the observed to the model", [t] {
      Dynamics beta = load_dynamics(*t.source), alpha = load_dynamics(*t.target);
      OutgoingFlags f = interp_out_check(load_morphism(*t.morphism, beta, alpha), beta, alpha);
      return Report{f.sortante, {{"sortante", f.sortante}, {"reguliere", f.reguliere}}};
    });
    t.bind(sub, "Observed dynamics JSON", "Model dynamics JSON");
  }
  {
    Triple t;
    auto outgoing = std::make_shared<bool>(false), incoming = std::make_shared<bool>(false);
    auto* sub = reg.add("interp-associate", "Converse family of an interpretation and whether it is mixed",
                        [t, outgoing, incoming] {
      if (!*outgoing && !*incoming) throw InputError("interp-associate needs --incoming or --outgoing");
      Dynamics src = load_dynamics(*t.source), dst = load_dynamics(*t.target);
      Dynamorphism m = load_morphism(*t.morphism, src, dst);
      Association a = *incoming ? associate_incoming(m, src, dst) : associate_outgoing(m, src, dst);
      return Report{true,
                    {{"associated", io::to_json(a.associated, dst, src)},
                     {"mixte", a.mixte},
                     {"reguliere", a.reguliere}}};
    });
    t.bind(sub, "Source dynamics JSON", "Target dynamics JSON");
    auto* i = sub->add_flag("--incoming", *incoming, "The map is an incoming interpretation");
    auto* o = sub->add_flag("--outgoing", *outgoing, "The map is an outgoing interpretation");
    i->excludes(o);
  }
  {
    Triple t;
    auto* sub = reg.add("interp-trans", "Interpretation across categories", [t] {
      Dynamics beta = load_dynamics(*t.source), alpha = load_dynamics(*t.target);
      AcrossFlags f = interp_trans_check(load_morphism(*t.morphism, beta, alpha), beta, alpha);
      return Report{f.interpretation, {{"interpretation", f.interpretation}, {"reguliere", f.reguliere}}};
    });
    t.bind(sub, "Observed dynamics JSON", "Model dynamics JSON");
  }
}

}  // namespace connective::cli
