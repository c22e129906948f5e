#include "fixtures.hpp"

#include "connective/io.hpp"

namespace fx {

namespace {

const char* kArrow2 = R"({"objects": ["S", "T"],
  "arrows": [{"id": "id_S", "dom": "S", "cod": "S"}, {"id": "id_T", "dom": "T", "cod": "T"},
             {"id": "f", "dom": "S", "cod": "T"}],
  "identities": {"S": "id_S", "T": "id_T"}})";

Dynamics over_arrow2(const std::string& states, const std::string& trans) {
  return dynamics(std::string(R"({"category": )") + kArrow2 + R"(, "states": )" + states + R"(, "transitions": {"f": )" +
                  trans + "}}");
}

Dynamics model_single_source() { return over_arrow2(R"({"S": ["x"], "T": ["y", "y'"]})", R"({"x": ["y", "y'"]})"); }

Dynamics model_two_sources() {
  return over_arrow2(R"({"S": ["x", "x'"], "T": ["y", "y'", "y''"]})", R"({"x": ["y", "y'"], "x'": ["y'"]})");
}

}  // namespace

Space borromean() { return Space(3, generate(3, Family{subset_of({0, 1, 2})}, true)); }

Space three_nonintegral() { return Space(3, Family{kEmpty, subset_of({0}), subset_of({1}), subset_of({0, 1, 2})}); }

Space path3() {
  return Space(3, Family{kEmpty, subset_of({0}), subset_of({1}), subset_of({2}), subset_of({0, 1}), subset_of({1, 2}),
                         subset_of({0, 1, 2})});
}

Space chain_space(int n) {
  Family fam{kEmpty};
  for (int k = 1; k <= n; ++k) fam.insert(full_set(k));
  return Space(n, fam);
}

Foliation three_leaves() {
  return Foliation(Space(6, Family{kEmpty, subset_of({0, 1}), subset_of({2, 3}), subset_of({4, 5})}),
                   Space(6, Family{kEmpty, subset_of({0, 2}), subset_of({3, 5})}));
}

FinCat arrow2() { return io::category_from_json(io::json::parse(kArrow2)); }

Dynamics dynamics(const std::string& json_text) { return io::dynamics_from_json(io::json::parse(json_text)); }

Dynamorphism morphism(const std::string& json_text, const Dynamics& src, const Dynamics& dst) {
  return io::dynamorphism_from_json(io::json::parse(json_text), src, dst);
}

Dynamics observed() { return over_arrow2(R"({"S": ["p"], "T": ["q"]})", R"({"p": ["q"]})"); }

Interpretation mixed_irregular() {
  Dynamics a = model_single_source();
  return {a, morphism(R"({"delta": {"S": {"x": ["p"]}, "T": {"y": ["q"], "y'": []}}})", a, observed())};
}

Interpretation incoming_not_mixed() {
  Dynamics a = over_arrow2(R"({"S": ["x"], "T": ["y", "y'", "y''"]})", R"({"x": ["y'", "y''"]})");
  return {a, morphism(R"({"delta": {"S": {"x": ["p"]}, "T": {"y": ["q"], "y'": ["q"], "y''": []}}})", a, observed())};
}

Interpretation outgoing_regular() {
  Dynamics a = model_two_sources();
  return {a, morphism(R"({"delta": {"S": {"p": ["x"]}, "T": {"q": ["y", "y'"]}}})", observed(), a)};
}

Interpretation outgoing_irregular() {
  Dynamics a = model_two_sources();
  return {a, morphism(R"({"delta": {"S": {"p": ["x"]}, "T": {"q": ["y'"]}}})", observed(), a)};
}

Interpretation outgoing_rejected() {
  Dynamics a = model_two_sources();
  return {a, morphism(R"({"delta": {"S": {"p": ["x"]}, "T": {"q": ["y'", "y''"]}}})", observed(), a)};
}

IncomingCase not_surjective() {
  Dynamics a = over_arrow2(R"({"S": ["s0"], "T": ["t0"]})", R"({"s0": ["t0"]})");
  Dynamics b = over_arrow2(R"({"S": ["s0", "s1"], "T": ["t0", "t1"]})", R"({"s0": ["t0"], "s1": ["t0"]})");
  return {a, b, morphism(R"({"delta": {"S": {"s0": ["s0"]}, "T": {"t0": ["t0"]}}})", a, b)};
}

IncomingCase not_explaining() {
  Dynamics b = over_arrow2(R"({"S": ["s0"], "T": ["t0", "t1"]})", R"({"s0": ["t0", "t1"]})");
  Dynamics a = over_arrow2(R"({"S": ["s0"], "T": ["t0", "t1"]})", R"({"s0": ["t0"]})");
  return {a, b, morphism(R"({"delta": {"S": {"s0": ["s0"]}, "T": {"t0": ["t0"], "t1": ["t1"]}}})", a, b)};
}

IncomingCase fold_counterexample() {
  Dynamics a = over_arrow2(R"({"S": ["x", "x'"], "T": ["y"]})", R"({"x": ["y"]})");
  Dynamics b = observed();
  return {a, b, morphism(R"({"delta": {"S": {"x": ["p"], "x'": ["p"]}, "T": {"y": ["q"]}}})", a, b)};
}

ConnDynamics rotation() {
  FinCat chain = chain_category(5);
  std::vector<std::string> names;
  std::vector<std::vector<int>> states;
  for (int k = 0; k < 6; ++k) {
    names.push_back("s" + std::to_string(k));
    states.push_back({k});
  }
  std::vector<Transition> trans(static_cast<std::size_t>(chain.arrow_count()), Transition::identity(1));
  Dynamics dyn(chain, names, states, trans);

  Family steps;
  for (int k = 0; k < 5; ++k)
    steps.insert(singleton(chain.identity(k)) |
                 singleton(chain.find_arrow(std::to_string(k) + "->" + std::to_string(k + 1))));
  Family arrows = generate(chain.arrow_count(), steps, false);

  std::vector<std::pair<int, int>> cycle;
  for (int k = 0; k < 6; ++k) cycle.emplace_back(k, (k + 1) % 6);
  return {dyn, arrows, graph_to_space(6, cycle).connected()};
}

ConnDynamics linked_leaves() {
  FinCat c3 = cyclic_group(3);
  std::vector<std::string> names{"a0", "a1", "a2", "b0", "b1", "b2"};
  std::vector<Transition> trans;
  // Arrow k is rotation by k.
  for (int k = 0; k < 3; ++k) {
    std::vector<Subset> rel;
    for (int i = 0; i < 6; ++i) rel.push_back(singleton((i / 3) * 3 + (i % 3 + k) % 3));
    trans.emplace_back(6, 6, rel);
  }
  Dynamics dyn(c3, names, {{0, 1, 2, 3, 4, 5}}, trans);
  Family all_arrow_sets;
  for (Subset s = 0; s < 8; ++s) all_arrow_sets.insert(s);
  Family states = generate(6, Family{subset_of({0, 1, 2}), subset_of({3, 4, 5}), full_set(6)}, true);
  return {dyn, all_arrow_sets, states};
}

}  // namespace fx
