#include <iostream>

#include "cli.hpp"

namespace {

int emit(bool ok, connective::cli::json body, const char* key) {
  connective::cli::json out = {{"ok", ok}, {key, std::move(body)}};
  std::cout << out.dump() << '\n';
  return ok ? 0 : 1;
}

int fail(int code, const std::string& message) {
  std::cerr << "connective: " << message << '\n';
  emit(false, message, "error");
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace connective;
  CLI::App app{"Exact computations on finite connectivity spaces, foliations, representations and dynamics"};
  app.require_subcommand(1);
  cli::Registry reg(app);
  cli::register_space_commands(reg);
  cli::register_representation_commands(reg);
  cli::register_dynamics_commands(reg);
  cli::register_connective_commands(reg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cli::Report r = (*reg.selected())();
    return emit(r.ok, std::move(r.result), "result");
  } catch (const InputError& e) {
    return fail(2, e.what());
  } catch (const CapacityError& e) {
    return fail(2, e.what());
  } catch (const cli::json::exception& e) {
    return fail(2, e.what());
  } catch (const DomainError& e) {
    return fail(1, e.what());
  } catch (const std::logic_error& e) {
    return fail(1, e.what());
  } catch (const std::exception& e) {
    return fail(2, e.what());
  }
}
