#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "connective/io.hpp"

namespace connective::cli {

using io::json;

struct Report {
  bool ok = true;
  json result;
};

using Action = std::function<Report()>;

// Subcommands record their action here; main runs the one that was parsed.
class Registry {
 public:
  explicit Registry(CLI::App& app) : app_(app) {}
  CLI::App* add(const std::string& name, const std::string& description, Action action);
  const Action* selected() const;

 private:
  CLI::App& app_;
  std::vector<std::pair<CLI::App*, Action>> commands_;
};

// An input document: a path or "-" for standard input. Reports emitted by
// this tool are unwrapped, so commands can be piped together.
struct Input {
  json doc;
  std::filesystem::path base_dir;
};
Input read_input(const std::string& path);

Subset subset_arg(const std::vector<int>& points, int n);

void register_space_commands(Registry& reg);
void register_representation_commands(Registry& reg);
void register_dynamics_commands(Registry& reg);
void register_connective_commands(Registry& reg);

}  // namespace connective::cli
