#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

namespace connective::cli {

CLI::App* Registry::add(const std::string& name, const std::string& description, Action action) {
  CLI::App* sub = app_.add_subcommand(name, description);
  commands_.emplace_back(sub, std::move(action));
  return sub;
}

const Action* Registry::selected() const {
  for (const auto& [sub, action] : commands_)
    if (sub->parsed()) return &action;
  return nullptr;
}

Input read_input(const std::string& path) {
  std::string text;
  std::filesystem::path base;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    base = std::filesystem::current_path();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
    base = std::filesystem::path(path).parent_path();
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError((path == "-" ? std::string("stdin") : path) + ": " + e.what());
  }
  return {io::unwrap_report(doc), base};
}

Subset subset_arg(const std::vector<int>& points, int n) { return io::subset_from_json(json(points), n); }

}  // namespace connective::cli
