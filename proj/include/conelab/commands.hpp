#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conelab/session.hpp"
#include "conelab/virtual.hpp"
#include "json.hpp"

namespace conelab {

/// Named inputs and switches shared by all commands; each command reads
/// the ones it needs and rejects missing ones with InputError.
struct CommandOptions {
  std::vector<std::string> ideals;
  std::vector<std::string> points;
  std::vector<std::string> complexes;
  std::vector<std::string> resolutions;
  std::vector<std::string> maps;
  std::vector<std::string> sections;
  std::optional<std::string> cone;
  std::optional<std::string> chow;
  std::optional<std::string> chern;
  std::optional<std::size_t> rank;
  std::optional<std::size_t> order;
  bool assert_result = false;
};

struct CommandResult {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> lines;

  bool all_checks_pass() const;
};

const std::vector<std::string>& command_names();

/// Throws InputError for unknown commands or missing inputs; mathematical
/// and budget errors propagate from the library.
CommandResult run_command(const Session& session, const std::string& command, const CommandOptions& options);

GlobalResolution build_resolution(const Session& session, const std::string& name);

std::string render_text(const CommandResult& r, const std::optional<double>& total_ms);
std::string render_json(const CommandResult& r, const std::optional<double>& total_ms);

}  // namespace conelab
