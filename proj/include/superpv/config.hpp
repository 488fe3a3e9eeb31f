#pragma once

#include <optional>

#include "superpv/dmodule.hpp"

namespace superpv {

// One task line: name plus scalar parameters; wronskian carries an element
// list split even-first by '|'.
struct TaskSpec {
  std::string name;
  std::map<std::string, std::string> params;
  std::vector<std::string> elements;
  int evenCount = 0;

  int intParam(const std::string& key, int fallback) const;
  std::string strParam(const std::string& key, const std::string& fallback) const;
};

// A problem declaration: ring, Lie spec, action table, optional module and a
// task list. Parsed from the single structured-text config format; serialize
// regenerates canonical text (parse . serialize is the identity).
struct ProblemConfig {
  RingPtr ring;
  LiePtr lie;
  std::shared_ptr<DAction> action;
  std::optional<DModule> module;
  std::vector<TaskSpec> tasks;

  std::string serialize() const;
};

ProblemConfig parseConfig(const std::string& text);
ProblemConfig parseConfigFile(const std::string& path);

}  // namespace superpv
