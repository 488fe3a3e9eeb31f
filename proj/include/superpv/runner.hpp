#pragma once

#include "superpv/config.hpp"

namespace superpv {

struct TaskRecord {
  int index = 0;
  std::string task;
  std::string inputsHash;
  bool pass = false;
  std::string witness;  // serialized JSON object
};

struct RunOptions {
  bool parallel = false;
  bool checksOnly = false;   // `verify`: run validation checks only
  int solveOrderOverride = 0;  // `solve`: force this order on solve tasks
};

struct RunResult {
  std::vector<TaskRecord> records;
  int exitCode = 0;  // 0 pass, 1 verdict failure, 2 input error
};

RunResult runConfig(const ProblemConfig& cfg, const RunOptions& opts);

// Newline-delimited records with deterministic field order, one JSON object
// per line: {"inputs_hash":..., "task":..., "verdict":..., "witness":...}.
std::string emitReport(const std::vector<TaskRecord>& records);

uint64_t fnv1a(const std::string& s);
std::string hashHex(const std::string& s);

}  // namespace superpv
