#pragma once

#include <string>

namespace superpv {

// Outcome of a structural check; failures are report content, not errors.
struct CheckReport {
  bool pass = true;
  std::string detail;  // first violated instance when failing

  static CheckReport ok() { return {true, ""}; }
  static CheckReport failed(std::string what) { return {false, std::move(what)}; }
};

}  // namespace superpv
