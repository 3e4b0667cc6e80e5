#pragma once

#include <string>
#include <vector>

#include "fcat_cli/cli.hpp"
#include "fcat_cli/io.hpp"

namespace fcat::cli {

struct Assertion {
  std::string name;
  std::string anchor;  // the statement the assertion replays
  bool passed = false;
  Json detail;
};

struct FixtureReport {
  std::string fixture;
  std::vector<Assertion> assertions;

  bool passed() const;
  Json to_json() const;
};

const std::vector<std::string>& fixture_names();

/// Throws UsageError("UnknownFixture") for names not in fixture_names().
FixtureReport run_fixture(const std::string& name, const Config& config, Workspace& ws);

}  // namespace fcat::cli
