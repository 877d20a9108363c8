#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace fraclab::cli {

enum ExitCode : int { kOk = 0, kIo = 1, kUsage = 2, kValidation = 3 };

/// Run the fraclab command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default run config for a solve/tune model; throws std::invalid_argument for an unknown model.
nlohmann::ordered_json default_config(const std::string& model);

/// "defaults", a JSON file path, or inline JSON, merged over default_config(model).
nlohmann::ordered_json load_config(const std::string& source, const std::string& model);

}  // namespace fraclab::cli
