#ifndef GWA_CONFIG_HPP
#define GWA_CONFIG_HPP

#include <string>
#include <string_view>

#include "gwa/algebra.hpp"

namespace gwa {

/// Parsed algebra description plus optional metadata.
struct GwaConfig {
    GwaSpec spec;
    std::string name;
    std::string description;
};

/// Line-oriented `key = value` format with `#` comments. Keys: `n`, `b`
/// (comma-separated number literals), `t<k> = roots(<literal>, ...)`, and the
/// optional `name` / `description`. Syntax errors carry line and column;
/// semantic errors name the violated invariant.
GwaConfig parse_config(std::string_view text);

GwaConfig load_config_file(const std::string& path);

}  // namespace gwa

#endif
