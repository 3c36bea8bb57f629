#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmcshake/integrand.hpp"

namespace qmcshake::cli {

/// Bad user input: unknown ids, malformed or inconsistent options.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Named test integrands. `linear-d` takes its dimension from the request;
/// `poly-file:<path>` loads a polynomial model file.
class IntegrandRegistry {
 public:
  using Factory = std::function<Integrand(std::size_t dim)>;

  static const IntegrandRegistry& builtin();

  void add(std::string id, Factory make);
  std::vector<std::string> ids() const;
  bool contains(std::string_view id) const;

  /// Throws ConfigError for unknown ids or unreadable model files.
  Integrand make(std::string_view id, std::size_t dim = 4) const;

 private:
  std::map<std::string, Factory, std::less<>> entries_;
};

inline constexpr std::string_view kPolyFilePrefix = "poly-file:";

}  // namespace qmcshake::cli
