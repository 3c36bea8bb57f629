#include "qmcshake/cli/registry.hpp"

#include <exception>

#include "qmcshake/polynomial_model.hpp"

namespace qmcshake::cli {

void IntegrandRegistry::add(std::string id, Factory make) {
  entries_[std::move(id)] = std::move(make);
}

std::vector<std::string> IntegrandRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, _] : entries_) out.push_back(id);
  out.push_back(std::string(kPolyFilePrefix) + "<path>");
  return out;
}

bool IntegrandRegistry::contains(std::string_view id) const {
  return id.starts_with(kPolyFilePrefix) || entries_.find(id) != entries_.end();
}

Integrand IntegrandRegistry::make(std::string_view id, std::size_t dim) const {
  if (id.starts_with(kPolyFilePrefix)) {
    const std::string path(id.substr(kPolyFilePrefix.size()));
    try {
      return PolynomialModel::load(path).integrand(std::string(id));
    } catch (const std::exception& e) {
      throw ConfigError("cannot load model '" + path + "': " + e.what());
    }
  }
  const auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw ConfigError("unknown integrand '" + std::string(id) + "'");
  }
  return it->second(dim);
}

const IntegrandRegistry& IntegrandRegistry::builtin() {
  static const IntegrandRegistry registry = [] {
    IntegrandRegistry r;
    r.add("f1-nonsmooth", [](std::size_t) { return f1_nonsmooth(); });
    r.add("f2-smooth", [](std::size_t) { return f2_smooth(); });
    r.add("linear-d", [](std::size_t d) {
      if (d == 0) throw ConfigError("linear-d needs --dim >= 1");
      return linear_sum(d);
    });
    r.add("product-x1x2", [](std::size_t) { return product_x1x2(); });
    return r;
  }();
  return registry;
}

}  // namespace qmcshake::cli
