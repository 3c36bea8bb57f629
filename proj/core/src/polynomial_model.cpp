#include "qmcshake/polynomial_model.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace qmcshake {

PolynomialModel::PolynomialModel(std::size_t dimension, unsigned degree,
                                 std::vector<Monomial> terms)
    : dim_(dimension), degree_(degree), terms_(std::move(terms)) {
  if (dim_ == 0) throw std::invalid_argument("PolynomialModel: dimension must be >= 1");
  for (const auto& t : terms_) {
    if (t.exponents.size() != dim_) {
      throw std::invalid_argument("PolynomialModel: monomial has wrong exponent count");
    }
    unsigned total = 0;
    for (auto e : t.exponents) total += e;
    if (total > degree_) {
      throw std::invalid_argument("PolynomialModel: monomial exceeds declared degree");
    }
  }
}

PolynomialModel PolynomialModel::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::size_t d = 0;
  unsigned degree = 0;
  bool have_header = false;
  std::vector<Monomial> terms;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      if (!(fields >> d >> degree) || d == 0) {
        throw std::invalid_argument("PolynomialModel: bad header on line " +
                                    std::to_string(line_no));
      }
      have_header = true;
      continue;
    }
    Monomial term;
    term.exponents.resize(d);
    if (!(fields >> term.coefficient)) {
      throw std::invalid_argument("PolynomialModel: bad coefficient on line " +
                                  std::to_string(line_no));
    }
    for (auto& e : term.exponents) {
      if (!(fields >> e)) {
        throw std::invalid_argument("PolynomialModel: expected " +
                                    std::to_string(d) + " exponents on line " +
                                    std::to_string(line_no));
      }
    }
    std::string extra;
    if (fields >> extra) {
      throw std::invalid_argument("PolynomialModel: trailing field on line " +
                                  std::to_string(line_no));
    }
    terms.push_back(std::move(term));
  }
  if (!have_header) throw std::invalid_argument("PolynomialModel: missing header");
  return PolynomialModel(d, degree, std::move(terms));
}

PolynomialModel PolynomialModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("PolynomialModel: cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string PolynomialModel::to_text() const {
  std::ostringstream os;
  os << dim_ << ' ' << degree_ << '\n' << std::setprecision(17);
  for (const auto& t : terms_) {
    os << t.coefficient;
    for (auto e : t.exponents) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

double PolynomialModel::operator()(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coefficient;
    for (std::size_t i = 0; i < dim_; ++i) {
      for (unsigned e = 0; e < t.exponents[i]; ++e) v *= x[i];
    }
    sum += v;
  }
  return sum;
}

double PolynomialModel::mean() const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coefficient;
    for (auto e : t.exponents) v /= static_cast<double>(e + 1);
    sum += v;
  }
  return sum;
}

Integrand PolynomialModel::integrand(std::string name) const {
  auto model = std::make_shared<const PolynomialModel>(*this);
  Integrand f;
  f.name = std::move(name);
  f.dimension = dim_;
  f.smoothness = Smoothness::Smooth;
  f.eval = [model](std::span<const double> x) { return (*model)(x); };
  f.referent = model->mean();
  f.referent_note = "exact monomial integral";
  return f;
}

}  // namespace qmcshake
