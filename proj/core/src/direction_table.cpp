#include "qmcshake/direction_table.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qmcshake {

namespace detail {
extern const char* const kShippedDirectionTable;
}

PrimitivePolynomial::PrimitivePolynomial(unsigned degree,
                                         std::vector<std::uint8_t> interior)
    : degree_(degree), interior_(std::move(interior)) {
  if (degree_ < 1) {
    throw std::invalid_argument("PrimitivePolynomial: degree must be >= 1");
  }
  if (interior_.size() != degree_ - 1) {
    throw std::invalid_argument(
        "PrimitivePolynomial: expected degree-1 interior coefficients");
  }
  for (auto c : interior_) {
    if (c > 1) throw std::invalid_argument("PrimitivePolynomial: coefficient not 0/1");
  }
}

PrimitivePolynomial PrimitivePolynomial::from_packed(unsigned degree,
                                                     std::uint32_t packed) {
  if (degree < 1) {
    throw std::invalid_argument("PrimitivePolynomial: degree must be >= 1");
  }
  if (degree <= 32 && (packed >> (degree - 1)) != 0) {
    throw std::invalid_argument("PrimitivePolynomial: packed coefficients exceed degree");
  }
  std::vector<std::uint8_t> interior(degree - 1);
  for (unsigned k = 1; k < degree; ++k) {
    interior[k - 1] = (packed >> (degree - 1 - k)) & 1u;
  }
  return PrimitivePolynomial(degree, std::move(interior));
}

std::uint64_t PrimitivePolynomial::mask() const {
  std::uint64_t mask = (std::uint64_t{1} << degree_) | 1u;
  for (unsigned k = 1; k < degree_; ++k) {
    if (coefficient(k)) mask |= std::uint64_t{1} << (degree_ - k);
  }
  return mask;
}

bool is_primitive(const PrimitivePolynomial& poly) {
  const unsigned s = poly.degree();
  if (s > 24) throw std::invalid_argument("is_primitive: degree too large");
  const std::uint64_t p = poly.mask();
  const std::uint64_t top = std::uint64_t{1} << s;
  const std::uint64_t order = top - 1;
  // Walk the powers of x modulo P; x must first return to 1 at 2^s - 1.
  std::uint64_t r = 1;
  for (std::uint64_t e = 1; e <= order; ++e) {
    r <<= 1;
    if (r & top) r ^= p;
    if (r == 1) return e == order;
  }
  return false;
}

std::vector<std::uint64_t> extend_direction_numbers(
    const PrimitivePolynomial& poly, std::span<const std::uint64_t> seed_m,
    std::size_t count) {
  const unsigned s = poly.degree();
  if (seed_m.size() != s) {
    throw std::invalid_argument("extend_direction_numbers: expected " +
                                std::to_string(s) + " seed values, got " +
                                std::to_string(seed_m.size()));
  }
  if (count > 63) {
    throw std::invalid_argument("extend_direction_numbers: count exceeds 63");
  }
  for (std::size_t k = 1; k <= s; ++k) {
    const auto mk = seed_m[k - 1];
    if (mk % 2 == 0) {
      throw std::invalid_argument("extend_direction_numbers: seed m_" +
                                  std::to_string(k) + " is even");
    }
    if (k < 64 && mk >= (std::uint64_t{1} << k)) {
      throw std::invalid_argument("extend_direction_numbers: seed m_" +
                                  std::to_string(k) + " is not below 2^" +
                                  std::to_string(k));
    }
  }

  std::vector<std::uint64_t> m(seed_m.begin(), seed_m.end());
  m.resize(std::max<std::size_t>(count, s));
  for (std::size_t k = s + 1; k <= count; ++k) {
    std::uint64_t next = (m[k - s - 1] << s) ^ m[k - s - 1];
    for (unsigned i = 1; i < s; ++i) {
      if (poly.coefficient(i)) next ^= m[k - i - 1] << i;
    }
    m[k - 1] = next;
  }
  m.resize(count);
  return m;
}

DirectionTable::DirectionTable(std::size_t dim, unsigned bits)
    : dim_(dim), bits_(bits), v_(dim * bits), degrees_(dim) {
  if (bits_ < 1 || bits_ > 32) {
    throw std::invalid_argument("DirectionTable: bits must be in [1, 32]");
  }
}

void DirectionTable::set_dimension(std::size_t j,
                                   std::span<const std::uint64_t> m,
                                   unsigned degree) {
  for (unsigned k = 1; k <= bits_; ++k) {
    v_[j * bits_ + (k - 1)] =
        static_cast<std::uint32_t>(m[k - 1] << (bits_ - k));
  }
  degrees_[j] = degree;
}

DirectionTable::DirectionTable(std::span<const DirectionEntry> entries,
                               unsigned bits)
    : DirectionTable(entries.size() + 1, bits) {
  std::vector<std::uint64_t> ones(bits_, 1);
  set_dimension(0, ones, 0);
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const auto& e = entries[j];
    if (e.poly.degree() > bits_) {
      throw std::invalid_argument("DirectionTable: polynomial degree exceeds bits");
    }
    const auto m = extend_direction_numbers(e.poly, e.seed_m, bits_);
    set_dimension(j + 1, m, e.poly.degree());
  }
}

DirectionTable DirectionTable::single(const DirectionEntry& entry,
                                      unsigned bits) {
  DirectionTable table(1, bits);
  if (entry.poly.degree() > bits) {
    throw std::invalid_argument("DirectionTable: polynomial degree exceeds bits");
  }
  const auto m = extend_direction_numbers(entry.poly, entry.seed_m, bits);
  table.set_dimension(0, m, entry.poly.degree());
  return table;
}

DirectionTable DirectionTable::parse(std::string_view text,
                                     std::size_t max_dimension, unsigned bits) {
  std::vector<DirectionEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] < '0' || line[first] > '9') {
      continue;
    }
    if (max_dimension != 0 && entries.size() + 1 >= max_dimension) break;

    std::istringstream fields(line);
    std::uint64_t d = 0, s = 0, a = 0;
    if (!(fields >> d >> s >> a)) {
      throw std::invalid_argument("DirectionTable: malformed line " +
                                  std::to_string(line_no));
    }
    if (d != entries.size() + 2) {
      throw std::invalid_argument("DirectionTable: line " +
                                  std::to_string(line_no) +
                                  " is out of dimension order");
    }
    if (s < 1 || s > 32) {
      throw std::invalid_argument("DirectionTable: bad degree on line " +
                                  std::to_string(line_no));
    }
    std::vector<std::uint64_t> seeds(s);
    for (auto& mk : seeds) {
      if (!(fields >> mk)) {
        throw std::invalid_argument("DirectionTable: missing m_k on line " +
                                    std::to_string(line_no));
      }
    }
    entries.push_back(
        {PrimitivePolynomial::from_packed(static_cast<unsigned>(s),
                                          static_cast<std::uint32_t>(a)),
         std::move(seeds)});
  }
  return DirectionTable(entries, bits);
}

DirectionTable DirectionTable::load(const std::filesystem::path& path,
                                    std::size_t max_dimension, unsigned bits) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("DirectionTable: cannot open " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), max_dimension, bits);
}

std::string_view DirectionTable::shipped_text() {
  return detail::kShippedDirectionTable;
}

const DirectionTable& DirectionTable::shipped() {
  static const DirectionTable table = parse(shipped_text());
  return table;
}

std::vector<std::uint64_t> DirectionTable::m(std::size_t j) const {
  std::vector<std::uint64_t> out(bits_);
  for (unsigned k = 1; k <= bits_; ++k) {
    out[k - 1] = v(j, k) >> (bits_ - k);
  }
  return out;
}

}  // namespace qmcshake
