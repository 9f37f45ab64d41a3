#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rbax {

// Index of a generator within its Alphabet. Ordering follows declaration
// order, which is what every canonical ordering in the library keys on.
struct Generator {
  std::uint32_t index = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
  friend std::strong_ordering operator<=>(const Generator&, const Generator&) = default;
};

class Alphabet {
 public:
  Alphabet() = default;
  // Validates identifier syntax and uniqueness; keeps declaration order.
  explicit Alphabet(std::vector<std::string> names);

  // One identifier per line; blank lines and '#' comment lines are skipped.
  static Alphabet load(std::istream& in);
  static Alphabet load_file(const std::string& path);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  Generator gen(std::string_view name) const;  // throws DomainError if unknown
  std::optional<Generator> find(std::string_view name) const;
  const std::string& name(Generator g) const;
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::uint32_t, std::less<>> index_;
};

bool is_identifier(std::string_view text);

// Basis letter of the coefficient algebra. A single generator under the
// zero-product and finite-table bases; a nonempty generator sequence
// (a monomial in the free monoid) under the tensor base. Rendered with
// '.' between the parts: "x.y.x".
class Letter {
 public:
  explicit Letter(Generator g) : parts_{g} {}
  explicit Letter(std::vector<Generator> parts);  // throws DomainError if empty

  const std::vector<Generator>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool simple() const { return parts_.size() == 1; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter&, const Letter&) = default;

 private:
  std::vector<Generator> parts_;
};

Letter concat(const Letter& a, const Letter& b);
std::string render_letter(const Letter& l, const Alphabet& alphabet);

}  // namespace rbax
