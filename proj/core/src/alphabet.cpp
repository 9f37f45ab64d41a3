#include "rbax/alphabet.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "rbax/errors.hpp"

namespace rbax {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0])) && text[0] != '_') return false;
  for (char c : text) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (!is_identifier(n)) {
      throw DomainError("invalid generator name '" + n + "'");
    }
    auto [it, inserted] = index_.emplace(n, static_cast<std::uint32_t>(i));
    if (!inserted) {
      throw DomainError("duplicate generator name '" + n + "'");
    }
  }
}

Alphabet Alphabet::load(std::istream& in) {
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string token = line.substr(start, end - start + 1);
    if (token.empty() || token[0] == '#') continue;
    names.push_back(std::move(token));
  }
  return Alphabet(std::move(names));
}

Alphabet Alphabet::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open alphabet file '" + path + "'");
  return load(in);
}

Generator Alphabet::gen(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw DomainError("unknown generator '" + std::string(name) + "'");
  }
  return Generator{it->second};
}

std::optional<Generator> Alphabet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return Generator{it->second};
}

const std::string& Alphabet::name(Generator g) const {
  if (g.index >= names_.size()) {
    throw DomainError("generator index out of range");
  }
  return names_[g.index];
}

Letter::Letter(std::vector<Generator> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("empty letter");
}

Letter concat(const Letter& a, const Letter& b) {
  std::vector<Generator> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Letter(std::move(parts));
}

std::string render_letter(const Letter& l, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < l.parts().size(); ++i) {
    if (i > 0) out += '.';
    out += alphabet.name(l.parts()[i]);
  }
  return out;
}

}  // namespace rbax
