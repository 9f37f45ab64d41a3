#include "rbax/dendriform.hpp"

namespace rbax {

std::string to_string(DendKind k) {
  switch (k) {
    case DendKind::prec: return "prec";
    case DendKind::succ: return "succ";
    case DendKind::dot: return "dot";
    case DendKind::prec_prime: return "prec_prime";
    case DendKind::star: return "star";
  }
  return "?";
}

DendKind parse_dend_kind(std::string_view name) {
  if (name == "prec") return DendKind::prec;
  if (name == "succ") return DendKind::succ;
  if (name == "dot") return DendKind::dot;
  if (name == "prec_prime") return DendKind::prec_prime;
  if (name == "star") return DendKind::star;
  throw DomainError("unknown dendriform operation '" + std::string(name) + "'");
}

}  // namespace rbax
