#include "smallcover/z2.hpp"

#include <algorithm>

namespace smallcover {

std::string Z2Vec::to_string() const {
  if (bits_ == 0) return "1";
  std::string s;
  for (int i = 0; i < 3; ++i)
    if ((bits_ >> i) & 1u) s += "e" + std::to_string(i + 1);
  return s;
}

SubgroupZ2::SubgroupZ2() : members_(1) {}

SubgroupZ2::SubgroupZ2(const std::vector<Z2Vec>& generators)
    : members_(1), generators_(generators) {
  // close under XOR
  bool changed = true;
  while (changed) {
    changed = false;
    for (int m = 0; m < 8; ++m) {
      if (!((members_ >> m) & 1u)) continue;
      for (Z2Vec g : generators_) {
        int p = m ^ g.bits();
        if (!((members_ >> p) & 1u)) {
          members_ = static_cast<uint8_t>(members_ | (1u << p));
          changed = true;
        }
      }
    }
  }
}

int SubgroupZ2::order() const {
  int n = 0;
  for (int m = 0; m < 8; ++m) n += (members_ >> m) & 1;
  return n;
}

std::vector<Z2Vec> SubgroupZ2::elements() const {
  std::vector<Z2Vec> out;
  for (int m = 0; m < 8; ++m)
    if ((members_ >> m) & 1u) out.push_back(Z2Vec(static_cast<unsigned>(m)));
  return out;
}

bool independent_triple(Z2Vec a, Z2Vec b, Z2Vec c) {
  if (a.is_identity() || b.is_identity() || c.is_identity()) return false;
  if (a == b || a == c || b == c) return false;
  return c != a * b;
}

const std::vector<LinearMapZ2>& LinearMapZ2::all_invertible() {
  static const std::vector<LinearMapZ2> maps = [] {
    std::vector<LinearMapZ2> out;
    for (unsigned a = 1; a < 8; ++a)
      for (unsigned b = 1; b < 8; ++b)
        for (unsigned c = 1; c < 8; ++c)
          if (independent_triple(Z2Vec(a), Z2Vec(b), Z2Vec(c)))
            out.emplace_back(Z2Vec(a), Z2Vec(b), Z2Vec(c));
    return out;
  }();
  return maps;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::DuplicateFacet: return "DuplicateFacet";
    case ErrorCode::NotPolytopal: return "NotPolytopal";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadFacetId: return "BadFacetId";
    case ErrorCode::BadFace: return "BadFace";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::MissingFacet: return "MissingFacet";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAFourBelt: return "NotAFourBelt";
    case ErrorCode::SimplexExcluded: return "SimplexExcluded";
    case ErrorCode::BadGenerator: return "BadGenerator";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::BadWord: return "BadWord";
    case ErrorCode::OracleOverflow: return "OracleOverflow";
    case ErrorCode::UnclassifiableSection: return "UnclassifiableSection";
    case ErrorCode::NotClosedSurface: return "NotClosedSurface";
    case ErrorCode::NotClosedManifold: return "NotClosedManifold";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "UnknownError";
}

bool is_internal_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnclassifiableSection:
    case ErrorCode::NotClosedSurface:
    case ErrorCode::NotClosedManifold:
    case ErrorCode::InternalInvariant:
      return true;
    default:
      return false;
  }
}

}  // namespace smallcover
