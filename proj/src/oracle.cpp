#include "cobarkit/oracle.hpp"

#include <sstream>

namespace ck {

std::string OracleSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case OracleKind::free_model:
      os << "free";
      break;
    case OracleKind::integers:
      os << "integers";
      break;
    case OracleKind::cyclic:
      os << "cyclic(" << modulus << ")";
      break;
  }
  if (!labels.empty()) {
    os << " {";
    bool first = true;
    for (const auto& [g, v] : labels) {
      if (!first) os << ", ";
      first = false;
      os << g << ": " << v;
    }
    os << '}';
  }
  return os.str();
}

}  // namespace ck
