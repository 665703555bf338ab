#pragma once

// Certified word-problem oracles.
//
// An OracleSpec asserts that the presented monoid/group is isomorphic to a
// known model via the given generator labels, so word equality can be decided
// by comparing images.  Specs are attached only by code paths that can
// justify the isomorphism (built-in objects and constructions preserving
// them); everything else runs search-only.

#include <cstdint>
#include <map>
#include <string>

namespace ck {

enum class OracleKind {
  free_model,  // free on the generators: words equal iff identical (reduced)
  integers,    // labels in Z, sum decides
  cyclic,      // labels mod n, sum decides
};

struct OracleSpec {
  OracleKind kind = OracleKind::free_model;
  int modulus = 0;                             // for cyclic
  std::map<std::string, long long> labels;     // generator name -> label

  static OracleSpec free_model() { return {OracleKind::free_model, 0, {}}; }
  static OracleSpec integers(std::map<std::string, long long> l) {
    return {OracleKind::integers, 0, std::move(l)};
  }
  static OracleSpec cyclic(int n, std::map<std::string, long long> l) {
    return {OracleKind::cyclic, n, std::move(l)};
  }
  std::string str() const;
};

}  // namespace ck
