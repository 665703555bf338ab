#pragma once

// Built-in fixtures and named maps.
//
// Fixture names accepted by builtin_sset: pt, s1, sphere2_min,
// rp2_presentation, nerve_j, s1_localized, delta(n), boundary_delta(n),
// wedge(name, name, ...).  Infinite objects (nerve_j, s1_localized, wedges of
// them) are rule-based and valid in every dimension.

#include <utility>
#include <vector>

#include "cobarkit/sset.hpp"
#include "cobarkit/sset_map.hpp"

namespace ck {

SSetPtr pt();
SSetPtr delta(int n);
SSetPtr boundary_delta(int n);
SSetPtr s1();
SSetPtr sphere2_min();
SSetPtr rp2_presentation();
SSetPtr nerve_j();
SSetPtr s1_localized();

// One-point union of reduced simplicial sets; component k's simplex `x`
// appears as "k.x".  Components must be reduced.
SSetPtr wedge(std::vector<SSetPtr> comps);

// locate a wedge simplex in its component: returns (component, key there)
std::pair<int, SimplexKey> wedge_locate(const SSet& w,
                                        const std::vector<SSetPtr>& comps,
                                        SimplexKey k);
// inclusion of component `comp` into the wedge
SimplexRef wedge_embed(const SSet& w, const std::vector<SSetPtr>& comps,
                       int comp, const SimplexRef& r);

// Parses fixture syntax, e.g. "wedge(s1,s1)".  Unknown names throw.
SSetPtr builtin_sset(const std::string& name);

// Named maps: "iota_s1" (loop to its localization, sigma -> u),
// "id:<fixture>", "collapse:<fixture>" (to pt).
SSetMap builtin_map(const std::string& name);

}  // namespace ck
