// crosscheck.hpp: character-vs-intersection consistency checks.
//
// For a singularity model with an associated one-parameter family B, the
// family characters must reproduce the intersection numbers:
//   chi_lambda = (lambda . B) / deg(B)
//   chi_delta  = (delta . B - sum psi_i . B) / deg(B)
#pragma once

#include "gmchar/intersection.hpp"
#include "gmchar/singularities.hpp"

namespace gmchar {

struct CrossCheckReport {
  std::string model_label;
  std::string family_name;
  Character catalog;       // character route
  Character from_family;   // intersection route
  bool agrees = false;
};

// Associated pairs: A_odd(k) fully attached <-> B_k; A_odd(k) with S={1}
// <-> H_k; D_even(k) fully attached <-> Tri_k; D_even(k) with S={1,2}
// <-> BH_k; Toric/Unibranch fully attached <-> family_toric.  Any other
// (model, S) combination throws NoAssociatedFamily.
CrossCheckReport crosscheck(const SingularityModel& model, const AttachmentConfig& attach);

}  // namespace gmchar
