// crosscheck.cpp
#include "gmchar/crosscheck.hpp"

namespace gmchar {

namespace {

Int rational_to_int(const Rational& r, const char* what) {
  if (!r.is_integer()) throw DomainError(std::string(what) + ": non-integral value " + r.str());
  return r.num();
}

}  // namespace

CrossCheckReport crosscheck(const SingularityModel& model, const AttachmentConfig& attach) {
  const AttachmentConfig full = AttachmentConfig::all_of(model);
  FamilyIntersection fi;
  switch (model.family) {
    case Family::AOdd:
      if (attach.attached == full.attached)
        fi = family_bk(model.k);
      else if (attach.attached == std::set<int>{1})
        fi = family_hk(model.k);
      else
        throw NoAssociatedFamily("crosscheck: no family for this A_odd attachment");
      break;
    case Family::DEven:
      if (attach.attached == full.attached)
        fi = family_trik(model.k);
      else if (attach.attached == std::set<int>({1, 2}))
        fi = family_bhk(model.k);
      else
        throw NoAssociatedFamily("crosscheck: no family for this D_even attachment");
      break;
    case Family::Toric:
      if (attach.attached != full.attached)
        throw NoAssociatedFamily("crosscheck: toric family covers the fully attached case only");
      fi = family_toric(model.p, model.q, model.b);
      break;
    case Family::Unibranch: {
      if (attach.attached != full.attached)
        throw NoAssociatedFamily("crosscheck: toric family covers the fully attached case only");
      auto pq = two_generators_from_gaps(model.gaps);
      if (!pq) throw NoAssociatedFamily("crosscheck: gap sequence is not two-generated");
      fi = family_toric(pq->first, pq->second, 1);
      break;
    }
    default:
      throw NoAssociatedFamily("crosscheck: no family associated with " + model.label());
  }

  CrossCheckReport rep;
  rep.model_label = model.label();
  rep.family_name = fi.name;
  rep.catalog = chi_family(model, attach);

  const Rational deg(Int(fi.deg_b));
  const Int lambda = rational_to_int(fi.lambda / deg, "crosscheck lambda");
  const Int delta =
      rational_to_int((fi.delta_total() - fi.psi_total()) / deg, "crosscheck delta");
  rep.from_family = Character::from_lambda_delta(lambda, delta);
  rep.agrees = rep.catalog == rep.from_family;
  return rep;
}

}  // namespace gmchar
