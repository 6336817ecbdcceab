#pragma once

// JSON (de)serialization for every public object.  Serialization is
// deterministic (fixed key order, sorted exponents) so that emitted files
// and reports round-trip byte-identically.
//
// Shapes:
//   element    {"modulus": m|null, "coeffs": {"<exp>": "<decimal-int>"}}
//   matrix     {"rows": r, "cols": c, "entries": [[element, ...], ...]}
//   form       {"eps": e, "psi": matrix}
//   formation  {"F_rank": r, "gamma": M, "delta": M, "G_form": form}
//   stable iso {"laurent": bool, "alpha": M, "beta": M, "nu": M,
//               "src": formation, "dst": formation,
//               "src_stab": k, "dst_stab": k}
//   embedding  {"laurent": bool, "v": F, "vprime": F, "m": F,
//               "j": M, "jprime": M, "sigma": M|null}
//   ext. form  {"laurent": bool, "lambda": M, "nu": M}
//   quasiform  {"laurent": bool, "K_rank": r, "V": M, "eps": e}
// "laurent" defaults to true when absent.

#include <json.hpp>

#include "qf/constructions.hpp"
#include "qf/ellmonoid.hpp"

namespace qf {

using Json = nlohmann::ordered_json;

Json elem_to_json(const GroupRingElem& e);
GroupRingElem elem_from_json(const Json& j);

Json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const Json& j, bool laurent);

Json form_to_json(const EpsQuadraticForm& f);
EpsQuadraticForm form_from_json(const Json& j, bool laurent);

Json formation_to_json(const SplitFormation& x);
SplitFormation formation_from_json(const Json& j, bool laurent);

Json iso_to_json(const StableIso& f);
StableIso iso_from_json(const Json& j);

Json embedding_to_json(const TwoSidedPrimEmbedding& pe);
TwoSidedPrimEmbedding embedding_from_json(const Json& j);

Json esf_to_json(const ExtendedSymmetricForm& e);
ExtendedSymmetricForm esf_from_json(const Json& j);

Json quasiformation_to_json(const QuasiFormation& x);
QuasiFormation quasiformation_from_json(const Json& j);

}  // namespace qf
