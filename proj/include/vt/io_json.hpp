#pragma once

#include <string>

#include <json.hpp>

#include "vt/chirp.hpp"
#include "vt/identities.hpp"
#include "vt/quaternion.hpp"
#include "vt/sl2c.hpp"
#include "vt/transforms.hpp"

namespace vt {

// Complex values serialize as [re, im]; quaternions as [a, b, c, d];
// matrices as 2x2 arrays of [re, im] pairs.

nlohmann::json to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Quaterniond& q);
Quaterniond quat_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Sl2cMatrixd& m);
Sl2cMatrixd matrix_from_json(const nlohmann::json& j);

/// {"amp": [re, im], "sigma": [re, im], "beta": [re, im]}
nlohmann::json to_json(const GaussianChirpd& f);
GaussianChirpd chirp_from_json(const nlohmann::json& j);

/// {"kind": "frft", "theta": ...} | {"kind": "versor", "xi1": .., "eta": .., "xi2": ..}
/// | {"kind": "hybrid"|"scale"|"laplace", "theta": ..} | {"kind": "basis", "which": "J"}
/// | {"kind": "raw", "matrix": [[..], [..]]}
nlohmann::json to_json(const NamedTransform& t);
NamedTransform transform_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IdentityReport& r);

}  // namespace vt
