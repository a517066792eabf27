#pragma once

#include "exring/dyck.hpp"
#include "exring/fock.hpp"
#include "exring/plane_partition.hpp"
#include "exring/tableaux.hpp"

#include <json.hpp>

#include <vector>

namespace exring {

/// Array of rows.
nlohmann::json ssyt_to_json(const SSYT& t);
/// Throws std::invalid_argument unless j is a valid filling with entries <= bound.
SSYT ssyt_from_json(const nlohmann::json& j, int bound);

/// {"entries": [[..], ..], "bound": c}
nlohmann::json pp_to_json(const PlanePartition& b);
/// Accepts the object form, or a bare array of rows (bound = largest entry).
/// `cols_hint` sizes an empty matrix.
PlanePartition pp_from_json(const nlohmann::json& j, int cols_hint = -1);

nlohmann::json dyck_to_json(const DyckWord& w);
DyckWord dyck_from_json(const nlohmann::json& j);

nlohmann::json dyck_stats_to_json(const DyckStats& s);

/// [{"orbitals": [[pos, "up"|"down"], ..], "coeff": "num/den"}, ..] in Slater order.
nlohmann::json state_to_json(const StateVector& v);
/// Degree is read from the terms; an empty list yields the zero state of degree d.
StateVector state_from_json(const nlohmann::json& j, int m, int d = 0);

}  // namespace exring
