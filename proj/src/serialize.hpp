#pragma once
#include "json.hpp"
#include "skein/boundary_rewrite.hpp"
#include "skein/handlebody.hpp"
#include "skein/matrix_rep.hpp"
#include "skein/seifert.hpp"

namespace skein::io {

using nlohmann::json;

constexpr int kSchema = 1;

// {order, coords: [[num, den], ...]}
json to_json(const CycNum& c);
CycNum cycnum_from_json(const json& j);
json to_json(const Mat2& m);  // [[e, e], [e, e]]
Mat2 mat2_from_json(const json& j);
json to_json(const SubalgebraClass& c);
json to_json(const Representation& r);
Representation representation_from_json(const json& j);
json to_json(const TorsionCertificate& c);
TorsionCertificate certificate_from_json(const json& j);
json to_json(const JprimeReport& r);
json to_json(const NormalizeResult& r);
json to_json(const std::vector<Integer>& v);

}  // namespace skein::io
