#ifndef GPS_JSON_IO_HPP
#define GPS_JSON_IO_HPP

#include <json.hpp>

#include "gps/multivector.hpp"
#include "gps/tensor.hpp"

namespace gps {

/// Tensor dump listing nonzero entries only, with 1-based multi-indices and
/// exact scalar strings: {"rank", "dim", "entries": [[[i..], "value"], ..]}.
/// Round-trips exactly.
nlohmann::json tensor_to_json(const ExactTensor& t);
ExactTensor tensor_from_json(const nlohmann::json& j);

/// Term-list form of a multivector: {"dim", "order", "terms":
/// [[[exponents], [1-based indices], "coeff"], ..]}.
nlohmann::json multivector_to_json(const PolyMultivector& m);
PolyMultivector multivector_from_json(const nlohmann::json& j);

}  // namespace gps

#endif
