/*
   Copyright 2026 The chainring authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHAINRING_TOOLS_IO_HPP
#define CHAINRING_TOOLS_IO_HPP

// JSON forms of rings, elements, polynomials, matrices and extensions.

#include <string>
#include <vector>

#include "chainring/extension.hpp"
#include "chainring/matrix.hpp"
#include "chainring/poly.hpp"
#include "json.hpp"

namespace chainring::io {

using nlohmann::json;

// Bad command line; the CLI exits with status 2.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error("UsageError", message) {}
};

json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

// Short forms zpk:p:k, zn:n, gr:p:k:c0,c1,..,1 or inline JSON.
RingPtr parse_ring_spec(const std::string& spec);
RingPtr ring_from_json(const json& j);
json ring_to_json(const Ring& R);

// Integers are accepted for every ring; strings are parsed as constant
// expressions such as "1+3*a".
Elem elem_from_json(const Ring& R, const json& j);
json elem_to_json(const Ring& R, Elem a);
std::vector<Elem> vec_from_json(const Ring& R, const json& j);
json vec_to_json(const Ring& R, const std::vector<Elem>& v);

// "lex", "degrevlex", optionally followed by :x,y,z.
struct OrderSpec {
  OrderKind kind = OrderKind::Lex;
  std::vector<std::string> vars;
};
OrderSpec parse_order_spec(const std::string& spec);
std::string order_name(OrderKind kind);

// Either polynomial text or {"vars": [...], "terms": [[coef, [e1, ...]], ...]}.
MultiPoly poly_from_json(const PolyContextPtr& ctx, const json& j);
json poly_to_json(const MultiPoly& f);

// {"rows", "cols", "data"} or a bare array of rows.
RingMatrix matrix_from_json(const RingPtr& R, const json& j);
json matrix_to_json(const RingMatrix& A);

// {"base": ring, "m": 3, "modulus": [...]} with the modulus optional.
ExtensionPtr extension_from_json(const json& j);
json extension_to_json(const GaloisExtension& E);
// S-elements are length-m coordinate arrays over the base.
Elem ext_elem_from_json(const GaloisExtension& E, const json& j);
json ext_elem_to_json(const GaloisExtension& E, Elem a);

}  // namespace chainring::io

#endif
