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

#include "io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "chainring/localring.hpp"

namespace chainring::io {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::int64_t to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got '" + s + "'");
  }
}

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : keys) ok = ok || it.key() == k;
    if (!ok) throw ParseError("unknown field '" + it.key() + "' in " + what);
  }
}


}  // namespace

json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

RingPtr parse_ring_spec(const std::string& spec) {
  if (!spec.empty() && (spec.front() == '{' || spec.front() == '[')) {
    try {
      return ring_from_json(json::parse(spec));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("ring descriptor: ") + e.what());
    }
  }
  auto parts = split(spec, ':');
  const std::string& kind = parts.empty() ? spec : parts[0];
  if (kind == "zpk" && parts.size() == 3) {
    auto p = to_int(parts[1], "p"), k = to_int(parts[2], "k");
    if (p < 2 || k < 1) throw DomainError("zpk needs p >= 2 and k >= 1");
    return IntegerModRing::create(static_cast<std::uint64_t>(p), static_cast<unsigned>(k));
  }
  if (kind == "zn" && parts.size() == 2) {
    auto n = to_int(parts[1], "n");
    if (n < 2) throw DomainError("zn needs n >= 2");
    return integers_mod(static_cast<std::uint64_t>(n));
  }
  if (kind == "gr" && parts.size() == 4) {
    std::vector<std::int64_t> h;
    for (auto& c : split(parts[3], ',')) h.push_back(to_int(c, "modulus coefficient"));
    return GaloisRing::create(static_cast<std::uint64_t>(to_int(parts[1], "p")),
                              static_cast<unsigned>(to_int(parts[2], "k")), h);
  }
  if (std::ifstream(spec).good()) return ring_from_json(read_json_file(spec));
  throw ParseError("bad ring descriptor '" + spec + "' (expected zpk:p:k, zn:n, gr:p:k:coeffs, JSON or a file)");
}

RingPtr ring_from_json(const json& j) {
  if (j.is_string()) return parse_ring_spec(j.get<std::string>());
  if (!j.is_object()) throw ParseError("ring descriptor must be an object or a string");
  auto kind = get<std::string>(j, "kind");
  if (kind == "zpk") {
    only_keys(j, {"kind", "p", "k"}, "zpk descriptor");
    auto p = get<std::uint64_t>(j, "p");
    auto k = get<unsigned>(j, "k");
    return IntegerModRing::create(p, k);
  }
  if (kind == "zn") {
    only_keys(j, {"kind", "n"}, "zn descriptor");
    return integers_mod(get<std::uint64_t>(j, "n"));
  }
  if (kind == "gr") {
    only_keys(j, {"kind", "p", "k", "r", "base", "modulus"}, "gr descriptor");
    ChainRingPtr base = j.contains("base") ? ring_from_json(j.at("base"))->chain_ptr()
                                           : IntegerModRing::create(get<std::uint64_t>(j, "p"), get<unsigned>(j, "k"));
    auto h = vec_from_json(*base, j.at("modulus"));
    if (j.contains("r") && get<std::size_t>(j, "r") + 1 != h.size())
      throw DomainError("gr degree r does not match the modulus length");
    return GaloisRing::create(base, h);
  }
  if (kind == "product") {
    only_keys(j, {"kind", "components"}, "product descriptor");
    std::vector<ChainRingPtr> comps;
    for (const auto& c : j.at("components")) comps.push_back(ring_from_json(c)->chain_ptr());
    return ProductRing::create(std::move(comps));
  }
  if (kind == "local") {
    only_keys(j, {"kind", "base", "gamma", "ann", "mul", "one", "names"}, "local descriptor");
    LocalRingPresentation p;
    p.base = ring_from_json(j.at("base"))->chain_ptr();
    p.ann = get<std::vector<unsigned>>(j, "ann");
    if (j.contains("gamma") && get<std::size_t>(j, "gamma") != p.ann.size())
      throw DomainError("gamma does not match the length of ann");
    for (const auto& row : j.at("mul")) {
      p.mul.emplace_back();
      for (const auto& cell : row) p.mul.back().push_back(vec_from_json(*p.base, cell));
    }
    p.one = vec_from_json(*p.base, j.at("one"));
    if (j.contains("names")) p.names = get<std::vector<std::string>>(j, "names");
    return LocalRing::create(std::move(p));
  }
  if (kind == "quotient") {
    // Z_{p^k}[X] / (f, p^t X)
    only_keys(j, {"kind", "p", "k", "f", "t"}, "quotient descriptor");
    return quotient_local_ring(get<std::uint64_t>(j, "p"), get<unsigned>(j, "k"),
                               get<std::vector<std::int64_t>>(j, "f"), get<unsigned>(j, "t"));
  }
  throw ParseError("unknown ring kind '" + kind + "'");
}

json ring_to_json(const Ring& R) {
  switch (R.kind()) {
    case RingKind::IntegerMod: {
      const auto& Z = dynamic_cast<const IntegerModRing&>(R);
      return {{"kind", "zpk"}, {"p", Z.prime()}, {"k", Z.exponent()}};
    }
    case RingKind::Galois: {
      const auto& G = dynamic_cast<const GaloisRing&>(R);
      json j{{"kind", "gr"}, {"r", G.degree()}, {"modulus", vec_to_json(G.base(), G.modulus())}};
      if (G.base().kind() == RingKind::IntegerMod) {
        j["p"] = G.base().prime();
        j["k"] = G.base().nilpotency();
      } else {
        j["base"] = ring_to_json(G.base());
      }
      return j;
    }
    case RingKind::Product: {
      const auto& P = dynamic_cast<const ProductRing&>(R);
      json comps = json::array();
      for (const auto& c : P.components()) comps.push_back(ring_to_json(*c));
      return {{"kind", "product"}, {"components", comps}};
    }
    case RingKind::Local: {
      const auto& L = dynamic_cast<const LocalRing&>(R);
      const auto& p = L.presentation();
      json mul = json::array();
      for (const auto& row : p.mul) {
        json r = json::array();
        for (const auto& cell : row) r.push_back(vec_to_json(*p.base, cell));
        mul.push_back(r);
      }
      return {{"kind", "local"},         {"base", ring_to_json(*p.base)}, {"gamma", p.ann.size()},
              {"ann", p.ann},            {"mul", mul},                    {"one", vec_to_json(*p.base, p.one)},
              {"names", p.names}};
    }
  }
  return nullptr;
}

Elem elem_from_json(const Ring& R, const json& j) {
  if (j.is_number_integer()) return R.from_int(j.get<std::int64_t>());
  if (j.is_string()) {
    auto ctx = PolyContext::create(R.shared_from_this(), {});
    auto f = parse_poly(ctx, j.get<std::string>());
    return f.constant_term();
  }
  if (!j.is_array()) throw ParseError("bad element " + j.dump() + " for " + R.describe());
  switch (R.kind()) {
    case RingKind::Galois: {
      const auto& G = dynamic_cast<const GaloisRing&>(R);
      if (j.size() > G.degree()) throw ParseError("too many coordinates in " + j.dump());
      auto c = vec_from_json(G.base(), j);
      c.resize(G.degree(), Elem{0});
      return G.from_coords(c);
    }
    case RingKind::Product: {
      const auto& P = dynamic_cast<const ProductRing&>(R);
      if (j.size() != P.components().size()) throw ParseError("wrong number of components in " + j.dump());
      std::vector<Elem> parts;
      for (std::size_t i = 0; i < j.size(); ++i) parts.push_back(elem_from_json(*P.components()[i], j[i]));
      return P.join(parts);
    }
    case RingKind::Local: {
      const auto& L = dynamic_cast<const LocalRing&>(R);
      if (j.size() != L.gamma()) throw ParseError("wrong number of coordinates in " + j.dump());
      return L.from_coords(vec_from_json(L.base(), j));
    }
    case RingKind::IntegerMod:
      break;
  }
  throw ParseError("bad element " + j.dump() + " for " + R.describe());
}

json elem_to_json(const Ring& R, Elem a) {
  switch (R.kind()) {
    case RingKind::IntegerMod:
      return a.code;
    case RingKind::Galois: {
      const auto& G = dynamic_cast<const GaloisRing&>(R);
      return vec_to_json(G.base(), G.coords(a));
    }
    case RingKind::Product: {
      const auto& P = dynamic_cast<const ProductRing&>(R);
      auto parts = P.split(a);
      json out = json::array();
      for (std::size_t i = 0; i < parts.size(); ++i) out.push_back(elem_to_json(*P.components()[i], parts[i]));
      return out;
    }
    case RingKind::Local: {
      const auto& L = dynamic_cast<const LocalRing&>(R);
      return vec_to_json(L.base(), L.coords(a));
    }
  }
  return nullptr;
}

std::vector<Elem> vec_from_json(const Ring& R, const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of elements, got " + j.dump());
  std::vector<Elem> out;
  for (const auto& e : j) out.push_back(elem_from_json(R, e));
  return out;
}

json vec_to_json(const Ring& R, const std::vector<Elem>& v) {
  json out = json::array();
  for (Elem e : v) out.push_back(elem_to_json(R, e));
  return out;
}

OrderSpec parse_order_spec(const std::string& spec) {
  OrderSpec out;
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  if (kind == "lex")
    out.kind = OrderKind::Lex;
  else if (kind == "degrevlex" || kind == "grevlex")
    out.kind = OrderKind::DegRevLex;
  else
    throw UsageError("unknown monomial order '" + kind + "' (expected lex or degrevlex)");
  if (colon != std::string::npos) {
    out.vars = split(spec.substr(colon + 1), ',');
    for (const auto& v : out.vars)
      if (v.empty()) throw UsageError("empty variable name in '" + spec + "'");
  }
  return out;
}

std::string order_name(OrderKind kind) { return kind == OrderKind::Lex ? "lex" : "degrevlex"; }

MultiPoly poly_from_json(const PolyContextPtr& ctx, const json& j) {
  if (j.is_string()) return parse_poly(ctx, j.get<std::string>());
  if (!j.is_object()) throw ParseError("polynomial must be text or an object, got " + j.dump());
  only_keys(j, {"vars", "terms"}, "polynomial");
  std::vector<std::size_t> map;
  if (j.contains("vars")) {
    for (const auto& name : get<std::vector<std::string>>(j, "vars")) {
      auto idx = ctx->var_index(name);
      if (!idx) throw DomainError("polynomial uses unknown variable '" + name + "'");
      map.push_back(*idx);
    }
  } else {
    for (std::size_t i = 0; i < ctx->nvars(); ++i) map.push_back(i);
  }
  MultiPoly f(ctx);
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_array()) throw ParseError("term must be [coef, [exponents]]");
    if (t[1].size() != map.size()) throw ParseError("term " + t.dump() + " has the wrong number of exponents");
    Exponents e(ctx->nvars(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) e[map[i]] += t[1][i].get<std::uint32_t>();
    f = f + MultiPoly::monomial(ctx, elem_from_json(ctx->ring(), t[0]), e);
  }
  return f;
}

json poly_to_json(const MultiPoly& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) terms.push_back(json::array({elem_to_json(f.ring(), t.coef), t.exps}));
  return {{"vars", f.context()->vars()}, {"terms", terms}};
}

RingMatrix matrix_from_json(const RingPtr& R, const json& j) {
  json data = j;
  std::optional<std::size_t> rows, cols;
  if (j.is_object()) {
    only_keys(j, {"ring", "rows", "cols", "data"}, "matrix");
    data = j.at("data");
    if (j.contains("rows")) rows = get<std::size_t>(j, "rows");
    if (j.contains("cols")) cols = get<std::size_t>(j, "cols");
  }
  if (!data.is_array()) throw ParseError("matrix data must be an array of rows");
  std::vector<std::vector<Elem>> out;
  for (const auto& row : data) out.push_back(vec_from_json(*R, row));
  if (rows && *rows != out.size()) throw DomainError("matrix has " + std::to_string(out.size()) + " rows, declared " + std::to_string(*rows));
  std::size_t n = out.empty() ? cols.value_or(0) : out[0].size();
  for (const auto& row : out)
    if (row.size() != n) throw DomainError("matrix rows have different lengths");
  if (cols && *cols != n) throw DomainError("matrix has " + std::to_string(n) + " columns, declared " + std::to_string(*cols));
  RingMatrix A(R, out.size(), n);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) A(i, c) = out[i][c];
  return A;
}

json matrix_to_json(const RingMatrix& A) {
  json data = json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) data.push_back(vec_to_json(A.ring(), A.row(i)));
  return {{"rows", A.rows()}, {"cols", A.cols()}, {"data", data}};
}

ExtensionPtr extension_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("extension must be an object");
  only_keys(j, {"base", "m", "modulus"}, "extension");
  auto base = ring_from_json(j.at("base"))->chain_ptr();
  if (j.contains("modulus")) {
    auto h = vec_from_json(*base, j.at("modulus"));
    if (j.contains("m") && get<std::size_t>(j, "m") + 1 != h.size()) throw DomainError("m does not match the modulus length");
    return GaloisExtension::create(base, h);
  }
  return build_extension(base, get<unsigned>(j, "m"));
}

json extension_to_json(const GaloisExtension& E) {
  return {{"base", ring_to_json(E.base())}, {"m", E.degree()}, {"modulus", vec_to_json(E.base(), E.modulus())}};
}

Elem ext_elem_from_json(const GaloisExtension& E, const json& j) {
  if (j.is_array()) {
    if (j.size() > E.degree()) throw ParseError("too many coordinates in " + j.dump());
    auto c = vec_from_json(E.base(), j);
    c.resize(E.degree(), Elem{0});
    return E.from_coords(c);
  }
  return elem_from_json(E.ring(), j);
}

json ext_elem_to_json(const GaloisExtension& E, Elem a) { return vec_to_json(E.base(), E.coords(a)); }

}  // namespace chainring::io
