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

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "chainring/groebner.hpp"
#include "chainring/localring.hpp"
#include "chainring/minrank.hpp"
#include "chainring/oracles.hpp"
#include "chainring/rankdecode.hpp"
#include "chainring/solve.hpp"
#include "io.hpp"

using namespace chainring;
using namespace chainring::io;

namespace {

// ------------------------------------------------------------ shared inputs

RingPtr merge_ring(const std::string& flag, const json* from_file) {
  RingPtr flag_ring = flag.empty() ? nullptr : parse_ring_spec(flag);
  RingPtr file_ring = from_file ? ring_from_json(*from_file) : nullptr;
  if (flag_ring && file_ring && !flag_ring->same_as(*file_ring))
    throw DomainError("ring mismatch: --ring gives " + flag_ring->describe() + ", the input file gives " +
                      file_ring->describe());
  if (!flag_ring && !file_ring) throw UsageError("no ring given (use --ring or a \"ring\" field)");
  return flag_ring ? flag_ring : file_ring;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string v;
  while (std::getline(ss, v, ','))
    if (!v.empty()) out.push_back(v);
  return out;
}

// A polynomial system: JSON {"ring", "vars", "order", "equations"} or, with
// --text, one polynomial per line.
struct SystemInput {
  std::string path, ring, order, vars;
  bool text = false;

  PolyContextPtr ctx;
  std::vector<MultiPoly> F;

  void add_options(CLI::App* sub) {
    sub->add_option("system,--system", path, "system file ('-' reads stdin)");
    sub->add_option("--ring", ring, "ring: zpk:p:k, zn:n, gr:p:k:coeffs, JSON or a file");
    sub->add_option("--order", order, "lex or degrevlex, optionally with variables, e.g. lex:x,y");
    sub->add_option("--vars", vars, "comma separated variables, largest first");
    sub->add_flag("--text", text, "the file holds polynomial text, one per line");
  }

  void load() {
    if (path.empty()) throw UsageError("no system file given");
    OrderSpec os;
    if (!order.empty()) os = parse_order_spec(order);
    std::vector<std::string> flag_vars = !os.vars.empty() ? os.vars : split_csv(vars);
    json j;
    std::vector<json> eqs;
    if (text) {
      std::stringstream ss(read_text_file(path));
      std::string line;
      while (std::getline(ss, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        eqs.push_back(line);
      }
    } else {
      j = read_json_file(path);
      if (!j.is_object()) throw ParseError("system file must hold a JSON object");
      for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "ring" && it.key() != "vars" && it.key() != "order" && it.key() != "equations")
          throw ParseError("unknown field '" + it.key() + "' in system file");
      if (!j.contains("equations") || !j["equations"].is_array()) throw ParseError("system file needs an \"equations\" array");
      for (const auto& e : j["equations"]) eqs.push_back(e);
      if (order.empty() && j.contains("order")) os = parse_order_spec(j["order"].get<std::string>());
    }
    RingPtr R = merge_ring(ring, j.contains("ring") ? &j["ring"] : nullptr);
    std::vector<std::string> names = flag_vars;
    if (j.contains("vars")) {
      auto file_vars = j["vars"].get<std::vector<std::string>>();
      if (names.empty()) names = file_vars;
      for (const auto& v : file_vars)
        if (std::find(names.begin(), names.end(), v) == names.end())
          throw DomainError("variable '" + v + "' of the system is missing from the order");
    }
    if (names.empty()) throw UsageError("no variables given (use --order lex:x,y, --vars or a \"vars\" field)");
    if (eqs.empty()) throw UsageError("the system has no equations");
    std::vector<std::size_t> prec(names.size());
    for (std::size_t i = 0; i < prec.size(); ++i) prec[i] = i;
    ctx = PolyContext::create(R, names, MonomialOrder(os.kind, prec));
    for (const auto& e : eqs) F.push_back(poly_from_json(ctx, e));
  }
};

std::vector<MultiPoly> with_field_equations(std::vector<MultiPoly> F, const PolyContextPtr& ctx) {
  for (std::size_t v = 0; v < ctx->nvars(); ++v) F.push_back(ring_vanishing_polynomial(ctx, v));
  return F;
}

json solutions_to_json(const SolutionSet& S) {
  json rows = json::array();
  for (const auto& row : S.rows) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(cell ? elem_to_json(*S.ring, *cell) : json("*"));
    rows.push_back(r);
  }
  json out{{"solutions", rows}};
  if (S.truncated) out["truncated"] = true;
  return out;
}

// Rows of a result, with "*" expanded over the whole ring.
std::set<std::vector<Elem>> expand_rows(const Ring& R, const json& rows) {
  std::set<std::vector<Elem>> out;
  for (const auto& row : rows) {
    std::vector<std::vector<Elem>> partial{{}};
    for (const auto& cell : row) {
      std::vector<std::vector<Elem>> next;
      for (const auto& p : partial) {
        if (cell.is_string() && cell.get<std::string>() == "*") {
          for (std::uint64_t c = 0; c < R.size(); ++c) {
            next.push_back(p);
            next.back().push_back(Elem{c});
          }
        } else {
          next.push_back(p);
          next.back().push_back(elem_from_json(R, cell));
        }
      }
      partial = std::move(next);
    }
    out.insert(partial.begin(), partial.end());
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("result has no field '") + key + "'");
  return j.at(key);
}

json report(std::vector<std::pair<std::string, bool>> checks, json extra = json::object()) {
  json c = json::object();
  bool all = true;
  for (auto& [name, ok] : checks) {
    c[name] = ok;
    all = all && ok;
  }
  extra["checks"] = c;
  extra["verified"] = all;
  return extra;
}

// ------------------------------------------------------------ commands

struct Command {
  virtual ~Command() = default;
  virtual void add_options(CLI::App* sub) = 0;
  virtual json run() = 0;
  virtual json verify(const json& result) = 0;
};

struct GbCommand : Command {
  SystemInput in;
  bool field_eqs = false, criteria = false, terms = false;
  std::size_t max_steps = GroebnerOptions{}.max_steps;

  void add_options(CLI::App* sub) override {
    in.add_options(sub);
    sub->add_flag("--field-equations", field_eqs, "append F_m(x) for every variable");
    sub->add_flag("--criteria", criteria, "enable the product and chain criteria");
    sub->add_option("--max-steps", max_steps, "reduction step cap");
    sub->add_flag("--terms", terms, "print polynomials as term lists instead of text");
  }
  std::vector<MultiPoly> input() {
    in.load();
    return field_eqs ? with_field_equations(in.F, in.ctx) : in.F;
  }
  GroebnerOptions options() const { return {criteria, max_steps}; }
  json run() override {
    auto G = groebner_basis(input(), options());
    json basis = json::array();
    for (const auto& g : G.generators) basis.push_back(terms ? poly_to_json(g) : json(g.to_string()));
    return {{"basis", basis}};
  }
  json verify(const json& result) override {
    auto F = input();
    std::vector<MultiPoly> B;
    for (const auto& b : field(result, "basis")) B.push_back(poly_from_json(in.ctx, b));
    auto G = groebner_basis(F, options()).generators;
    bool inputs = std::all_of(F.begin(), F.end(), [&](const MultiPoly& f) { return strong_reduce(f, B).is_zero(); });
    bool inside = std::all_of(B.begin(), B.end(), [&](const MultiPoly& b) { return strong_reduce(b, G).is_zero(); });
    return report({{"groebner_basis", is_groebner_basis(B)}, {"generates_input", inputs}, {"inside_ideal", inside}});
  }
};

struct SolveCommand : Command {
  SystemInput in;
  std::string method = "elimination";
  bool field_eqs = false;
  std::size_t max_solutions = SolveOptions{}.max_solutions;

  void add_options(CLI::App* sub) override {
    in.add_options(sub);
    sub->add_option("--method", method, "elimination or lifting")->check(CLI::IsMember({"elimination", "lifting"}));
    sub->add_flag("--field-equations", field_eqs, "append F_m(x) for every variable");
    sub->add_option("--max-solutions", max_solutions, "cap on explicit tuples");
  }
  json run() override {
    in.load();
    SolveOptions so;
    so.field_equations = field_eqs;
    so.max_solutions = max_solutions;
    auto S = method == "lifting" ? solve_system_lifting(in.F, so) : solve_system(in.F, so);
    return solutions_to_json(S);
  }
  json verify(const json& result) override {
    in.load();
    auto brute = brute_solve(in.F);
    std::set<std::vector<Elem>> expected;
    for (auto& v : brute.expand()) expected.insert(v);
    auto got = expand_rows(in.ctx->ring(), field(result, "solutions"));
    bool sound = std::includes(expected.begin(), expected.end(), got.begin(), got.end());
    bool complete = result.value("truncated", false) || got == expected;
    return report({{"sound", sound}, {"complete", complete}}, {{"brute_force_count", expected.size()}});
  }
};

struct SolveLocalCommand : SolveCommand {
  json run() override {
    in.load();
    if (in.ctx->ring().kind() != RingKind::Local) throw DomainError("solve-local needs a local ring descriptor");
    SolveOptions so;
    so.field_equations = field_eqs;
    so.max_solutions = max_solutions;
    auto S = solve_local(in.F, method == "lifting" ? SolveMethod::Lifting : SolveMethod::Elimination, so);
    return solutions_to_json(S);
  }
};

struct RankCommand : Command {
  std::string path, ring;
  void add_options(CLI::App* sub) override {
    sub->add_option("matrix,--matrix", path, "matrix file");
    sub->add_option("--ring", ring, "ring descriptor");
  }
  RingMatrix load() {
    if (path.empty()) throw UsageError("no matrix file given");
    json j = read_json_file(path);
    RingPtr R = merge_ring(ring, j.is_object() && j.contains("ring") ? &j["ring"] : nullptr);
    return matrix_from_json(R, j);
  }
  json run() override {
    auto A = load();
    json out{{"rank", rank(A)}};
    if (A.ring().is_chain()) {
      auto S = smith_form(A);
      json diag = json::array();
      for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i) diag.push_back(elem_to_json(A.ring(), S.D(i, i)));
      out["smith"] = diag;
    } else {
      // no Smith form over a product; report the rank of each CRT component
      out["component_ranks"] = component_ranks(A);
    }
    return out;
  }
  json verify(const json& result) override {
    auto A = load();
    std::size_t brute = brute_rank(A);
    return report({{"rank", field(result, "rank").get<std::size_t>() == brute}}, {{"brute_force_rank", brute}});
  }
};

struct MinRankCommand : Command {
  std::string path, ring, strategy = "ks";
  bool field_eqs = false, no_field_eqs = false, transpose = false;
  void add_options(CLI::App* sub) override {
    sub->add_option("instance,--instance", path, "instance file");
    sub->add_option("--ring", ring, "ring descriptor");
    sub->add_option("--strategy", strategy, "ks, sm-groebner or sm-linearization")
        ->check(CLI::IsMember({"ks", "sm-groebner", "sm-linearization"}));
    sub->add_flag("--field-equations", field_eqs, "always append F_m (default: when |R| <= 512)");
    sub->add_flag("--no-field-equations", no_field_eqs, "never append F_m");
    sub->add_flag("--transpose", transpose, "solve the transposed instance");
  }
  MinRankInstance load() {
    if (path.empty()) throw UsageError("no instance file given");
    json j = read_json_file(path);
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "ring" && it.key() != "r" && it.key() != "m0" && it.key() != "matrices")
        throw ParseError("unknown field '" + it.key() + "' in MinRank instance");
    RingPtr R = merge_ring(ring, j.contains("ring") ? &j["ring"] : nullptr);
    MinRankInstance inst{R, {}, field(j, "r").get<std::size_t>()};
    std::vector<RingMatrix> Ms;
    for (const auto& m : field(j, "matrices")) Ms.push_back(matrix_from_json(R, m));
    if (Ms.empty()) throw UsageError("the instance has no matrices");
    inst.matrices.push_back(j.contains("m0") ? matrix_from_json(R, j["m0"]) : RingMatrix(R, Ms[0].rows(), Ms[0].cols()));
    for (auto& M : Ms) inst.matrices.push_back(std::move(M));
    inst.validate();
    return transpose ? transpose_instance(inst) : inst;
  }
  json run() override {
    auto inst = load();
    MinRankOptions opts;
    if (field_eqs) opts.field_equations = true;
    if (no_field_eqs) opts.field_equations = false;
    json rows = json::array();
    for (const auto& x : solve_minrank(inst, parse_minrank_strategy(strategy), opts)) rows.push_back(vec_to_json(*inst.ring, x));
    return {{"solutions", rows}};
  }
  json verify(const json& result) override {
    auto inst = load();
    std::set<std::vector<Elem>> expected;
    for (auto& x : brute_minrank(inst)) expected.insert(x);
    std::set<std::vector<Elem>> got;
    for (const auto& row : field(result, "solutions")) got.insert(vec_from_json(*inst.ring, row));
    bool sound = std::includes(expected.begin(), expected.end(), got.begin(), got.end());
    return report({{"sound", sound}, {"complete", got == expected}}, {{"brute_force_count", expected.size()}});
  }
};

struct RankDecodeCommand : Command {
  std::string instance, extension, generator, received, strategy = "auto";
  std::optional<std::size_t> radius;
  void add_options(CLI::App* sub) override {
    sub->add_option("instance,--instance", instance, "file with extension, generator, received and radius");
    sub->add_option("--extension", extension, "extension file");
    sub->add_option("--generator", generator, "generator matrix file (rows over S)");
    sub->add_option("--received", received, "received word file");
    sub->add_option("--radius", radius, "rank radius r");
    sub->add_option("--strategy", strategy, "auto, linearization, sm-linearization, sm-groebner, groebner or minrank")
        ->check(CLI::IsMember({"auto", "linearization", "sm-linearization", "sm-groebner", "groebner", "minrank"}));
  }
  static json part(const json& combined, const char* key, const std::string& path) {
    if (!path.empty()) {
      json j = read_json_file(path);
      return j.is_object() && j.contains(key) ? j[key] : j;
    }
    if (combined.is_object() && combined.contains(key)) return combined[key];
    throw UsageError(std::string("missing ") + key + " (give --" + key + " or an instance file)");
  }
  RankDecodingInstance load() {
    json combined = instance.empty() ? json::object() : read_json_file(instance);
    if (!combined.is_object()) throw ParseError("instance must be a JSON object");
    for (auto it = combined.begin(); it != combined.end(); ++it)
      if (it.key() != "extension" && it.key() != "generator" && it.key() != "received" && it.key() != "radius")
        throw ParseError("unknown field '" + it.key() + "' in rank-decoding instance");
    RankDecodingInstance rd;
    rd.ext = extension_from_json(part(combined, "extension", extension));
    for (const auto& row : part(combined, "generator", generator)) {
      rd.G.emplace_back();
      for (const auto& e : row) rd.G.back().push_back(ext_elem_from_json(*rd.ext, e));
    }
    for (const auto& e : part(combined, "received", received)) rd.y.push_back(ext_elem_from_json(*rd.ext, e));
    if (radius)
      rd.r = *radius;
    else if (combined.contains("radius"))
      rd.r = combined["radius"].get<std::size_t>();
    else
      throw UsageError("missing radius (give --radius or a \"radius\" field)");
    rd.validate();
    return rd;
  }
  static json svec(const GaloisExtension& E, const std::vector<Elem>& v) {
    json out = json::array();
    for (Elem e : v) out.push_back(ext_elem_to_json(E, e));
    return out;
  }
  json run() override {
    auto rd = load();
    auto res = decode(rd, parse_decode_strategy(strategy));
    const auto& E = *rd.ext;
    const auto& first = res.solutions.front();
    json out{{"x", svec(E, first.x)},
             {"c", svec(E, first.c)},
             {"e", svec(E, first.e)},
             {"strategy_used", to_string(res.strategy_used)},
             {"verified", true}};
    if (res.solutions.size() > 1) {
      json all = json::array();
      for (const auto& d : res.solutions) all.push_back({{"x", svec(E, d.x)}, {"c", svec(E, d.c)}, {"e", svec(E, d.e)}});
      out["solutions"] = all;
    }
    return out;
  }
  json verify(const json& result) override {
    auto rd = load();
    const auto& E = *rd.ext;
    const Ring& S = E.ring();
    std::vector<json> entries;
    if (result.contains("solutions"))
      for (const auto& s : result["solutions"]) entries.push_back(s);
    else
      entries.push_back(result);
    bool consistent = true, within = true;
    std::set<std::vector<Elem>> xs;
    for (const auto& s : entries) {
      std::vector<Elem> x, c, e;
      for (const auto& v : field(s, "x")) x.push_back(ext_elem_from_json(E, v));
      for (const auto& v : field(s, "c")) c.push_back(ext_elem_from_json(E, v));
      for (const auto& v : field(s, "e")) e.push_back(ext_elem_from_json(E, v));
      if (x.size() != rd.k() || c.size() != rd.n() || e.size() != rd.n()) throw DomainError("result has wrong lengths");
      consistent = consistent && encode(rd, x) == c;
      for (std::size_t j = 0; j < rd.n(); ++j) consistent = consistent && S.add(c[j], e[j]) == rd.y[j];
      // rank through the Nakayama quotient, independent of the Smith form
      within = within && nakayama_rank(matrix_representation(E, e)) <= rd.r;
      xs.insert(x);
    }
    json extra = json::object();
    std::vector<std::pair<std::string, bool>> checks{{"codeword", consistent}, {"rank_bound", within}};
    // complete enumeration when affordable
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rd.k() && total <= OracleBudget::from_env().max_count; ++i) total *= S.size();
    if (total <= OracleBudget::from_env().max_count) {
      std::size_t count = 0;
      for (std::uint64_t t = 0; t < total; ++t) {
        std::vector<Elem> x(rd.k());
        std::uint64_t s = t;
        for (std::size_t i = rd.k(); i-- > 0;) {
          x[i] = Elem{s % S.size()};
          s /= S.size();
        }
        if (is_decoding(rd, x)) ++count;
      }
      extra["brute_force_count"] = count;
    }
    return report(checks, extra);
  }
};

std::unique_ptr<Command> make_command(const std::string& name) {
  if (name == "gb") return std::make_unique<GbCommand>();
  if (name == "solve") return std::make_unique<SolveCommand>();
  if (name == "solve-local") return std::make_unique<SolveLocalCommand>();
  if (name == "rank") return std::make_unique<RankCommand>();
  if (name == "minrank") return std::make_unique<MinRankCommand>();
  if (name == "rank-decode") return std::make_unique<RankDecodeCommand>();
  return nullptr;
}

const std::vector<std::pair<std::string, std::string>> kCommands{
    {"gb", "Groebner basis of a polynomial system"},
    {"solve", "all solutions of a system over a chain ring or a product of chain rings"},
    {"solve-local", "all solutions of a system over a finite local ring"},
    {"rank", "rank and Smith diagonal of a matrix"},
    {"minrank", "MinRank instance solver"},
    {"rank-decode", "rank-metric decoding over a Galois extension"}};

void print(std::ostream& out, const json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

int run_cli(std::vector<std::string> args, std::ostream& out, int depth = 0);

// {"command": "solve", "args": [...], "flags": {"ring": "zpk:5:2", ...}}
std::vector<std::string> job_to_args(const json& j) {
  if (!j.is_object()) throw UsageError("job file must hold a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "command" && it.key() != "args" && it.key() != "flags") throw UsageError("unknown field '" + it.key() + "' in job file");
  if (!j.contains("command") || !j["command"].is_string()) throw UsageError("job file needs a \"command\" string");
  std::vector<std::string> args;
  std::stringstream cmd(j["command"].get<std::string>());
  for (std::string w; cmd >> w;) args.push_back(w);
  if (j.contains("flags")) {
    for (auto it = j["flags"].begin(); it != j["flags"].end(); ++it) {
      if (it.value().is_boolean()) {
        if (it.value().get<bool>()) args.push_back("--" + it.key());
      } else {
        args.push_back("--" + it.key());
        args.push_back(it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
      }
    }
  }
  if (j.contains("args"))
    for (const auto& a : j["args"]) args.push_back(a.is_string() ? a.get<std::string>() : a.dump());
  return args;
}

int run_cli(std::vector<std::string> args, std::ostream& out, int depth) {
  CLI::App app{"Polynomial systems, MinRank and rank decoding over finite rings", "chainring"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON output");
  app.set_version_flag("--version", "chainring 0.1.0");

  std::vector<std::pair<CLI::App*, std::unique_ptr<Command>>> direct, checked;
  auto* verify_app = app.add_subcommand("verify", "re-check a result with brute-force oracles");
  verify_app->require_subcommand(1);
  std::string result_path;
  for (const auto& [name, help] : kCommands) {
    auto* sub = app.add_subcommand(name, help);
    auto cmd = make_command(name);
    cmd->add_options(sub);
    direct.emplace_back(sub, std::move(cmd));
    auto* vsub = verify_app->add_subcommand(name, help);
    auto vcmd = make_command(name);
    vcmd->add_options(vsub);
    vsub->add_option("--result", result_path, "result JSON to check ('-' reads stdin)")->required();
    checked.emplace_back(vsub, std::move(vcmd));
  }
  std::string job_path;
  auto* job = app.add_subcommand("job", "run a command described by a JSON job file");
  job->add_option("file", job_path, "job file")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    print(out, error_json("UsageError", e.what()), pretty);
    return 2;
  }

  try {
    if (job->parsed()) {
      if (depth > 0) throw UsageError("job files cannot start other jobs");
      auto inner = job_to_args(read_json_file(job_path));
      if (pretty) inner.insert(inner.begin(), "--pretty");
      return run_cli(inner, out, depth + 1);
    }
    for (auto& [sub, cmd] : direct)
      if (sub->parsed()) {
        print(out, cmd->run(), pretty);
        return 0;
      }
    for (auto& [sub, cmd] : checked)
      if (sub->parsed()) {
        json result = read_json_file(result_path);
        if (result.contains("error")) throw DomainError("the result file holds an error, nothing to verify");
        json rep = cmd->verify(result);
        print(out, rep, pretty);
        return rep["verified"].get<bool>() ? 0 : 1;
      }
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    print(out, error_json(e.kind(), e.what()), pretty);
    return 2;
  } catch (const Error& e) {
    print(out, error_json(e.kind(), e.what()), pretty);
    return 1;
  } catch (const json::exception& e) {
    print(out, error_json("ParseError", e.what()), pretty);
    return 1;
  } catch (const std::exception& e) {
    print(out, error_json("InternalError", e.what()), pretty);
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(std::move(args), std::cout);
}
