// Batch front end. Exit codes: 0 success, 1 internal invariant violation,
// 2 usage or domain error, 3 resource cap, 4 scan found a simple whose
// transfer is not effective up to sign.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ljmod/affine_kl.hpp"
#include "ljmod/arith.hpp"
#include "ljmod/brauer.hpp"
#include "ljmod/bridge.hpp"
#include "ljmod/errors.hpp"
#include "ljmod/groth.hpp"
#include "ljmod/io.hpp"
#include "ljmod/quiver_orbits.hpp"
#include "ljmod/segcomb.hpp"

namespace {

using namespace ljmod;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitNotEffective = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == ',' || c == '[' || c == ']') ? ' ' : c;
  std::istringstream is(cleaned);
  std::vector<int> out;
  int v = 0;
  while (is >> v) out.push_back(v);
  if (!is.eof()) throw DomainError("cannot parse integer list '" + text + "'");
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::int64_t>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

nlohmann::ordered_json matrix_json(const groth::IntMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::int64_t> row(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) row[j] = m(i, j);
    rows.push_back(row);
  }
  return rows;
}

struct Options {
  int d = 0;
  int epsilon = 0;
  int dmax = 0;
  int e = 0;
  long long t = 1;
  long long q = 0;
  long long l = 0;
  long long n = 0;
  int max_length = affine_kl::kDefaultMaxLength;
  std::string format = "json";
  std::string source = "closed-form";
  std::string u, w, cache, kind, matrix, dims;
  bool inverse = false;
  bool all = false;
};

int cmd_block(const Options& o) {
  const int eps = o.epsilon ? o.epsilon : o.d;
  auto basis = groth::BlockBasis::superunipotent(o.d, eps);
  std::cout << io::block_listing(o.d, eps, basis->elements()) << '\n';
  return kExitOk;
}

int cmd_decomp(const Options& o) {
  const auto src = groth::parse_matrix_source(o.source);
  const auto dm = src == groth::MatrixSource::ClosedForm ? groth::closed_form_matrix(o.d)
                                                         : bridge::kl_decomposition_matrix(o.d);
  const auto inv = groth::invert_unitriangular(dm.m);
  if (o.format == "csv") {
    std::cout << groth::to_csv(*dm.basis, o.inverse ? inv : dm.m);
    return kExitOk;
  }
  nlohmann::ordered_json j;
  j["d"] = o.d;
  j["epsilon"] = o.d;
  j["source"] = o.source;
  j["ids"] = nlohmann::ordered_json::array();
  for (const auto& a : dm.basis->elements()) j["ids"].push_back(a.id());
  j["matrix"] = matrix_json(dm.m);
  j["inverse"] = matrix_json(inv);
  std::cout << j.dump() << '\n';
  return kExitOk;
}

int cmd_scan(const Options& o) {
  if (o.dmax < 1) throw DomainError("--dmax must be positive");
  if (o.dmax > groth::kMaxClosedFormDegree)
    throw ResourceError("--dmax exceeds the ceiling of " + std::to_string(groth::kMaxClosedFormDegree));
  const auto src = groth::parse_matrix_source(o.source);
  bool all = true;
  std::vector<groth::SignReport> reports;
  for (int d = 1; d <= o.dmax; ++d) {
    reports.push_back(groth::scan_block(d, src));
    all = all && reports.back().all_effective;
  }
  if (o.format == "csv") {
    std::cout << "d,epsilon,id,segments,coeffs,effective,sign\n";
    for (const auto& r : reports)
      for (const auto& s : r.simples)
        std::cout << r.d << ',' << r.epsilon << ',' << csv_quote(s.id) << ',' << s.segment_count << ','
                  << csv_quote(join(s.coeffs, ' ')) << ',' << (s.effective ? "true" : "false") << ','
                  << groth::to_string(s.sign) << '\n';
  } else {
    nlohmann::ordered_json j;
    j["dmax"] = o.dmax;
    j["source"] = o.source;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(nlohmann::ordered_json::parse(r.to_json()));
    j["all_effective"] = all;
    std::cout << j.dump() << '\n';
  }
  return all ? kExitOk : kExitNotEffective;
}

int cmd_kl(const Options& o) {
  const auto u = affine_kl::AffinePermutation::parse(o.u);
  const auto w = affine_kl::AffinePermutation::parse(o.w);
  if (u.rank() != o.d || w.rank() != o.d) throw DomainError("windows must have length --d");
  affine_kl::KLContext ctx(o.d, o.max_length);
  if (!o.cache.empty()) ctx.load(o.cache);
  const auto p = ctx.kl_polynomial(u, w);
  if (!o.cache.empty()) ctx.save(o.cache);
  std::cout << p.to_string() << '\n';
  return kExitOk;
}

int cmd_brauer_trace(const Options& o) {
  const FieldMatrix rho = io::field_matrix_from_json(read_file(o.matrix));
  const Cyclotomic t = brauer::brauer_trace(rho);
  const brauer::RootIdentification ident(rho.field(), t.conductor());
  std::cout << io::brauer_trace_json(t, *rho.field(), brauer::reduce_mod_l(t, ident)) << '\n';
  return kExitOk;
}

int cmd_arith_ainv(const Options& o) {
  std::cout << arith::a_invariant(o.d, o.t, o.q) << '\n';
  return kExitOk;
}

int cmd_arith_screen(const Options& o) {
  const arith::BlockParams block(o.d, o.q, o.l);
  std::cout << arith::to_string(arith::effectivity_screen(block, arith::parse_rep_kind(o.kind))) << '\n';
  return kExitOk;
}

int cmd_arith_order(const Options& o) {
  std::cout << arith::mult_order(o.q, o.l) << '\n';
  return kExitOk;
}

int cmd_arith_lpart(const Options& o) {
  std::cout << arith::l_part(arith::BigInt(o.n), o.l) << '\n';
  return kExitOk;
}

int cmd_orbits(const Options& o) {
  const auto poset = quiver::orbit_poset(o.e, parse_int_list(o.dims));
  std::cout << (o.format == "dot" ? poset.to_dot() : poset.to_json() + "\n");
  return kExitOk;
}

int cmd_bridge(const Options& o) {
  if (!o.all) {
    std::cout << bridge::shipped_bridge(o.d).to_json() << '\n';
    return kExitOk;
  }
  const int eps = o.epsilon ? o.epsilon : o.d;
  if (o.d % eps) throw DomainError("epsilon must divide d");
  const auto poset = quiver::orbit_poset(eps, std::vector<int>(static_cast<std::size_t>(eps), o.d / eps));
  const auto found = bridge::find_bridges(poset, eps);
  nlohmann::ordered_json j;
  j["d"] = o.d;
  j["epsilon"] = eps;
  j["count"] = found.size();
  j["bridges"] = nlohmann::ordered_json::array();
  for (const auto& b : found) j["bridges"].push_back(nlohmann::ordered_json::parse(b.to_json()));
  std::cout << j.dump() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ljmod: exact combinatorics for the mod-l Langlands-Jacquet transfer of GL_d"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;

  auto* block = app.add_subcommand("block", "List the superunipotent block basis");
  block->add_option("--d", o.d, "degree")->required()->check(CLI::PositiveNumber);
  block->add_option("--epsilon", o.epsilon, "order of q mod l (default d)")->check(CLI::PositiveNumber);
  block->callback([&] { action = cmd_block; });

  auto* decomp = app.add_subcommand("decomp", "Decomposition matrix of the epsilon = d block");
  decomp->add_option("--d", o.d, "degree")->required()->check(CLI::PositiveNumber);
  decomp->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  decomp->add_option("--source", o.source, "closed-form or kl")->check(CLI::IsMember({"closed-form", "kl"}));
  decomp->add_flag("--inverse", o.inverse, "CSV: emit the inverse matrix");
  decomp->callback([&] { action = cmd_decomp; });

  auto* scan = app.add_subcommand("scan", "Effectivity up to sign for every epsilon = d block, d <= dmax");
  scan->add_option("--dmax", o.dmax, "largest degree")->required();
  scan->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--source", o.source, "closed-form or kl")->check(CLI::IsMember({"closed-form", "kl"}));
  scan->callback([&] { action = cmd_scan; });

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{u,w}");
  kl->add_option("--d", o.d, "rank")->required()->check(CLI::PositiveNumber);
  kl->add_option("--u", o.u, "window of u")->required();
  kl->add_option("--w", o.w, "window of w")->required();
  kl->add_option("--cache", o.cache, "memo cache file");
  kl->add_option("--max-length", o.max_length, "length cap")->check(CLI::NonNegativeNumber);
  kl->callback([&] { action = cmd_kl; });

  auto* brauer_cmd = app.add_subcommand("brauer", "Brauer traces");
  brauer_cmd->require_subcommand(1);
  auto* trace = brauer_cmd->add_subcommand("trace", "Brauer trace of a matrix");
  trace->add_option("--matrix", o.matrix, "matrix JSON file")->required();
  trace->callback([&] { action = cmd_brauer_trace; });

  auto* arith_cmd = app.add_subcommand("arith", "Congruence invariants and screens");
  arith_cmd->require_subcommand(1);
  auto* ainv = arith_cmd->add_subcommand("ainv", "(d/t)(q^t - 1)");
  ainv->add_option("--d", o.d)->required();
  ainv->add_option("--t", o.t)->required();
  ainv->add_option("--q", o.q)->required();
  ainv->callback([&] { action = cmd_arith_ainv; });
  auto* screen = arith_cmd->add_subcommand("screen", "Effectivity screen");
  screen->add_option("--d", o.d)->required();
  screen->add_option("--q", o.q)->required();
  screen->add_option("--l", o.l)->required();
  screen->add_option("--kind", o.kind, "non-elliptic|liftable|non-self-twist|nu-stable|other")->required();
  screen->callback([&] { action = cmd_arith_screen; });
  auto* order = arith_cmd->add_subcommand("order", "Multiplicative order of q mod l");
  order->add_option("--q", o.q)->required();
  order->add_option("--l", o.l)->required();
  order->callback([&] { action = cmd_arith_order; });
  auto* lpart = arith_cmd->add_subcommand("lpart", "Largest power of l dividing n");
  lpart->add_option("--n", o.n)->required();
  lpart->add_option("--l", o.l)->required();
  lpart->callback([&] { action = cmd_arith_lpart; });

  auto* orbits = app.add_subcommand("orbits", "Closure poset of graded nilpotent orbits");
  orbits->add_option("--e", o.e, "period")->required()->check(CLI::PositiveNumber);
  orbits->add_option("--dims", o.dims, "dimension vector, e.g. 1,1")->required();
  orbits->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  orbits->callback([&] { action = cmd_orbits; });

  auto* bridge_cmd = app.add_subcommand("bridge", "Orbit to double-coset bridge");
  bridge_cmd->add_option("--d", o.d, "degree")->required()->check(CLI::PositiveNumber);
  bridge_cmd->add_option("--epsilon", o.epsilon, "order of q mod l (default d)")->check(CLI::PositiveNumber);
  bridge_cmd->add_flag("--all", o.all, "list every order isomorphism found");
  bridge_cmd->callback([&] { action = cmd_bridge; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action(o);
  } catch (const ResourceError& e) {
    std::cerr << "resource: " << e.what() << '\n';
    return kExitResource;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << '\n';
    return kExitInternal;
  }
}
