#include "quiver_cones/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "quiver_cones/cone.hpp"
#include "quiver_cones/io.hpp"
#include "quiver_cones/reduce.hpp"
#include "quiver_cones/schofield.hpp"
#include "quiver_cones/zoo.hpp"

namespace qcones::cli {

namespace {

struct Options {
  std::string file;
  std::string a, b, alpha, beta, sigma, coords_values, reps, method;
  std::vector<std::string> involutions;
  bool coords = false;
  bool dedup = false;
  bool drop_zero = false;
  std::string family;
  std::optional<int> n, k;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

QuiverBundle load(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return io::parse_quiver_file(buf.str());
}

const Involution* find_involution(const QuiverBundle& b, const Options& o) {
  if (o.involutions.empty()) return nullptr;
  if (o.involutions.size() > 1) throw UsageError("this command takes a single --involution");
  return &b.involution(o.involutions.front());
}

std::string header(const Quiver& q, const std::vector<std::size_t>& indices, const char* label) {
  std::string s = std::string("# ") + label + " ";
  for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + q.vertex_id(indices[i]);
  return s;
}

std::vector<std::size_t> all_vertices(const Quiver& q) {
  std::vector<std::size_t> v(q.vertex_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// Weight from --sigma, or from --coords through the orbit basis of `inv`.
Weight read_weight(const QuiverBundle& b, const Options& o, const Involution* inv) {
  if (!o.coords_values.empty()) {
    if (!o.sigma.empty()) throw UsageError("give either --sigma or --coords, not both");
    if (!inv) throw UsageError("--coords requires --involution");
    OrbitBasis basis(b.quiver, *inv, io::parse_id_list(o.reps));
    return basis.from_coords(io::parse_int_list(o.coords_values));
  }
  return io::parse_weight_literal(b.quiver, o.sigma);
}

int run(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "zoo") {
    auto need = [&](const std::optional<int>& v, const char* flag) {
      if (!v) throw UsageError(std::string("zoo ") + o.family + " requires " + flag);
      return *v;
    };
    QuiverBundle b = [&] {
      if (o.family == "line") return zoo::make_line(need(o.n, "--n"));
      if (o.family == "kronecker") return zoo::make_kronecker(need(o.n, "--n"));
      if (o.family == "sun") return zoo::make_sun(need(o.k, "--k"), o.n.value_or(1));
      if (o.family == "d5hat") return zoo::make_d5hat();
      throw UsageError("unknown family '" + o.family + "' (line, kronecker, sun, d5hat)");
    }();
    out << io::serialize_quiver_file(b);
    return kExitOk;
  }

  QuiverBundle bundle = load(o.file);
  const Quiver& q = bundle.quiver;

  if (cmd == "validate") {
    out << "ok\t" << q.name() << '\t' << q.vertex_count() << " vertices\t" << q.arrow_count() << " arrows";
    for (const auto& inv : bundle.involutions) out << "\tinvolution " << inv.name();
    out << '\n';
    return kExitOk;
  }

  ExtTable table(q);
  const Involution* inv = cmd == "counts" ? nullptr : find_involution(bundle, o);

  if (cmd == "euler" || cmd == "ext" || cmd == "hom") {
    DimVector a = io::parse_dim_literal(q, o.a);
    DimVector b = io::parse_dim_literal(q, o.b);
    std::int64_t v = cmd == "euler" ? euler_form(q, a, b) : cmd == "ext" ? table.ext(a, b) : table.hom(a, b);
    out << v << '\n';
    return kExitOk;
  }

  DimVector alpha = io::parse_dim_literal(q, o.alpha);

  if (cmd == "subdim") {
    if (!o.beta.empty()) {
      out << (table.is_generic_subdim(io::parse_dim_literal(q, o.beta), alpha) ? "true" : "false") << '\n';
      return kExitOk;
    }
    out << header(q, all_vertices(q), "vertices") << '\n';
    for (const auto& s : table.generic_subdims(alpha)) out << io::format_values(s.entries()) << '\n';
    return kExitOk;
  }

  if (cmd == "disc") {
    auto [d, witness] = table.disc_witness(alpha, read_weight(bundle, o, inv));
    out << d << '\t' << io::format_values(witness.entries()) << '\n';
    return kExitOk;
  }

  if (cmd == "member") {
    Method m = parse_method(o.method);
    Weight s = read_weight(bundle, o, inv);
    auto r = SemiInvariantCone(table, alpha).member(m, s, inv);
    if (r.member) {
      out << "member\n";
      return kExitOk;
    }
    out << "not-member\t";
    if (r.weight_on_alpha)
      out << "sigma(alpha)=" << *r.weight_on_alpha << '\n';
    else
      out << io::format_values(r.witness->entries()) << '\n';
    return kExitNotMember;
  }

  if (cmd == "counts") {
    SemiInvariantCone cone(table, alpha);
    std::ostringstream line;
    line << io::format_values(alpha.entries()) << '\t' << cone.normals(Method::Dw)->rows() << '\t'
        << cone.normals(Method::Inductive)->rows();
    for (const auto& name : o.involutions) line << '\t' << cone.normals(Method::AntiInv, &bundle.involution(name))->rows();
    out << line.str() << '\n';
    return kExitOk;
  }

  if (cmd == "inequalities" || cmd == "reduce") {
    Method m = parse_method(o.method);
    bool reduce = cmd == "reduce";
    if (o.coords && m != Method::AntiInv) throw UsageError("--coords requires --method antiinv");
    InequalityOptions opts;
    opts.dedup = o.dedup || reduce;
    opts.drop_zero = o.drop_zero || reduce;
    opts.representatives = io::parse_id_list(o.reps);
    InequalitySystem sys = inequalities(table, alpha, m, inv, opts);
    std::size_t before = sys.normals.size();
    if (reduce) sys = irredundant_core(sys);

    auto rows = sys.rows();
    if (sys.coordinate_space) {
      out << header(q, sys.coordinate_space->representatives(), "coords") << '\n';
      std::sort(rows.begin(), rows.end());
    } else {
      out << header(q, all_vertices(q), "vertices") << '\n';
    }
    if (reduce) out << "# kept " << rows.size() << " of " << before << '\n';
    for (const auto& r : rows) out << io::format_values(r) << '\n';
    return kExitOk;
  }

  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-invariant weight cones of acyclic quivers", "quiver-cones"};
  app.require_subcommand(1);
  Options o;

  auto file = [&](CLI::App* s) { s->add_option("file", o.file, "quiver file ('-' for stdin)")->required(); };
  auto pair = [&](CLI::App* s) {
    s->add_option("--a", o.a, "first dimension vector, e.g. x1=1,x2=0")->required();
    s->add_option("--b", o.b, "second dimension vector")->required();
  };
  auto alpha = [&](CLI::App* s) { s->add_option("--alpha", o.alpha, "dimension vector")->required(); };
  auto involution = [&](CLI::App* s) { s->add_option("--involution", o.involutions, "involution name"); };
  auto weight = [&](CLI::App* s) {
    s->add_option("--sigma", o.sigma, "weight, e.g. x1=1,x2=-1");
    s->add_option("--coords", o.coords_values, "anti-symmetric weight by orbit coordinates");
    s->add_option("--reps", o.reps, "orbit representatives, e.g. x4,x5,x6");
  };

  auto* validate = app.add_subcommand("validate", "check a quiver file and its involutions");
  file(validate);
  for (const char* name : {"euler", "ext", "hom"}) {
    std::string what = std::string(name) == "euler" ? "Euler form" : std::string("generic ") + name;
    auto* s = app.add_subcommand(name, what + " of two dimension vectors");
    file(s);
    pair(s);
  }
  auto* subdim = app.add_subcommand("subdim", "generic subdimensions of alpha, or test one with --beta");
  file(subdim);
  alpha(subdim);
  subdim->add_option("--beta", o.beta, "candidate subdimension");
  auto* disc = app.add_subcommand("disc", "discrepancy max_{b -> alpha} sigma(b)");
  file(disc);
  alpha(disc);
  weight(disc);
  involution(disc);
  auto* member = app.add_subcommand("member", "test sigma in Sigma(Q, alpha)");
  file(member);
  alpha(member);
  weight(member);
  involution(member);
  member->add_option("--method", o.method, "dw | inductive | antiinv")->required();
  for (const char* name : {"inequalities", "reduce"}) {
    auto* s = app.add_subcommand(name, std::string(name) == "reduce" ? "irredundant core of an inequality system"
                                                                      : "enumerate an inequality system");
    file(s);
    alpha(s);
    involution(s);
    s->add_option("--method", o.method, "dw | inductive | antiinv")->required();
    s->add_option("--reps", o.reps, "orbit representatives, e.g. x4,x5,x6");
    if (std::string(name) == "inequalities") {
      s->add_flag("--coords", o.coords, "print rows in orbit coordinates (antiinv)");
      s->add_flag("--dedup", o.dedup, "normalize coordinate rows and drop repeats");
      s->add_flag("--drop-zero", o.drop_zero, "drop zero rows");
    }
  }
  auto* cnt = app.add_subcommand("counts", "TSV line alpha, n1, n2 and one n3 per --involution");
  file(cnt);
  alpha(cnt);
  involution(cnt);
  auto* zoo_cmd = app.add_subcommand("zoo", "print a built-in quiver family as a quiver file");
  zoo_cmd->add_option("family", o.family, "line | kronecker | sun | d5hat")->required();
  zoo_cmd->add_option("--n", o.n, "size parameter");
  zoo_cmd->add_option("--k", o.k, "Sun quiver half-ring size");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o, out);
  } catch (const QuiverError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace qcones::cli
