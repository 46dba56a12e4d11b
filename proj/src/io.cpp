#include "quiver_cones/io.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace qcones::io {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto p = s.find(sep);
    out.push_back(trim(s.substr(0, p)));
    if (p == std::string_view::npos) break;
    s.remove_prefix(p + 1);
  }
  return out;
}

bool valid_id(const std::string& id) { return !id.empty() && id.find_first_of("#=,") == std::string::npos; }

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw QuiverError(ErrorKind::SyntaxError, "not an integer: '" + std::string(s) + "'");
  return v;
}

struct PendingInvolution {
  InvolutionDesc desc;
  int line;
};

}  // namespace

QuiverBundle parse_quiver_file(std::string_view text) {
  QuiverDesc qd;
  bool have_header = false;
  std::set<std::string> vertex_ids;
  std::set<std::string> arrow_ids;
  std::vector<PendingInvolution> invs;

  auto link = [&](std::map<std::string, std::string>& m, const std::string& x, const std::string& y, int line) {
    for (auto [from, to] : {std::pair{x, y}, std::pair{y, x}}) {
      auto it = m.find(from);
      if (it != m.end() && it->second != to)
        throw QuiverError(ErrorKind::NotSelfInverse, "'" + from + "' already paired with '" + it->second + "'", line);
    }
    m[x] = y;
    m[y] = x;
  };

  int line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    auto hash = raw.find('#');
    auto tokens = split_ws(raw.substr(0, hash));
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0];
    auto args = std::span<const std::string>(tokens).subspan(1);
    auto expect = [&](std::size_t n) {
      if (args.size() != n)
        throw QuiverError(ErrorKind::SyntaxError, "'" + kw + "' expects " + std::to_string(n) + " argument(s)", line_no);
    };
    for (const auto& a : args)
      if (!valid_id(a)) throw QuiverError(ErrorKind::SyntaxError, "invalid identifier '" + a + "'", line_no);

    if (kw == "quiver") {
      expect(1);
      if (have_header) throw QuiverError(ErrorKind::SyntaxError, "second 'quiver' header", line_no);
      have_header = true;
      qd.name = args[0];
      continue;
    }
    if (!have_header) throw QuiverError(ErrorKind::SyntaxError, "file must start with 'quiver <name>'", line_no);

    if (kw == "vertices" || kw == "arrow") {
      if (!invs.empty())
        throw QuiverError(ErrorKind::SyntaxError, "'" + kw + "' after an involution block", line_no);
      if (kw == "vertices") {
        if (args.empty()) throw QuiverError(ErrorKind::SyntaxError, "'vertices' expects at least one id", line_no);
        for (const auto& v : args) {
          if (!vertex_ids.insert(v).second || arrow_ids.contains(v))
            throw QuiverError(ErrorKind::DuplicateId, "id '" + v + "' declared twice", line_no);
          qd.vertices.push_back(v);
        }
      } else {
        expect(3);
        if (!arrow_ids.insert(args[0]).second || vertex_ids.contains(args[0]))
          throw QuiverError(ErrorKind::DuplicateId, "id '" + args[0] + "' declared twice", line_no);
        for (std::size_t k = 1; k < 3; ++k)
          if (!vertex_ids.contains(args[k]))
            throw QuiverError(ErrorKind::DanglingEndpoint,
                              "arrow '" + args[0] + "' uses undeclared vertex '" + args[k] + "'", line_no);
        qd.arrows.push_back({args[0], args[1], args[2]});
      }
    } else if (kw == "involution") {
      expect(1);
      for (const auto& p : invs)
        if (p.desc.name == args[0])
          throw QuiverError(ErrorKind::DuplicateId, "involution '" + args[0] + "' declared twice", line_no);
      invs.push_back({InvolutionDesc{args[0], {}, {}}, line_no});
    } else if (kw == "vmap" || kw == "amap") {
      expect(2);
      if (invs.empty()) throw QuiverError(ErrorKind::SyntaxError, "'" + kw + "' outside an involution block", line_no);
      const auto& known = kw == "vmap" ? vertex_ids : arrow_ids;
      for (const auto& a : args)
        if (!known.contains(a))
          throw QuiverError(ErrorKind::BadParameter, "unknown " + std::string(kw == "vmap" ? "vertex" : "arrow") + " '" + a + "'",
                            line_no);
      auto& desc = invs.back().desc;
      link(kw == "vmap" ? desc.vmap : desc.amap, args[0], args[1], line_no);
    } else {
      throw QuiverError(ErrorKind::SyntaxError, "unknown directive '" + kw + "'", line_no);
    }
  }
  if (!have_header) throw QuiverError(ErrorKind::SyntaxError, "missing 'quiver <name>' header", line_no);

  Quiver q(std::move(qd));
  std::vector<Involution> out;
  for (auto& p : invs) {
    try {
      out.emplace_back(q, p.desc);
    } catch (const QuiverError& e) {
      throw QuiverError(e.kind(), e.message(), p.line);
    }
  }
  return {std::move(q), std::move(out)};
}

std::string serialize_quiver_file(const Quiver& q, std::span<const Involution> involutions) {
  std::ostringstream os;
  os << "quiver " << q.name() << "\n";
  os << "vertices";
  for (const auto& v : q.vertex_ids()) os << ' ' << v;
  os << "\n";
  for (const auto& a : q.arrows()) os << "arrow " << a.id << ' ' << q.vertex_id(a.tail) << ' ' << q.vertex_id(a.head) << "\n";
  for (const auto& inv : involutions) {
    os << "\ninvolution " << inv.name() << "\n";
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
      if (inv.vertex_image(v) > v) os << "vmap " << q.vertex_id(v) << ' ' << q.vertex_id(inv.vertex_image(v)) << "\n";
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
      if (inv.arrow_image(a) > a) os << "amap " << q.arrow(a).id << ' ' << q.arrow(inv.arrow_image(a)).id << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::int64_t> parse_literal(const Quiver& q, std::string_view text) {
  std::vector<std::int64_t> e(q.vertex_count(), 0);
  text = trim(text);
  if (text.empty()) return e;
  std::vector<bool> seen(q.vertex_count(), false);
  for (auto item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw QuiverError(ErrorKind::SyntaxError, "expected vertex=value, got '" + std::string(item) + "'");
    std::string id(trim(item.substr(0, eq)));
    auto v = q.vertex_index(id);
    if (!v) throw QuiverError(ErrorKind::BadParameter, "unknown vertex '" + id + "'");
    if (seen[*v]) throw QuiverError(ErrorKind::DuplicateId, "vertex '" + id + "' assigned twice");
    seen[*v] = true;
    e[*v] = parse_int(trim(item.substr(eq + 1)));
  }
  return e;
}

}  // namespace

DimVector parse_dim_literal(const Quiver& q, std::string_view text) { return DimVector(parse_literal(q, text)); }

Weight parse_weight_literal(const Quiver& q, std::string_view text) { return Weight(parse_literal(q, text)); }

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  if (trim(text).empty()) return out;
  for (auto item : split(text, ',')) out.push_back(parse_int(item));
  return out;
}

std::vector<std::string> parse_id_list(std::string_view text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  for (auto item : split(text, ',')) out.emplace_back(item);
  return out;
}

std::string format_values(std::span<const std::int64_t> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string format_literal(const Quiver& q, std::span<const std::int64_t> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += q.vertex_id(i) + "=" + std::to_string(v[i]);
  }
  return s;
}

}  // namespace qcones::io
