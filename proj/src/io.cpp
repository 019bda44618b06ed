#include "perfcode/io.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "perfcode/errors.hpp"

namespace perfcode {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

template <class T>
T field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw MalformedInput(std::string("missing field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw MalformedInput(std::string("bad field \"") + name + "\"");
  }
}

PointPerm tau_from(const json& j, int r) {
  if (r < 0 || r > LinearMap::kMaxDim) throw MalformedInput("dimension out of range");
  auto perm = field<std::vector<std::uint64_t>>(j, "perm");
  std::vector<Point> images(perm.begin(), perm.end());
  for (auto v : perm)
    if (v >= (std::uint64_t{1} << r)) throw MalformedInput("image out of range");
  if (images.size() != (std::size_t{1} << r)) throw MalformedInput("permutation length differs from 2^r");
  return PointPerm(r, std::move(images));
}

std::string row_string(const LinearMap& m, int i) {
  std::string s(static_cast<std::size_t>(m.dim()), '0');
  for (int j = 0; j < m.dim(); ++j)
    if (m.entry(i, j)) s[j] = '1';
  return s;
}

json entry_json(const CatalogEntry& e) {
  json j;
  j["tau_id"] = e.tau_id;
  j["r"] = e.r;
  j["rank"] = e.rank;
  j["kernel_dim"] = e.kernel_dim;
  j["intersection_dim"] = e.intersection_dim;
  j["point_transitive"] = e.point_transitive;
  j["aut_order"] = e.aut_order ? json(*e.aut_order) : json(nullptr);
  j["class_id"] = e.class_id;
  j["non_mollard"] = e.non_mollard ? "true" : "unknown";
  j["provenance"] = e.provenance.to_string();
  return j;
}

CatalogEntry entry_from(const json& j) {
  CatalogEntry e;
  e.tau_id = field<std::string>(j, "tau_id");
  e.r = field<int>(j, "r");
  e.rank = field<int>(j, "rank");
  e.kernel_dim = field<int>(j, "kernel_dim");
  e.intersection_dim = field<int>(j, "intersection_dim");
  e.point_transitive = field<bool>(j, "point_transitive");
  if (!j.contains("aut_order")) throw MalformedInput("missing field \"aut_order\"");
  if (!j["aut_order"].is_null()) e.aut_order = field<std::uint64_t>(j, "aut_order");
  e.class_id = field<std::uint32_t>(j, "class_id");
  const auto nm = field<std::string>(j, "non_mollard");
  if (nm != "true" && nm != "unknown") throw MalformedInput("non_mollard must be true or unknown");
  e.non_mollard = nm == "true";
  e.provenance = Provenance::parse(field<std::string>(j, "provenance"));
  return e;
}

// A JSON array written one item per line: "[", items each followed by a comma except the last, "]".
template <class Fn>
void for_each_array_line(std::istream& in, Fn fn) {
  std::string line;
  bool opened = false;
  bool closed = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r,");
    const std::string body = line.substr(first, last - first + 1);
    if (closed) throw MalformedInput("data after the end of the array");
    if (!opened) {
      if (body == "[]") {
        opened = closed = true;
      } else if (body == "[") {
        opened = true;
      } else {
        throw MalformedInput("expected one array item per line");
      }
      continue;
    }
    if (body == "]") {
      closed = true;
      continue;
    }
    fn(parse(body));
  }
  if (!closed) throw MalformedInput("unterminated JSON array");
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw MalformedInput("expected true or false, got " + s);
}

std::uint64_t parse_uint(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw MalformedInput("expected a number, got " + s);
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw MalformedInput("number out of range: " + s);
  }
}

BitWord parse_bits(const std::string& s, std::size_t n) {
  if (s.size() != n) throw MalformedInput("row length differs from n");
  try {
    return BitWord::from_string(s);
  } catch (const std::exception&) {
    throw MalformedInput("row is not a 0/1 string: " + s);
  }
}

}  // namespace

std::string tau_json(const PointPerm& tau) {
  json j;
  j["r"] = tau.dim();
  j["perm"] = tau.images();
  return j.dump();
}

PointPerm parse_tau_json(const std::string& text) {
  const json j = parse(text);
  return tau_from(j, field<int>(j, "r"));
}

std::string group_json(const RegularSubgroup& g) {
  json mats = json::object();
  for (Point a = 0; a < g.order(); ++a) {
    json rows = json::array();
    for (int i = 0; i < g.r; ++i) rows.push_back(row_string(g.mats[a], i));
    mats[std::to_string(a)] = rows;
  }
  json j;
  j["r"] = g.r;
  j["mats"] = mats;
  return j.dump();
}

RegularSubgroup parse_group_json(const std::string& text) {
  const json j = parse(text);
  const int r = field<int>(j, "r");
  if (r < 1 || r > LinearMap::kMaxDim) throw MalformedInput("dimension out of range");
  const auto mats = field<std::map<std::string, std::vector<std::string>>>(j, "mats");
  const std::size_t n = std::size_t{1} << r;
  if (mats.size() != n) throw MalformedInput("group needs one matrix per point");
  RegularSubgroup g{r, std::vector<LinearMap>(n, LinearMap(r))};
  std::vector<bool> seen(n, false);
  for (const auto& [label, rows] : mats) {
    const auto a = parse_uint(label);
    if (a >= n || seen[a]) throw MalformedInput("bad point label " + label);
    seen[a] = true;
    if (rows.size() != static_cast<std::size_t>(r)) throw MalformedInput("matrix needs r rows");
    std::vector<Point> packed;
    for (const auto& row : rows) {
      if (row.size() != static_cast<std::size_t>(r) || row.find_first_not_of("01") != std::string::npos)
        throw MalformedInput("bad matrix row " + row);
      Point v = 0;
      for (int c = 0; c < r; ++c)
        if (row[c] == '1') v |= Point{1} << c;
      packed.push_back(v);
    }
    g.mats[a] = LinearMap::from_rows(r, packed);
  }
  return g;
}

void write_groups(std::ostream& out, const std::vector<RegularSubgroup>& groups) {
  out << "[\n";
  for (std::size_t i = 0; i < groups.size(); ++i) out << group_json(groups[i]) << (i + 1 < groups.size() ? ",\n" : "\n");
  out << "]\n";
}

void write_catalog(std::ostream& out, const TauCatalog& catalog) {
  out << "[\n";
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const auto& e = catalog.entries[i];
    json j;
    j["tau"] = e.tau.images();
    j["r"] = catalog.r;
    j["group_id"] = e.group_id;
    j["aut_id"] = e.aut_id;
    out << j.dump() << (i + 1 < catalog.entries.size() ? ",\n" : "\n");
  }
  out << "]\n";
}

std::vector<TaggedTau> read_catalog(std::istream& in) {
  std::vector<TaggedTau> out;
  for_each_array_line(in, [&](const json& j) {
    const int r = field<int>(j, "r");
    json perm;
    perm["perm"] = j.contains("tau") ? j["tau"] : json(nullptr);
    TaggedTau t{tau_from(perm, r), Provenance::user()};
    if (j.contains("group_id") || j.contains("aut_id"))
      t.provenance = Provenance::catalog(field<std::uint32_t>(j, "group_id"), field<std::uint32_t>(j, "aut_id"));
    out.push_back(std::move(t));
  });
  return out;
}

void write_entries_json(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  out << "[\n";
  for (std::size_t i = 0; i < entries.size(); ++i)
    out << entry_json(entries[i]).dump() << (i + 1 < entries.size() ? ",\n" : "\n");
  out << "]\n";
}

std::vector<CatalogEntry> read_entries_json(std::istream& in) {
  std::vector<CatalogEntry> out;
  for_each_array_line(in, [&](const json& j) { out.push_back(entry_from(j)); });
  return out;
}

namespace {
constexpr const char* kCsvHeader =
    "tau_id,r,rank,kernel_dim,intersection_dim,point_transitive,aut_order,class_id,non_mollard,provenance";
}

void write_entries_csv(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  out << kCsvHeader << '\n';
  for (const auto& e : entries) {
    out << e.tau_id << ',' << e.r << ',' << e.rank << ',' << e.kernel_dim << ',' << e.intersection_dim << ','
        << bool_text(e.point_transitive) << ',' << (e.aut_order ? std::to_string(*e.aut_order) : "") << ','
        << e.class_id << ',' << (e.non_mollard ? "true" : "unknown") << ',' << e.provenance.to_string() << '\n';
  }
}

std::vector<CatalogEntry> read_entries_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw MalformedInput("missing CSV header");
  std::vector<CatalogEntry> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (cells.size() != 10) throw MalformedInput("CSV row needs 10 cells");
    CatalogEntry e;
    e.tau_id = cells[0];
    e.r = static_cast<int>(parse_uint(cells[1]));
    e.rank = static_cast<int>(parse_uint(cells[2]));
    e.kernel_dim = static_cast<int>(parse_uint(cells[3]));
    e.intersection_dim = static_cast<int>(parse_uint(cells[4]));
    e.point_transitive = parse_bool(cells[5]);
    if (!cells[6].empty()) e.aut_order = parse_uint(cells[6]);
    e.class_id = static_cast<std::uint32_t>(parse_uint(cells[7]));
    if (cells[8] != "true" && cells[8] != "unknown") throw MalformedInput("non_mollard must be true or unknown");
    e.non_mollard = cells[8] == "true";
    e.provenance = Provenance::parse(cells[9]);
    out.push_back(std::move(e));
  }
  return out;
}

void write_code(std::ostream& out, const LinearCode& code) {
  const BitMatrix basis = row_basis(code.generators);
  out << "n=" << code.length << " k=" << basis.rows() << "\nG\n";
  for (const auto& row : basis.row_words()) out << row.to_string() << '\n';
}

void write_code(std::ostream& out, const CosetUnionCode& code) {
  const BitMatrix basis = row_basis(code.base.generators);
  out << "n=" << code.length() << " k=" << basis.rows() + std::bit_width(code.reps.size()) - 1 << "\nG\n";
  for (const auto& row : basis.row_words()) out << row.to_string() << '\n';
  out << "R\n";
  for (const auto& rep : code.reps) out << rep.to_string() << '\n';
}

void write_code(std::ostream& out, const ExplicitCode& code) {
  const std::size_t size = code.size();
  const int k = std::has_single_bit(size) ? std::countr_zero(size) : -1;
  out << "n=" << code.length() << " k=";
  if (k >= 0) {
    out << k;
  } else {
    out << "?";
  }
  out << '\n';
  for (const auto& w : code.words()) out << w.to_string() << '\n';
}

CodeFile read_code(std::istream& in) {
  CodeFile f;
  std::string header;
  if (!std::getline(in, header)) throw MalformedInput("empty code file");
  std::string k_text;
  {
    std::istringstream hs(header);
    std::string n_part;
    std::string k_part;
    if (!(hs >> n_part >> k_part) || n_part.rfind("n=", 0) != 0 || k_part.rfind("k=", 0) != 0)
      throw MalformedInput("code header must be n=<len> k=<log2 size>");
    f.length = parse_uint(n_part.substr(2));
    k_text = k_part.substr(2);
  }
  if (f.length == 0 || f.length > BitWord::kMaxBits) throw MalformedInput("code length out of range");
  f.log_size = k_text == "?" ? -1 : static_cast<int>(parse_uint(k_text));
  std::string line;
  int section = 0;  // 0 words, 1 generators, 2 representatives
  bool structured = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "G") {
      if (structured || !f.words.empty()) throw MalformedInput("unexpected G section");
      structured = true;
      section = 1;
      continue;
    }
    if (line == "R") {
      if (section != 1) throw MalformedInput("R section must follow G");
      section = 2;
      continue;
    }
    const BitWord w = parse_bits(line, f.length);
    if (section == 0) f.words.push_back(w);
    if (section == 1) f.generators.push_back(w);
    if (section == 2) f.representatives.push_back(w);
  }
  return f;
}

void write_sqs(std::ostream& out, const Sqs& q) {
  out << "v=" << q.order() << " b=" << q.size() << '\n';
  for (const auto& quad : q.quadruples()) out << quad[0] << ' ' << quad[1] << ' ' << quad[2] << ' ' << quad[3] << '\n';
}

Sqs read_sqs(std::istream& in, bool& declared_count_mismatch) {
  declared_count_mismatch = false;
  std::string header;
  if (!std::getline(in, header)) throw MalformedInput("empty SQS file");
  std::istringstream hs(header);
  std::string v_part;
  std::string b_part;
  if (!(hs >> v_part >> b_part) || v_part.rfind("v=", 0) != 0 || b_part.rfind("b=", 0) != 0)
    throw MalformedInput("SQS header must be v=<order> b=<count>");
  const auto v = parse_uint(v_part.substr(2));
  const auto b = parse_uint(b_part.substr(2));
  std::vector<Quadruple> quads;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    Quadruple q{};
    std::string token;
    for (auto& p : q) {
      if (!(ls >> token)) throw MalformedInput("quadruple line needs four points");
      const auto value = parse_uint(token);
      if (value >= v) throw MalformedInput("point out of range in: " + line);
      p = static_cast<Point>(value);
    }
    if (ls >> token) throw MalformedInput("quadruple line has extra tokens");
    quads.push_back(q);
  }
  if (quads.size() != b) declared_count_mismatch = true;
  return Sqs(v, std::move(quads));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace perfcode
