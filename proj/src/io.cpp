#include "valab/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "valab/error.hpp"

namespace valab {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }
[[noreturn]] void shape_fail(const std::string& what) { throw Error(ErrorKind::DimensionMismatch, what); }

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) parse_fail(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::size_t read_count(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    parse_fail(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

Rational read_rational(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  parse_fail(where + ": expected a rational string \"p/q\"");
}

const Json& read_array(const Json& j, std::size_t len, const std::string& where) {
  if (!j.is_array()) parse_fail(where + ": expected an array");
  if (j.size() != len)
    shape_fail(where + ": expected " + std::to_string(len) + " entries, found " + std::to_string(j.size()));
  return j;
}

Vector read_vector(const Json& j, std::size_t len, const std::string& where) {
  read_array(j, len, where);
  Vector v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) v.push_back(read_rational(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Matrix read_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  read_array(j, rows, where);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector row = read_vector(j[r], cols, where + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Tensor3 read_tensor(const Json& j, std::size_t d0, std::size_t d1, std::size_t d2, const std::string& where) {
  read_array(j, d0, where);
  Tensor3 t(d0, d1, d2);
  for (std::size_t i = 0; i < d0; ++i) {
    Matrix slab = read_matrix(j[i], d1, d2, where + "[" + std::to_string(i) + "]");
    for (std::size_t a = 0; a < d1; ++a)
      for (std::size_t b = 0; b < d2; ++b) t(i, a, b) = slab(a, b);
  }
  return t;
}

std::vector<std::string> read_names(const Json& j, std::size_t len, const std::string& where) {
  read_array(j, len, where);
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) parse_fail(where + ": names must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Json write_vector(const Vector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json write_matrix(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(write_vector(m.row(r)));
  return a;
}

Json write_tensor(const Tensor3& t) {
  Json a = Json::array();
  for (std::size_t i = 0; i < t.dim0(); ++i) {
    Json slab = Json::array();
    for (std::size_t j = 0; j < t.dim1(); ++j) slab.push_back(write_vector(t.slice(i, j)));
    a.push_back(slab);
  }
  return a;
}

AlgebroidFile from_json(const Json& root) {
  if (!root.is_object()) parse_fail("top level must be an object");
  const Json& ver = require(root, "format_version", "file");
  if (!ver.is_string() || ver.get<std::string>() != kFormatVersion)
    parse_fail("unsupported format_version (expected \"1\")");
  AlgebroidFile f;
  if (root.contains("id")) {
    if (!root["id"].is_string()) parse_fail("id must be a string");
    f.id = root["id"].get<std::string>();
  }

  const Json& alg = require(root, "algebra", "file");
  const std::size_t n = read_count(require(alg, "dim", "algebra"), "algebra.dim");
  std::vector<std::string> a_names;
  if (alg.contains("names")) a_names = read_names(alg["names"], n, "algebra.names");
  Vector unit = read_vector(require(alg, "unit", "algebra"), n, "algebra.unit");
  Tensor3 mul = read_tensor(require(alg, "mul", "algebra"), n, n, n, "algebra.mul");
  CommAlgebra algebra(std::move(mul), std::move(unit), std::move(a_names));

  if (root.contains("algebroid")) {
    const Json& ab = root["algebroid"];
    const std::size_t m = read_count(require(ab, "b_dim", "algebroid"), "algebroid.b_dim");
    AlgebroidData d;
    d.algebra = algebra;
    if (ab.contains("names")) {
      d.b_names = read_names(ab["names"], m, "algebroid.names");
    } else {
      for (std::size_t i = 0; i < m; ++i) d.b_names.push_back("b" + std::to_string(i));
    }
    d.partial = read_matrix(require(ab, "partial", "algebroid"), n, m, "algebroid.partial");
    d.action = read_tensor(require(ab, "action", "algebroid"), n, m, m, "algebroid.action");
    d.bracket = read_tensor(require(ab, "bracket", "algebroid"), m, m, m, "algebroid.bracket");
    d.anchor = read_tensor(require(ab, "anchor", "algebroid"), m, n, n, "algebroid.anchor");
    d.pairing = read_tensor(require(ab, "pairing", "algebroid"), m, m, n, "algebroid.pairing");
    f.algebroid = VertexAlgebroid(std::move(d));
    f.has_algebroid = true;
  } else {
    f.algebroid = VertexAlgebroid::trivial(algebra);
  }
  const std::size_t m = f.algebroid.b_dim();

  if (root.contains("grading")) {
    const Json& gj = root["grading"];
    Grading g;
    read_array(require(gj, "degrees", "grading"), n, "grading.degrees");
    for (const auto& x : gj["degrees"]) {
      if (!x.is_number_integer()) parse_fail("grading.degrees must be integers");
      g.degree.push_back(x.get<int>());
    }
    const Json& top = require(gj, "top", "grading");
    if (!top.is_number_integer()) parse_fail("grading.top must be an integer");
    g.top = top.get<int>();
    f.grading = std::move(g);
  }
  if (root.contains("gorenstein")) {
    const Json& gj = root["gorenstein"];
    if (!gj.is_object()) parse_fail("gorenstein must be an object");
    if (gj.contains("t")) f.t = read_vector(gj["t"], n, "gorenstein.t");
    if (gj.contains("B")) f.form = read_matrix(gj["B"], n, n, "gorenstein.B");
  }
  if (root.contains("l1")) {
    // One row per B basis element: L(1)(b_j) in A.
    Matrix rows = read_matrix(root["l1"], m, n, "l1");
    f.l1 = LOneMap{rows.transpose()};
  }
  if (root.contains("semisimple")) {
    const Json& sj = root["semisimple"];
    Sl2Data s;
    s.e = read_vector(require(sj, "e", "semisimple"), m, "semisimple.e");
    s.f = read_vector(require(sj, "f", "semisimple"), m, "semisimple.f");
    s.h = read_vector(require(sj, "h", "semisimple"), m, "semisimple.h");
    const Json& blocks = require(sj, "blocks", "semisimple");
    if (!blocks.is_array()) parse_fail("semisimple.blocks must be an array");
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      const std::string where = "semisimple.blocks[" + std::to_string(j) + "]";
      read_array(blocks[j], 2, where);
      s.blocks.push_back({read_vector(blocks[j][0], n, where + "[0]"), read_vector(blocks[j][1], n, where + "[1]")});
    }
    f.semisimple = std::move(s);
  }
  return f;
}

Json to_json(const AlgebroidFile& f) {
  const CommAlgebra& a = f.algebra();
  Json root;
  root["format_version"] = std::string(kFormatVersion);
  root["id"] = f.id;
  Json alg;
  alg["dim"] = a.dim();
  alg["names"] = a.names();
  alg["unit"] = write_vector(a.unit());
  alg["mul"] = write_tensor(a.mul());
  root["algebra"] = alg;
  if (f.has_algebroid) {
    const AlgebroidData& d = f.algebroid.data();
    Json ab;
    ab["b_dim"] = d.b_names.size();
    ab["names"] = d.b_names;
    ab["partial"] = write_matrix(d.partial);
    ab["action"] = write_tensor(d.action);
    ab["bracket"] = write_tensor(d.bracket);
    ab["anchor"] = write_tensor(d.anchor);
    ab["pairing"] = write_tensor(d.pairing);
    root["algebroid"] = ab;
  }
  if (f.grading) {
    Json g;
    g["degrees"] = f.grading->degree;
    g["top"] = f.grading->top;
    root["grading"] = g;
  }
  if (f.t || f.form) {
    Json g = Json::object();
    if (f.t) g["t"] = write_vector(*f.t);
    if (f.form) g["B"] = write_matrix(*f.form);
    root["gorenstein"] = g;
  }
  if (f.l1) root["l1"] = write_matrix(f.l1->matrix.transpose());
  if (f.semisimple) {
    Json s;
    s["e"] = write_vector(f.semisimple->e);
    s["f"] = write_vector(f.semisimple->f);
    s["h"] = write_vector(f.semisimple->h);
    Json blocks = Json::array();
    for (const auto& b : f.semisimple->blocks) blocks.push_back(Json::array({write_vector(b[0]), write_vector(b[1])}));
    s["blocks"] = blocks;
    root["semisimple"] = s;
  }
  return root;
}

std::size_t count_status(const CheckReport& r, Status s) {
  std::size_t c = 0;
  for (const auto& e : r.entries()) c += e.status == s;
  return c;
}

}  // namespace

AlgebroidFile parse_file(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  try {
    return from_json(root);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("malformed file: ") + e.what());
  }
}

AlgebroidFile load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  AlgebroidFile f = parse_file(ss.str());
  if (f.id.empty()) f.id = path.stem().string();
  return f;
}

std::string serialize(const AlgebroidFile& file) { return to_json(file).dump(2) + "\n"; }

void save_file(const AlgebroidFile& file, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << serialize(file);
}

std::string report_json(const std::string& command, const std::string& fixture_id, const CheckReport& report) {
  Json root;
  root["tool_version"] = std::string(kToolVersion);
  root["command"] = command;
  root["fixture"] = fixture_id;
  Json entries = Json::array();
  for (const auto& e : report.entries()) {
    Json j;
    j["check_id"] = e.id;
    j["status"] = std::string(to_string(e.status));
    j["anchor"] = e.anchor;
    Json values = Json::object();
    for (const auto& [k, v] : e.values) values[k] = v;
    j["values"] = values;
    Json wit = Json::array();
    for (const auto& w : e.witnesses) wit.push_back(Json{{"tuple", w.tuple}, {"residual", w.residual}});
    j["witnesses"] = wit;
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(j);
  }
  root["entries"] = entries;
  Json summary;
  for (Status s : {Status::Pass, Status::Fail, Status::Skipped, Status::Indeterminate})
    summary[std::string(to_string(s))] = count_status(report, s);
  root["summary"] = summary;
  return root.dump(2) + "\n";
}

std::string report_text(const std::string& command, const std::string& fixture_id, const CheckReport& report) {
  std::ostringstream out;
  out << "valab " << command << " " << fixture_id << "\n";
  for (const auto& e : report.entries()) {
    out << "  " << to_string(e.status) << "  " << e.id << "  [" << e.anchor << "]\n";
    for (const auto& [k, v] : e.values) out << "      " << k << " = " << v << "\n";
    for (const auto& w : e.witnesses) out << "      witness " << w.tuple << " -> " << w.residual << "\n";
    if (!e.note.empty()) out << "      note: " << e.note << "\n";
  }
  out << "summary: " << count_status(report, Status::Pass) << " pass, " << count_status(report, Status::Fail)
      << " fail, " << count_status(report, Status::Skipped) << " skipped, "
      << count_status(report, Status::Indeterminate) << " indeterminate\n";
  return out.str();
}

}  // namespace valab
