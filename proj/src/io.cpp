#include "qherglotz/io.hpp"

#include <fstream>
#include <sstream>

namespace qherglotz::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

std::size_t count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

const json& array(const json& j, const std::string& where, std::size_t expected) {
  if (!j.is_array()) fail(where, "expected an array");
  if (j.size() != expected) {
    std::ostringstream msg;
    msg << "expected " << expected << " entries, found " << j.size();
    fail(where, msg.str());
  }
  return j;
}

std::string at(const std::string& where, std::size_t index) { return where + "[" + std::to_string(index) + "]"; }
std::string dot(const std::string& where, const char* key) { return where + "." + key; }

// Line, column and text of the line containing byte offset `pos`.
std::string line_context(const std::string& text, std::size_t pos) {
  pos = std::min(pos, text.size());
  std::size_t line = 1;
  std::size_t start = 0;
  for (std::size_t k = 0; k < pos; ++k) {
    if (text[k] == '\n') {
      ++line;
      start = k + 1;
    }
  }
  std::size_t end = text.find('\n', start);
  if (end == std::string::npos) end = text.size();
  std::ostringstream out;
  out << line << ":" << (pos - start + 1) << "\n    " << text.substr(start, end - start);
  return out.str();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot open file for writing");
  out << text;
  if (!out) throw InputError(path + ": write failed");
}

json parse_document(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const std::size_t pos = e.byte == 0 ? 0 : e.byte - 1;
    std::string what = e.what();
    if (auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
    throw InputError(source + ":" + line_context(text, pos) + "\n" + what);
  }
}

json load_document(const std::string& path) { return parse_document(read_file(path), path); }

Quaternion quaternion_from_json(const json& j, const std::string& where) {
  const json& a = array(j, where, 4);
  return {number(a[0], at(where, 0)), number(a[1], at(where, 1)), number(a[2], at(where, 2)),
          number(a[3], at(where, 3))};
}

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

QMatrix qmatrix_from_json(const json& j, const std::string& where) {
  const std::size_t rows = count(field(j, "rows", where), dot(where, "rows"));
  const std::size_t cols = count(field(j, "cols", where), dot(where, "cols"));
  const std::string dw = dot(where, "data");
  const json& data = array(field(j, "data", where), dw, rows);
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = array(data[r], at(dw, r), cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = quaternion_from_json(row[c], at(at(dw, r), c));
  }
  return m;
}

json to_json(const QMatrix& m) {
  json data = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

CMatrix cmatrix_from_json(const json& j, std::size_t s, const std::string& where) {
  const json& rows = array(j, where, s);
  CMatrix m(s, s);
  for (std::size_t r = 0; r < s; ++r) {
    const json& row = array(rows[r], at(where, r), s);
    for (std::size_t c = 0; c < s; ++c) {
      const std::string w = at(at(where, r), c);
      const json& z = array(row[c], w, 2);
      m(r, c) = {number(z[0], at(w, 0)), number(z[1], at(w, 1))};
    }
  }
  return m;
}

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

HermitianSequence sequence_from_json(const json& j) {
  const std::size_t s = count(field(j, "s", "$"), "$.s");
  const std::size_t n = count(field(j, "N", "$"), "$.N");
  const json& values = array(field(j, "values", "$"), "$.values", n + 1);
  std::vector<QMatrix> r;
  r.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::string w = at("$.values", k);
    QMatrix m = qmatrix_from_json(values[k], w);
    if (m.rows() != s || m.cols() != s) fail(w, "expected an s x s block");
    r.push_back(std::move(m));
  }
  try {
    return HermitianSequence(std::move(r));
  } catch (const NotHermitian& e) {
    fail("$.values[0]", e.what());
  } catch (const ShapeError& e) {
    fail("$", e.what());
  }
}

json to_json(const HermitianSequence& seq) {
  json values = json::array();
  for (const auto& v : seq.nonnegative()) values.push_back(to_json(v));
  return {{"s", seq.block_size()}, {"N", seq.support()}, {"values", std::move(values)}};
}

DiscreteQPositiveMeasure measure_from_json(const json& j, const std::string& where) {
  DiscreteQPositiveMeasure nu;
  nu.s = count(field(j, "s", where), dot(where, "s"));
  if (nu.s == 0) fail(dot(where, "s"), "block size must be positive");
  const std::string aw = dot(where, "atoms");
  const json& atoms = field(j, "atoms", where);
  if (!atoms.is_array()) fail(aw, "expected an array");
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const std::string w = at(aw, k);
    MeasureAtom a;
    a.t = number(field(atoms[k], "t", w), dot(w, "t"));
    a.nu1 = cmatrix_from_json(field(atoms[k], "nu1", w), nu.s, dot(w, "nu1"));
    a.nu2 = cmatrix_from_json(field(atoms[k], "nu2", w), nu.s, dot(w, "nu2"));
    nu.atoms.push_back(std::move(a));
  }
  return nu;
}

json to_json(const DiscreteQPositiveMeasure& nu) {
  json atoms = json::array();
  for (const auto& a : nu.atoms) atoms.push_back({{"t", a.t}, {"nu1", to_json(a.nu1)}, {"nu2", to_json(a.nu2)}});
  return {{"s", nu.s}, {"atoms", std::move(atoms)}};
}

MixedMeasurePair pair_from_json(const json& j) {
  return {measure_from_json(field(j, "plus", "$"), "$.plus"), measure_from_json(field(j, "minus", "$"), "$.minus")};
}

json to_json(const MixedMeasurePair& pair) { return {{"plus", to_json(pair.plus)}, {"minus", to_json(pair.minus)}}; }

PontryaginRealization realization_from_json(const json& j) {
  const json& signs = field(j, "J", "$");
  if (!signs.is_array()) fail("$.J", "expected an array of +1/-1");
  std::vector<int> v;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    const double x = number(signs[k], at("$.J", k));
    if (x != 1.0 && x != -1.0) fail(at("$.J", k), "signature entries must be +1 or -1");
    v.push_back(x > 0 ? 1 : -1);
  }
  PontryaginRealization r{SignatureGram(std::move(v)), qmatrix_from_json(field(j, "U", "$"), "$.U"),
                          qmatrix_from_json(field(j, "C", "$"), "$.C")};
  const std::size_t d = r.J.dimension();
  if (r.U.rows() != d || r.U.cols() != d) fail("$.U", "expected a d x d matrix with d = len(J)");
  if (r.C.rows() != d || r.C.cols() == 0) fail("$.C", "expected a d x s matrix with d = len(J)");
  return r;
}

json to_json(const PontryaginRealization& r) {
  return {{"J", r.J.signs()}, {"U", to_json(r.U)}, {"C", to_json(r.C)}};
}

SliceMeasure slice_measure_from_json(const json& j) {
  SliceMeasure m;
  try {
    m.I = ImaginaryUnit::from_quaternion(quaternion_from_json(field(j, "I", "$"), "$.I"));
    m.J = ImaginaryUnit::from_quaternion(quaternion_from_json(field(j, "J", "$"), "$.J"));
  } catch (const FrameError& e) {
    fail("$", e.what());
  }
  m.imag0F = number(field(j, "imag0F", "$"), "$.imag0F");
  m.imag0G = number(field(j, "imag0G", "$"), "$.imag0G");
  const json& atoms = field(j, "atoms", "$");
  if (!atoms.is_array()) fail("$.atoms", "expected an array");
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const std::string w = at("$.atoms", k);
    m.atoms.push_back({number(field(atoms[k], "t", w), dot(w, "t")), number(field(atoms[k], "mu1", w), dot(w, "mu1")),
                       number(field(atoms[k], "mu2", w), dot(w, "mu2"))});
  }
  return m;
}

json to_json(const SliceMeasure& m) {
  json atoms = json::array();
  for (const auto& a : m.atoms) atoms.push_back({{"t", a.t}, {"mu1", a.mu1}, {"mu2", a.mu2}});
  return {{"I", to_json(m.I.value())}, {"J", to_json(m.J.value())}, {"imag0F", m.imag0F},
          {"imag0G", m.imag0G}, {"atoms", std::move(atoms)}};
}

}  // namespace qherglotz::io
