#include "cli/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mrb/error.hpp"

namespace mrb::cli {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

std::string at(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string at(const std::string& base, size_t i) { return base + "/" + std::to_string(i); }

Scalar scalar_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) bad(where, "expected a scalar string");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const InputError& e) {
    bad(where, e.what());
  } catch (const std::exception&) {
    bad(where, "malformed scalar '" + j.get<std::string>() + "'");
  }
}

int int_from(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

//! 1-based index on disk to 0-based.
int index_from(const json& j, int dim, const std::string& where) {
  const int i = int_from(j, where);
  if (i < 1 || i > dim) bad(where, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  return i - 1;
}

Matrix matrix_from(const json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    bad(where, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    const std::string rw = at(where, r);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      bad(rw, "expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) m(r, c) = scalar_from(row[c], at(rw, c));
  }
  return m;
}

Vec vector_from(const json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) bad(where, "expected " + std::to_string(n) + " entries");
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = scalar_from(j[i], at(where, i));
  return v;
}

//! Sparse target [[index, "coef"], ...].
Vec target_from(const json& j, int dim, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of [index, coefficient] pairs");
  Vec v(dim);
  std::set<int> seen;
  for (size_t t = 0; t < j.size(); ++t) {
    const std::string w = at(where, t);
    if (!j[t].is_array() || j[t].size() != 2) bad(w, "expected [index, coefficient]");
    const int c = index_from(j[t][0], dim, at(w, 0));
    if (!seen.insert(c).second) bad(w, "duplicate target index");
    v[c] = scalar_from(j[t][1], at(w, 1));
  }
  return v;
}

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  for (const auto& [k, _] : j.items())
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
      bad(at(where, k), "unknown member");
}

int arity(const std::string& kind) { return kind == "3lie" ? 3 : 2; }

//! Named ordering invariant of each kind.
void check_order(const std::string& kind, const std::vector<int>& idx, const std::string& where) {
  if (kind == "3lie") {
    if (!(idx[0] < idx[1] && idx[1] < idx[2])) bad(where, "invariant '3lie entries have i<j<k' violated");
  } else if (kind == "lie") {
    if (!(idx[0] < idx[1])) bad(where, "invariant 'lie entries have i<j' violated");
  } else if (kind == "commassoc") {
    if (!(idx[0] <= idx[1])) bad(where, "invariant 'commassoc entries have i<=j' violated");
  }
}

AlgebraFile parse_plain(const json& j, const std::string& where, const std::string& kind) {
  check_keys(j, where,
             {"schema", "kind", "field", "dim", "basis", "entries", "derivation", "functional", "operator", "weight"});
  AlgebraFile f;
  f.kind = kind;
  if (!j.contains("dim")) bad(where, "missing 'dim'");
  f.dim = int_from(j["dim"], at(where, "dim"));
  if (f.dim < 1) bad(at(where, "dim"), "dimension must be positive");

  if (j.contains("basis")) {
    const json& b = j["basis"];
    if (!b.is_array() || static_cast<int>(b.size()) != f.dim)
      bad(at(where, "basis"), "expected " + std::to_string(f.dim) + " names");
    for (size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_string()) bad(at(at(where, "basis"), i), "expected a string");
      f.basis.push_back(b[i].get<std::string>());
    }
  } else {
    for (int i = 1; i <= f.dim; ++i) f.basis.push_back("e" + std::to_string(i));
  }

  const std::string ew = at(where, "entries");
  const json empty = json::array();
  const json& es = j.contains("entries") ? j["entries"] : empty;
  if (!es.is_array()) bad(ew, "expected a list");
  std::set<std::vector<int>> seen;
  for (size_t t = 0; t < es.size(); ++t) {
    const std::string w = at(ew, t);
    if (!es[t].is_object()) bad(w, "expected an object");
    check_keys(es[t], w, {"indices", "target"});
    if (!es[t].contains("indices") || !es[t].contains("target")) bad(w, "entries need 'indices' and 'target'");
    const json& ix = es[t]["indices"];
    if (!ix.is_array() || static_cast<int>(ix.size()) != arity(kind))
      bad(at(w, "indices"), "expected " + std::to_string(arity(kind)) + " indices");
    AlgebraFile::Entry e;
    for (size_t a = 0; a < ix.size(); ++a) e.indices.push_back(index_from(ix[a], f.dim, at(at(w, "indices"), a)));
    check_order(kind, e.indices, at(w, "indices"));
    if (!seen.insert(e.indices).second) bad(w, "duplicate entry");
    e.target = target_from(es[t]["target"], f.dim, at(w, "target"));
    f.entries.push_back(std::move(e));
  }

  if (j.contains("derivation")) f.derivation = matrix_from(j["derivation"], f.dim, f.dim, at(where, "derivation"));
  if (j.contains("functional")) f.functional = vector_from(j["functional"], f.dim, at(where, "functional"));
  if (j.contains("operator")) f.op = matrix_from(j["operator"], f.dim, f.dim, at(where, "operator"));
  if (j.contains("weight")) f.weight = scalar_from(j["weight"], at(where, "weight"));
  return f;
}

std::vector<AlgebraFile::ActionEntry> actions_from(const json& j, int acting, int acted, const std::string& where) {
  std::vector<AlgebraFile::ActionEntry> out;
  if (!j.is_array()) bad(where, "expected a list");
  std::set<std::pair<int, int>> seen;
  for (size_t t = 0; t < j.size(); ++t) {
    const std::string w = at(where, t);
    if (!j[t].is_object()) bad(w, "expected an object");
    check_keys(j[t], w, {"indices", "matrix"});
    if (!j[t].contains("indices") || !j[t].contains("matrix")) bad(w, "actions need 'indices' and 'matrix'");
    const json& ix = j[t]["indices"];
    if (!ix.is_array() || ix.size() != 2) bad(at(w, "indices"), "expected 2 indices");
    AlgebraFile::ActionEntry e;
    e.a = index_from(ix[0], acting, at(at(w, "indices"), 0));
    e.b = index_from(ix[1], acting, at(at(w, "indices"), 1));
    if (e.a >= e.b) bad(at(w, "indices"), "invariant 'action entries have a<b' violated");
    if (!seen.insert({e.a, e.b}).second) bad(w, "duplicate entry");
    e.matrix = matrix_from(j[t]["matrix"], acted, acted, at(w, "matrix"));
    out.push_back(std::move(e));
  }
  return out;
}

AlgebraFile parse_root(const json& j) {
  if (!j.is_object()) bad("", "expected a JSON object");
  if (j.contains("schema") && j["schema"] != kAlgebraSchema)
    bad("/schema", std::string("expected '") + kAlgebraSchema + "'");
  if (!j.contains("kind") || !j["kind"].is_string()) bad("/kind", "missing or not a string");
  const std::string kind = j["kind"].get<std::string>();
  std::optional<long> field;
  if (j.contains("field")) {
    if (!j["field"].is_number_integer()) bad("/field", "expected an integer discriminant");
    field = j["field"].get<long>();
  }

  if (kind == "3lie" || kind == "lie" || kind == "prelie" || kind == "commassoc") {
    AlgebraFile f = parse_plain(j, "", kind);
    f.field = field;
    return f;
  }
  if (kind != "relative") bad("/kind", "unknown kind '" + kind + "'");

  check_keys(j, "", {"schema", "kind", "field", "g", "h", "rho", "zeta", "operator", "weight"});
  AlgebraFile f;
  f.kind = kind;
  f.field = field;
  for (const char* part : {"g", "h"}) {
    const std::string w = at(std::string(), part);
    if (!j.contains(part) || !j[part].is_object()) bad(w, "missing component");
    f.components.push_back(parse_plain(j[part], w, "3lie"));
  }
  const int g = f.components[0].dim, h = f.components[1].dim;
  const json empty = json::array();
  f.rho = actions_from(j.contains("rho") ? j["rho"] : empty, g, h, "/rho");
  f.zeta = actions_from(j.contains("zeta") ? j["zeta"] : empty, h, g, "/zeta");
  if (j.contains("operator")) f.op = matrix_from(j["operator"], g, h, "/operator");
  if (j.contains("weight")) f.weight = scalar_from(j["weight"], "/weight");
  f.dim = g + h;
  return f;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    const size_t end = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
}

json scalar_json(const Scalar& s) { return s.str(); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json plain_json(const AlgebraFile& f, bool root) {
  json j;
  if (root) {
    j["schema"] = kAlgebraSchema;
    j["kind"] = f.kind;
    if (f.field) j["field"] = *f.field;
  }
  j["dim"] = f.dim;
  j["basis"] = f.basis;
  std::vector<const AlgebraFile::Entry*> sorted;
  for (const auto& e : f.entries)
    if (!is_zero(e.target)) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->indices < b->indices; });
  json es = json::array();
  for (const auto* e : sorted) {
    json ix = json::array();
    for (int i : e->indices) ix.push_back(i + 1);
    json tg = json::array();
    for (int c = 0; c < f.dim; ++c)
      if (!e->target[c].is_zero()) tg.push_back(json::array({c + 1, scalar_json(e->target[c])}));
    es.push_back({{"indices", ix}, {"target", tg}});
  }
  j["entries"] = es;
  if (f.derivation) j["derivation"] = matrix_json(*f.derivation);
  if (f.functional) {
    json v = json::array();
    for (const auto& s : *f.functional) v.push_back(scalar_json(s));
    j["functional"] = v;
  }
  if (root) {
    if (f.op) j["operator"] = matrix_json(*f.op);
    if (f.weight) j["weight"] = scalar_json(*f.weight);
  }
  return j;
}

json actions_json(std::vector<AlgebraFile::ActionEntry> as) {
  std::sort(as.begin(), as.end(), [](const auto& x, const auto& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
  json out = json::array();
  for (const auto& e : as) {
    if (e.matrix.is_zero()) continue;
    out.push_back({{"indices", json::array({e.a + 1, e.b + 1})}, {"matrix", matrix_json(e.matrix)}});
  }
  return out;
}

Representation representation_from(const ThreeLieAlgebra& acting, int acted,
                                    const std::vector<AlgebraFile::ActionEntry>& es) {
  Representation r = zero_representation(acting, acted);
  WedgeBasis wb(acting.dim());
  for (const auto& e : es) r.rho[wb.index(e.a, e.b)] = e.matrix;
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Scalar scalar_arg(const std::string& s) {
  try {
    return Scalar::parse(s);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("malformed scalar '" + s + "'");
  }
}

}  // namespace

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<long> peek_field(const std::string& text) {
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("field") || !j["field"].is_number_integer())
    return std::nullopt;
  return j["field"].get<long>();
}

AlgebraFile parse_algebra(const std::string& text) { return parse_root(parse_json(text)); }

AlgebraFile read_algebra_file(const std::string& path) {
  try {
    return parse_algebra(read_text(path));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + msg);
  }
}

std::string serialize(const AlgebraFile& f) {
  json j;
  if (f.kind == "relative") {
    j["schema"] = kAlgebraSchema;
    j["kind"] = f.kind;
    if (f.field) j["field"] = *f.field;
    j["g"] = plain_json(f.components.at(0), false);
    j["h"] = plain_json(f.components.at(1), false);
    j["rho"] = actions_json(f.rho);
    j["zeta"] = actions_json(f.zeta);
    if (f.op) j["operator"] = matrix_json(*f.op);
    if (f.weight) j["weight"] = scalar_json(*f.weight);
  } else {
    j = plain_json(f, true);
  }
  return j.dump(2) + "\n";
}

ThreeLieAlgebra to_three_lie(const AlgebraFile& f) {
  if (f.kind != "3lie") throw InputError("expected a 3lie file, got '" + f.kind + "'");
  ThreeLieAlgebra A(f.dim);
  for (const auto& e : f.entries) A.set(e.indices[0], e.indices[1], e.indices[2], e.target);
  A.set_basis_names(f.basis);
  return A;
}

LieAlgebra to_lie(const AlgebraFile& f) {
  if (f.kind != "lie") throw InputError("expected a lie file, got '" + f.kind + "'");
  LieAlgebra L(f.dim);
  for (const auto& e : f.entries) L.set_bracket(e.indices[0], e.indices[1], e.target);
  return L;
}

PreLieAlgebra to_prelie(const AlgebraFile& f) {
  if (f.kind != "prelie") throw InputError("expected a prelie file, got '" + f.kind + "'");
  PreLieAlgebra P(f.dim);
  for (const auto& e : f.entries) P.set(e.indices[0], e.indices[1], e.target);
  return P;
}

CommAssocWithDerivation to_commassoc(const AlgebraFile& f) {
  if (f.kind != "commassoc") throw InputError("expected a commassoc file, got '" + f.kind + "'");
  if (!f.derivation) throw InputError("/derivation: required for commassoc files");
  CommAssocWithDerivation C{BilinearTable(f.dim), *f.derivation, f.functional.value_or(zeros(f.dim))};
  for (const auto& e : f.entries) {
    C.product.set(e.indices[0], e.indices[1], e.target);
    C.product.set(e.indices[1], e.indices[0], e.target);
  }
  return C;
}

RelativeMRBDatum to_relative(const AlgebraFile& f) {
  if (f.kind != "relative") throw InputError("expected a relative file, got '" + f.kind + "'");
  if (!f.op) throw InputError("/operator: required");
  if (!f.weight) throw InputError("/weight: required");
  RelativeMRBDatum d;
  d.g = to_three_lie(f.components[0]);
  d.h = to_three_lie(f.components[1]);
  d.rho = representation_from(d.g, d.h.dim(), f.rho);
  d.zeta = representation_from(d.h, d.g.dim(), f.zeta);
  d.T = *f.op;
  d.lambda = *f.weight;
  return d;
}

AlgebraFile from_three_lie(const ThreeLieAlgebra& A) {
  AlgebraFile f;
  f.kind = "3lie";
  if (discriminant() != 0) f.field = discriminant();
  f.dim = A.dim();
  f.basis = A.basis_names();
  if (f.basis.empty())
    for (int i = 1; i <= f.dim; ++i) f.basis.push_back("e" + std::to_string(i));
  for (const auto& t : A.terms()) f.entries.push_back({{t.i, t.j, t.k}, t.value});
  return f;
}

Matrix parse_matrix_arg(const std::string& text) {
  std::vector<Vec> rows;
  for (const auto& r : split(text, ';')) rows.push_back(parse_vector_arg(r));
  if (rows.empty()) throw InputError("empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw InputError("matrix rows have different lengths");
  return Matrix::from_rows(rows);
}

Vec parse_vector_arg(const std::string& text) {
  Vec v;
  for (const auto& s : split(text, ',')) v.push_back(scalar_arg(s));
  if (v.empty()) throw InputError("empty vector");
  return v;
}

std::vector<Scalar> parse_values_arg(const std::string& text) { return parse_vector_arg(text); }

}  // namespace mrb::cli
