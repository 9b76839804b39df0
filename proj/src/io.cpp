#include "kzl/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace kzl::io {

namespace {

q::Q scalar(const json& v) {
  if (v.is_number_integer()) return q::Q(long(v.get<long long>()));
  if (v.is_string()) return q::parse(v.get<std::string>());
  throw FormatError("scalar must be an integer or a \"num/den\" string");
}

std::string scalar_str(const q::Q& x) { return q::str(x); }

std::string scalar_str_fp(const Field& F, u32 c) { return std::to_string(F.to_signed(c)) + "/1"; }

int get_dim(const json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer()) throw FormatError("missing integer \"dim\"");
  int n = j["dim"].get<int>();
  if (n <= 0) throw FormatError("\"dim\" must be positive");
  return n;
}

void check_index(long long i, int n, const char* what) {
  if (i < 0 || i >= n) throw FormatError(std::string("index out of range in ") + what);
}

std::vector<int> read_grading(const json& j, int n) {
  std::vector<int> g;
  if (!j.contains("grading") || j["grading"].is_null()) return g;
  g = j["grading"].get<std::vector<int>>();
  if (int(g.size()) != n) throw FormatError("\"grading\" has the wrong length");
  return g;
}

std::vector<IVec> read_xgrading(const json& j, int n) {
  std::vector<IVec> g;
  if (!j.contains("x_grading") || j["x_grading"].is_null()) return g;
  for (const auto& w : j["x_grading"]) {
    if (w.is_number_integer())
      g.push_back(IVec{w.get<int>()});
    else
      g.push_back(w.get<IVec>());
  }
  if (int(g.size()) != n) throw FormatError("\"x_grading\" has the wrong length");
  return g;
}

std::vector<std::string> read_labels(const json& j, int n) {
  std::vector<std::string> l;
  if (j.contains("labels")) l = j["labels"].get<std::vector<std::string>>();
  if (l.empty())
    for (int i = 0; i < n; ++i) l.push_back("b" + std::to_string(i));
  if (int(l.size()) != n) throw FormatError("\"labels\" has the wrong length");
  return l;
}

}  // namespace

FieldSpec parse_field(const std::string& s) {
  static const std::regex fp_re("F([0-9]+)"), zl_re("Zloc\\(([0-9]+)\\)");
  std::smatch m;
  FieldSpec f;
  if (s == "Q") {
    f.kind = FieldKind::rationals;
    return f;
  }
  if (std::regex_match(s, m, fp_re))
    f.kind = FieldKind::prime;
  else if (std::regex_match(s, m, zl_re))
    f.kind = FieldKind::plocal;
  else
    throw FormatError("unknown field \"" + s + "\"");
  f.p = unsigned(std::stoul(m[1].str()));
  if (!fp::is_prime(f.p)) throw FormatError("field characteristic is not prime");
  return f;
}

std::string field_string(const FieldSpec& f) {
  switch (f.kind) {
    case FieldKind::prime: return "F" + std::to_string(f.p);
    case FieldKind::rationals: return "Q";
    case FieldKind::plocal: return "Zloc(" + std::to_string(f.p) + ")";
  }
  return "?";
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(1) << "\n";
}

Vec find_identity(const Algebra& A) {
  int n = A.n;
  // sum_i e_i b_i b_j = b_j and sum_i e_i b_j b_i = b_j
  Matrix M(2 * n * n, n);
  Vec rhs(size_t(2) * n * n, 0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      for (const auto& t : A.prod(i, j)) M(j * n + t.k, i) = A.F.add(M(j * n + t.k, i), t.c);
      for (const auto& t : A.prod(j, i)) M(n * n + j * n + t.k, i) = A.F.add(M(n * n + j * n + t.k, i), t.c);
    }
    rhs[size_t(j) * n + j] = 1;
    rhs[size_t(n) * n + size_t(j) * n + j] = 1;
  }
  auto e = fp::solve(A.F, M, rhs);
  if (!e) throw FormatError("algebra has no identity");
  return *e;
}

Algebra algebra_from_json(const json& j) {
  int n = get_dim(j);
  FieldSpec f = parse_field(j.value("field", std::string("F2")));
  if (f.kind != FieldKind::prime) throw FormatError("expected an algebra over F_p, got " + field_string(f));
  Field F(f.p);
  Algebra A;
  A.F = F;
  A.n = n;
  A.labels = read_labels(j, n);
  A.sc.assign(size_t(n) * n, {});
  std::vector<Vec> dense(size_t(n) * n);
  for (const auto& e : j.at("sc")) {
    if (!e.is_array() || e.size() != 4) throw FormatError("sc entries are [i, j, k, c]");
    long long a = e[0].get<long long>(), b = e[1].get<long long>(), k = e[2].get<long long>();
    check_index(a, n, "sc");
    check_index(b, n, "sc");
    check_index(k, n, "sc");
    q::Q c = scalar(e[3]);
    if (!q::is_plocal(c, f.p)) throw FormatError("denominator divisible by p");
    auto& v = dense[size_t(a) * n + b];
    if (v.empty()) v.assign(n, 0);
    v[k] = F.add(v[k], q::reduce_mod(c, F));
  }
  for (size_t s = 0; s < dense.size(); ++s)
    for (int k = 0; k < int(dense[s].size()); ++k)
      if (dense[s][k]) A.sc[s].push_back({k, dense[s][k]});
  if (j.contains("identity")) {
    A.one.assign(n, 0);
    const auto& id = j["identity"];
    if (int(id.size()) != n) throw FormatError("\"identity\" has the wrong length");
    for (int k = 0; k < n; ++k) A.one[k] = q::reduce_mod(scalar(id[k]), F);
  } else {
    A.one = find_identity(A);
  }
  A.grading = read_grading(j, n);
  A.xgrading = read_xgrading(j, n);
  try {
    A.check();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return A;
}

json algebra_to_json(const Algebra& A) {
  json j;
  j["dim"] = A.n;
  j["field"] = "F" + std::to_string(A.F.p);
  j["labels"] = A.labels;
  json sc = json::array();
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b)
      for (const auto& t : A.prod(a, b)) sc.push_back({a, b, t.k, scalar_str_fp(A.F, t.c)});
  j["sc"] = sc;
  json id = json::array();
  for (u32 c : A.one) id.push_back(scalar_str_fp(A.F, c));
  j["identity"] = id;
  if (A.graded()) j["grading"] = A.grading;
  if (A.xgraded()) j["x_grading"] = A.xgrading;
  return j;
}

LatticeAlgebra lattice_from_json(const json& j, unsigned p_override) {
  int n = get_dim(j);
  FieldSpec f = parse_field(j.value("field", std::string("Q")));
  unsigned p = 0;
  if (f.kind == FieldKind::plocal)
    p = f.p;
  else if (f.kind == FieldKind::rationals)
    p = p_override;
  else
    throw FormatError("expected a lattice over Zloc(p) or Q, got " + field_string(f));
  if (p_override && p_override != p) throw FormatError("--p disagrees with the field of the file");
  if (!p || !fp::is_prime(p)) throw FormatError("a prime p is needed for the lattice");
  LatticeAlgebra A;
  A.p = p;
  A.n = n;
  A.labels = read_labels(j, n);
  A.sc.assign(size_t(n) * n, {});
  std::vector<q::QVec> dense(size_t(n) * n);
  for (const auto& e : j.at("sc")) {
    if (!e.is_array() || e.size() != 4) throw FormatError("sc entries are [i, j, k, c]");
    long long a = e[0].get<long long>(), b = e[1].get<long long>(), k = e[2].get<long long>();
    check_index(a, n, "sc");
    check_index(b, n, "sc");
    check_index(k, n, "sc");
    auto& v = dense[size_t(a) * n + b];
    if (v.empty()) v.assign(n, 0);
    v[k] += scalar(e[3]);
  }
  for (size_t s = 0; s < dense.size(); ++s)
    for (int k = 0; k < int(dense[s].size()); ++k)
      if (sgn(dense[s][k]) != 0) A.sc[s].push_back({k, dense[s][k]});
  if (!j.contains("identity")) throw FormatError("lattice algebras need an explicit \"identity\"");
  const auto& id = j["identity"];
  if (int(id.size()) != n) throw FormatError("\"identity\" has the wrong length");
  A.one.assign(n, 0);
  for (int k = 0; k < n; ++k) A.one[k] = scalar(id[k]);
  A.xgrading = read_xgrading(j, n);
  try {
    A.check();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return A;
}

json lattice_to_json(const LatticeAlgebra& A) {
  json j;
  j["dim"] = A.n;
  j["field"] = "Zloc(" + std::to_string(A.p) + ")";
  j["labels"] = A.labels;
  json sc = json::array();
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b)
      for (const auto& t : A.prod(a, b)) sc.push_back({a, b, t.k, scalar_str(t.c)});
  j["sc"] = sc;
  json id = json::array();
  for (const auto& c : A.one) id.push_back(scalar_str(c));
  j["identity"] = id;
  if (A.xgraded()) j["x_grading"] = A.xgrading;
  return j;
}

Module module_from_json(const json& j, const AlgebraPtr& A) {
  int d = get_dim(j);
  if (j.contains("field")) {
    FieldSpec f = parse_field(j["field"].get<std::string>());
    if (f.kind != FieldKind::prime || f.p != A->F.p) throw FormatError("module field differs from the algebra's");
  }
  Module M;
  M.A = A;
  M.dim = d;
  M.act.assign(A->n, Matrix(d, d));
  for (const auto& e : j.at("action")) {
    if (!e.is_array() || e.size() != 4) throw FormatError("action entries are [a, row, col, c]");
    long long a = e[0].get<long long>(), r = e[1].get<long long>(), c = e[2].get<long long>();
    check_index(a, A->n, "action");
    check_index(r, d, "action");
    check_index(c, d, "action");
    q::Q x = scalar(e[3]);
    if (!q::is_plocal(x, A->F.p)) throw FormatError("denominator divisible by p");
    M.act[a](int(r), int(c)) = A->F.add(M.act[a](int(r), int(c)), q::reduce_mod(x, A->F));
  }
  M.grading = read_grading(j, d);
  M.xgrading = read_xgrading(j, d);
  try {
    M.check();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return M;
}

json module_to_json(const Module& M) {
  json j;
  j["dim"] = M.dim;
  j["field"] = "F" + std::to_string(M.F().p);
  json act = json::array();
  for (int a = 0; a < int(M.act.size()); ++a)
    for (int r = 0; r < M.dim; ++r)
      for (int c = 0; c < M.dim; ++c)
        if (M.act[a](r, c)) act.push_back({a, r, c, scalar_str_fp(M.F(), M.act[a](r, c))});
  j["action"] = act;
  if (M.graded()) j["grading"] = M.grading;
  if (M.xgraded()) j["x_grading"] = M.xgrading;
  return j;
}

json ext_table_to_json(const ExtTable& T) {
  json j;
  j["degree_bound"] = T.degree_bound;
  json e = json::array();
  for (const auto& [key, val] : T.entries)
    if (val) e.push_back({{"n", key.first}, {"shift", key.second}, {"dim", val}});
  j["entries"] = e;
  json rows = json::array();
  for (int n = 0; n <= T.degree_bound; ++n) rows.push_back(T.row_sum(n));
  j["ungraded"] = rows;
  return j;
}

json verdict_to_json(const Verdict& v, const std::vector<std::string>& labels) {
  auto name = [&](int i) -> json {
    if (i < 0) return "M";
    if (i < int(labels.size())) return labels[i];
    return i;
  };
  json j;
  j["property"] = v.property;
  j["holds"] = v.holds;
  j["degree_bound"] = v.degree_bound;
  if (v.cx)
    j["counterexample"] = {{"n", v.cx->n}, {"r", v.cx->r}, {"lambda", name(v.cx->lambda)},
                           {"mu", name(v.cx->mu)}, {"dim", v.cx->value}};
  else
    j["counterexample"] = nullptr;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace kzl::io
