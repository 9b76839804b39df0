// Command-line entry point. Exit codes: 0 success / property holds,
// 1 property fails, 2 usage or input error.
#include <omp.h>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kzl/acceptance.hpp"
#include "kzl/alcove.hpp"
#include "kzl/forced.hpp"
#include "kzl/instances.hpp"
#include "kzl/io.hpp"
#include "kzl/koszul.hpp"
#include "kzl/sl2lab.hpp"
#include "kzl/structure.hpp"

using namespace kzl;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Weight parse_weight(const std::string& s) {
  Weight w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      w.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad weight \"" + s + "\"");
    }
  }
  if (w.empty()) throw UsageError("empty weight");
  return w;
}

std::vector<int> parse_list(const std::string& s) { return s.empty() ? std::vector<int>{} : parse_weight(s); }

void emit(const json& j) { std::cout << j.dump(1) << std::endl; }

AlgebraPtr load_algebra(const std::string& path) {
  return std::make_shared<const Algebra>(io::algebra_from_json(io::read_file(path)));
}

// smallest prime not dividing any denominator of the file
unsigned free_prime(const json& j) {
  std::vector<mpz_class> dens;
  for (const auto& e : j.at("sc")) {
    if (e.size() == 4 && e[3].is_string()) dens.push_back(q::parse(e[3].get<std::string>()).get_den());
  }
  for (unsigned p = 2;; ++p) {
    if (!fp::is_prime(p)) continue;
    bool ok = true;
    for (const auto& d : dens) ok = ok && mpz_divisible_ui_p(d.get_mpz_t(), p) == 0;
    if (ok) return p;
  }
}

struct QHOptions {
  std::string idem;  // basis indices
  std::string order = "chain";
  std::vector<std::string> labels;
};

GradedQH build_qh(const AlgebraPtr& A, const QHOptions& o) {
  std::vector<Vec> idem;
  if (!o.idem.empty()) {
    for (int k : parse_list(o.idem)) {
      if (k < 0 || k >= A->n) throw UsageError("idempotent index out of range");
      idem.push_back(A->unit(k));
    }
  } else {
    idem = idempotent_representatives(*A, Grades{true, false});
  }
  int k = int(idem.size());
  std::vector<std::vector<char>> leq;
  if (o.order == "chain")
    leq = chain_order(k);
  else if (o.order == "discrete")
    leq = discrete_order(k);
  else
    throw UsageError("--order must be chain or discrete");
  std::vector<std::string> labels = o.labels;
  if (labels.empty())
    for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  if (int(labels.size()) != k) throw UsageError("one label per idempotent");
  return graded_qh(A, idem, leq, labels);
}

int verdict_exit(const Verdict& v, const std::vector<std::string>& labels, bool as_json) {
  if (as_json) {
    emit(io::verdict_to_json(v, labels));
  } else {
    std::cout << v.property << (v.holds ? " holds" : " fails") << " up to degree " << v.degree_bound;
    if (v.cx) std::cout << ", counterexample (n, r) = (" << v.cx->n << ", " << v.cx->r << ")";
    if (!v.note.empty()) std::cout << " [" << v.note << "]";
    std::cout << std::endl;
  }
  return v.holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kzl: Koszul and parity experiments for finite-dimensional algebras"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "OpenMP threads (results do not depend on it)")->check(CLI::NonNegativeNumber);
  std::function<int()> action;

  // alcove
  auto* alc = app.add_subcommand("alcove", "alcove geometry of W_p");
  alc->require_subcommand(1);
  std::string type = "A1", weight, theta = "", order = "dominance";
  int p = 5;
  std::vector<std::string> gens;
  bool report = false;
  auto common = [&](CLI::App* c, bool need_weight) {
    c->add_option("--type", type, "root system (A1, A2, B2, G2, ...)");
    c->add_option("-p", p, "prime")->required();
    if (need_weight) c->add_option("--weight", weight, "weight, comma separated")->required();
  };
  auto* alen = alc->add_subcommand("length", "signed alcove length");
  common(alen, true);
  alen->callback([&] { action = [&] {
    Alcove A(RootDatum::make(type), p);
    std::cout << A.length(parse_weight(weight)) << std::endl;
    return 0;
  }; });
  auto* aor = alc->add_subcommand("oracle", "length by counting separating walls");
  common(aor, true);
  aor->callback([&] { action = [&] {
    Alcove A(RootDatum::make(type), p);
    std::cout << A.length_oracle(parse_weight(weight)) << std::endl;
    return 0;
  }; });
  auto* apar = alc->add_subcommand("parity", "parity congruence for tau and tau + p theta");
  common(apar, true);
  apar->add_option("--theta", theta, "element of ZR, simple-root coordinates")->required();
  apar->callback([&] { action = [&] {
    Alcove A(RootDatum::make(type), p);
    bool ok = A.parity_check(parse_weight(weight), parse_weight(theta));
    std::cout << (ok ? "true" : "false") << std::endl;
    return ok ? 0 : 1;
  }; });
  auto* ajan = alc->add_subcommand("jantzen", "membership in the Jantzen region");
  common(ajan, true);
  ajan->callback([&] { action = [&] {
    Alcove A(RootDatum::make(type), p);
    bool in = A.jantzen_contains(parse_weight(weight));
    std::cout << (in ? "true" : "false") << std::endl;
    return in ? 0 : 1;
  }; });
  auto* aid = alc->add_subcommand("ideal", "poset ideal generated by weights");
  common(aid, false);
  aid->add_option("--gen", gens, "generator (repeatable)")->required();
  aid->add_option("--order", order, "dominance | cone | bruhat");
  aid->add_flag("--report", report, "add the stability report");
  aid->callback([&] { action = [&] {
    Alcove A(RootDatum::make(type), p);
    std::vector<Weight> g;
    for (const auto& s : gens) g.push_back(parse_weight(s));
    Order o;
    try {
      o = parse_order(order);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    PosetIdeal I = A.generate_ideal(g, o);
    json j{{"type", I.type}, {"p", I.p}, {"order", order_name(I.order)}, {"elements", I.elements}};
    if (report) {
      IdealReport r = A.report(I);
      j["report"] = {{"stable", r.stable}, {"a", r.a}, {"inside_jantzen", r.inside_jantzen},
                     {"prime_bound_ok", r.prime_bound_ok}};
    }
    emit(j);
    return 0;
  }; });

  // alg
  auto* alg = app.add_subcommand("alg", "structure of finite-dimensional algebras");
  alg->require_subcommand(1);
  std::string file, mfile, nfile, grades = "z";
  int nmax = -1;
  auto* arad = alg->add_subcommand("radical", "radical series");
  arad->add_option("file", file, "algebra JSON")->required();
  arad->callback([&] { action = [&] {
    json j = io::read_file(file);
    std::vector<int> dims;
    if (io::parse_field(j.value("field", std::string("F2"))).kind == io::FieldKind::prime) {
      Algebra A = io::algebra_from_json(j);
      for (const auto& s : radical_series(A)) dims.push_back(s.dim());
    } else {
      LatticeAlgebra L = io::lattice_from_json(j, j.value("field", std::string("Q")) == "Q" ? free_prime(j) : 0);
      for (const auto& s : radical_series_Q(L)) dims.push_back(s.dim());
    }
    emit({{"series_dims", dims}, {"radical_dim", dims.size() > 1 ? dims[1] : 0}});
    return 0;
  }; });
  auto* ablk = alg->add_subcommand("blocks", "blocks and basic algebra");
  ablk->add_option("file", file, "algebra JSON")->required();
  ablk->callback([&] { action = [&] {
    auto A = load_algebra(file);
    BasicData D = blocks_and_basic(*A);
    emit({{"blocks", D.central.size()},
          {"simples", D.num_classes()},
          {"block_of", D.block_of},
          {"simple_dims", D.multiplicity},
          {"basic_dim", D.basic.alg->n},
          {"cartan", cartan_matrix(*D.basic.alg, D.basic_idempotents)},
          {"quiver", D.quiver}});
    return 0;
  }; });
  auto* aext = alg->add_subcommand("ext", "graded ext table ext^n(M, N<r>)");
  aext->add_option("--alg", file, "algebra JSON (default: the \"algebra\" entry of M)");
  aext->add_option("--m", mfile, "module M")->required();
  aext->add_option("--n", nfile, "module N")->required();
  aext->add_option("--nmax", nmax, "homological bound")->required()->check(CLI::NonNegativeNumber);
  aext->add_option("--grades", grades, "z | x | zx | none")->check(CLI::IsMember({"z", "x", "zx", "none"}));
  aext->callback([&] { action = [&] {
    json mj = io::read_file(mfile), nj = io::read_file(nfile);
    AlgebraPtr A;
    if (!file.empty()) {
      A = load_algebra(file);
    } else if (mj.contains("algebra")) {
      // inline object, or a path relative to the module file
      const json& a = mj["algebra"];
      if (a.is_string()) {
        std::filesystem::path ap(a.get<std::string>());
        if (ap.is_relative()) ap = std::filesystem::path(mfile).parent_path() / ap;
        A = load_algebra(ap.string());
      } else {
        A = std::make_shared<const Algebra>(io::algebra_from_json(a));
      }
    } else {
      throw UsageError("no algebra: pass --alg or add an \"algebra\" entry to M");
    }
    Grades g{grades.find('z') != std::string::npos, grades.find('x') != std::string::npos};
    Module M = io::module_from_json(mj, A), N = io::module_from_json(nj, A);
    auto sys = ProjectiveSystem::make(A, g);
    emit(io::ext_table_to_json(ext_table(sys, M, N, nmax)));
    return 0;
  }; });

  // gr
  auto* gr = app.add_subcommand("gr", "forced grading of lattice algebras");
  gr->require_subcommand(1);
  unsigned lp = 0;
  std::string emit_file;
  auto gr_common = [&](CLI::App* c) {
    c->add_option("file", file, "lattice algebra JSON (Zloc(p) or Q)")->required();
    c->add_option("--p", lp, "prime, needed for field Q");
  };
  auto* gforce = gr->add_subcommand("force", "forced grading");
  gr_common(gforce);
  gforce->add_option("--emit", emit_file, "write the graded algebra");
  gforce->callback([&] { action = [&] {
    LatticeAlgebra L = io::lattice_from_json(io::read_file(file), lp);
    ForcedGraded G = forced_grading(L);
    bool mult = check_multiplicativity(G);
    if (!emit_file.empty()) io::write_file(emit_file, io::algebra_to_json(*G.graded.alg));
    emit({{"p", L.p}, {"rank", L.n}, {"dims", G.dims}, {"multiplicative", mult}});
    return mult ? 0 : 1;
  }; });
  auto* gcmp = gr->add_subcommand("compare", "forced vs radical grading");
  gr_common(gcmp);
  gcmp->callback([&] { action = [&] {
    LatticeAlgebra L = io::lattice_from_json(io::read_file(file), lp);
    GradingComparison c = compare_with_radical_grading(L);
    emit({{"forced", c.forced}, {"radical", c.radical}, {"agree", c.agree}});
    return 0;
  }; });
  auto* gx = gr->add_subcommand("xcheck", "X-compatibility of the forced grading");
  gr_common(gx);
  gx->callback([&] { action = [&] {
    LatticeAlgebra L = io::lattice_from_json(io::read_file(file), lp);
    XCompatibility X = x_compatibility_check(L);
    json j{{"holds", X.holds}, {"reason", X.reason}};
    if (!X.holds) j["witness"] = {{"grade", X.grade}, {"weight", X.weight}};
    emit(j);
    return X.holds ? 0 : 1;
  }; });

  // check
  auto* chk = app.add_subcommand("check", "Koszul-type verdicts");
  chk->require_subcommand(1);
  bool as_json = false, colinear = false;
  QHOptions qo;
  auto chk_common = [&](CLI::App* c, bool module, bool qh) {
    c->add_option("--alg", file, "graded algebra JSON")->required();
    if (module) c->add_option("--mod", mfile, "graded module JSON")->required();
    c->add_option("--nmax", nmax, "homological bound (default dim A)")->check(CLI::NonNegativeNumber);
    c->add_flag("--json", as_json, "JSON verdict");
    if (qh) {
      c->add_option("--idem", qo.idem, "basis indices of the idempotents, in order");
      c->add_option("--order", qo.order, "chain (along --idem) | discrete");
      c->add_option("--labels", qo.labels, "weight labels");
    }
  };
  auto* ck = chk->add_subcommand("koszul", "ext between simples on the diagonal");
  chk_common(ck, false, false);
  ck->callback([&] { action = [&] { return verdict_exit(is_koszul(load_algebra(file), nmax), {}, as_json); }; });
  auto* cq = chk->add_subcommand("qkoszul", "ext(Delta^0, Nabla_0) on the diagonal");
  chk_common(cq, false, true);
  cq->callback([&] { action = [&] {
    GradedQH G = build_qh(load_algebra(file), qo);
    return verdict_exit(is_qkoszul(G, nmax), G.B.labels, as_json);
  }; });
  auto* cs = chk->add_subcommand("sqkoszul", "standard Q-Koszul");
  chk_common(cs, false, true);
  cs->callback([&] { action = [&] {
    GradedQH G = build_qh(load_algebra(file), qo);
    return verdict_exit(is_standard_qkoszul(G, nmax), G.B.labels, as_json);
  }; });
  auto linear_cmd = [&](const char* name, const char* help, std::function<Linearity()> kind) {
    auto* c = chk->add_subcommand(name, help);
    chk_common(c, true, true);
    if (std::string(name) == "strong") c->add_flag("--colinear", colinear, "strongly colinear instead");
    c->callback([&, kind] { action = [&, kind] {
      auto A = load_algebra(file);
      GradedQH G = build_qh(A, qo);
      Module M = io::module_from_json(io::read_file(mfile), A);
      return verdict_exit(linearity_check(M, kind(), G, nmax), G.B.labels, as_json);
    }; });
  };
  linear_cmd("linear", "ext(M, L) on the diagonal", [] { return Linearity::linear; });
  linear_cmd("qlinear", "ext(M, Nabla_0) on the diagonal", [] { return Linearity::qlinear; });
  linear_cmd("strong", "ext(M, Nabla_B) on the diagonal",
             [&] { return colinear ? Linearity::strongly_colinear : Linearity::strongly_linear; });

  // sl2
  auto* sl = app.add_subcommand("sl2", "SL_2 instances");
  sl->require_subcommand(1);
  int d = 0, max_weight = 30;
  bool integral = false;
  auto* su = sl->add_subcommand("u", "restricted enveloping algebra u(sl2)");
  su->add_option("-p", p, "odd prime")->required();
  su->add_option("--emit", emit_file, "write the algebra");
  su->add_flag("--integral", integral, "emit the Zloc(p) form");
  su->callback([&] { action = [&] {
    auto S = sl2::analyse_u(p);
    if (!emit_file.empty())
      io::write_file(emit_file, integral ? io::lattice_to_json(*S.U.lattice) : io::algebra_to_json(*S.U.alg));
    emit({{"p", p}, {"dim", S.U.alg->n}, {"blocks", S.blocks}});
    return 0;
  }; });
  auto* ss = sl->add_subcommand("schur", "Schur algebra S(2,d)");
  ss->add_option("-d", d, "degree")->required();
  ss->add_option("-p", p, "prime")->required();
  ss->add_option("--emit", emit_file, "write the algebra");
  ss->add_flag("--integral", integral, "emit the Zloc(p) form");
  ss->callback([&] { action = [&] {
    auto S = sl2::schur_algebra(d, p);
    if (!emit_file.empty())
      io::write_file(emit_file, integral ? io::lattice_to_json(*S.lattice) : io::algebra_to_json(*S.alg));
    json j{{"d", d}, {"p", p}, {"dim", S.alg->n}};
    if (integral) {
      GradingComparison c = compare_with_radical_grading(*S.lattice);
      j["forced"] = c.forced;
      j["radical"] = c.radical;
    }
    emit(j);
    return 0;
  }; });
  auto* sv = sl->add_subcommand("verify", "SL_2 checks");
  sv->require_subcommand(1);
  auto* swf = sv->add_subcommand("weyl-filtration", "Delta^p sections of Weyl characters");
  swf->add_option("-p", p, "prime")->required();
  swf->add_option("--max-weight", max_weight, "largest m")->check(CLI::NonNegativeNumber);
  swf->callback([&] { action = [&] {
    json rows = json::array();
    bool ok = true;
    for (int m = 0; m <= max_weight; ++m) {
      json r{{"m", m}};
      try {
        auto dec = sl2::delta_p_decomposition(m, p);
        sl2::Character sum;
        for (int g : dec) sum = sl2::add(sum, sl2::delta_p_character(g, p));
        r["sections"] = dec;
        r["ok"] = sum == sl2::weyl_character(m);
      } catch (const std::logic_error& e) {
        r["ok"] = false;
        r["error"] = e.what();
      }
      ok = ok && r["ok"].get<bool>();
      rows.push_back(r);
    }
    emit({{"p", p}, {"holds", ok}, {"weights", rows}});
    return ok ? 0 : 1;
  }; });
  auto* seo = sv->add_subcommand("evenodd", "even-odd vanishing on regular blocks of u(sl2)");
  seo->add_option("-p", p, "odd prime")->required();
  seo->add_option("--nmax", nmax, "homological bound")->check(CLI::NonNegativeNumber);
  seo->callback([&] { action = [&] {
    int n = nmax < 0 ? 6 : nmax;
    auto S = sl2::analyse_u(p);
    json blocks = json::array();
    bool ok = true;
    for (const auto& b : sl2::regular_blocks(S)) {
      auto B = sl2::u_block(S, b);
      auto T = sl2::block_ext_tables(B, n);
      auto R = sl2::block_parity(B, p, T, n);
      json ext = json::array();
      for (size_t i = 0; i < T.size(); ++i)
        for (size_t j = 0; j < T.size(); ++j) {
          std::vector<int> rows;
          for (int k = 0; k <= n; ++k) rows.push_back(T[i][j].row_sum(k));
          ext.push_back({{"from", B.weights[i]}, {"to", B.weights[j]}, {"ext_dims", rows}});
        }
      blocks.push_back({{"weights", b}, {"even_odd", R.even_odd}, {"length_parity", R.kl_property}, {"ext", ext}});
      ok = ok && R.even_odd;
    }
    emit({{"p", p}, {"nmax", n}, {"holds", ok}, {"blocks", blocks}});
    return ok ? 0 : 1;
  }; });

  // verify
  auto* ver = app.add_subcommand("verify", "acceptance criteria");
  ver->require_subcommand(1);
  int crit = 0;
  bool timings = false;
  auto* vc = ver->add_subcommand("criterion", "run one criterion");
  vc->add_option("N", crit, "criterion number")->required()->check(CLI::Range(1, acceptance::criterion_count()));
  vc->add_flag("--timings", timings, "include the wall time");
  vc->callback([&] { action = [&] {
    auto r = acceptance::run_criterion(crit);
    emit(acceptance::to_json(r, timings));
    return r.pass ? 0 : 1;
  }; });

  // recipe
  auto* rec = app.add_subcommand("recipe", "experiment recipes");
  rec->require_subcommand(1);
  auto* rrun = rec->add_subcommand("run", "run a recipe file");
  rrun->add_option("file", file, "recipe JSON")->required();
  rrun->callback([&] { action = [&] {
    auto out = acceptance::run_recipe(io::read_file(file));
    emit(out.report);
    return out.all_expected ? 0 : 1;
  }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (jobs > 0) omp_set_num_threads(jobs);
  if (!action) return 2;
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << std::endl;
    return 2;
  } catch (const io::FormatError& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}
