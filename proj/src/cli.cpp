#include "dioph/cli.hpp"

#include "dioph/approx.hpp"
#include "dioph/heights.hpp"
#include "dioph/lattice.hpp"
#include "dioph/polyindex.hpp"
#include "dioph/siegel.hpp"
#include "dioph/io.hpp"
#include "dioph/roth.hpp"
#include "dioph/wronskian.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace dioph {

namespace {

struct Globals {
  std::string format = "json";
  std::string precision = "1e-12";
  std::uint64_t seed = 0;
  std::string out;
  int jobs = 0;
  std::string cache;
};

struct AlphaArgs {
  std::string poly;
  long root = -1;
  long conjugate = -1;

  void add(CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--alpha", poly, "minimal polynomial of alpha (or a rational)");
    if (required) o->required();
    sub->add_option("--root", root, "k-th real root in ascending order (default: largest)");
    sub->add_option("--conjugate", conjugate, "k-th root in canonical conjugate order");
  }

  AlgebraicNumber get() const {
    bool has_var = poly.find_first_of("abcdefghijklmnopqrstuvwxyz") != std::string::npos;
    if (!has_var) return AlgebraicNumber::rational(parse_rational(poly));
    IntPoly f = parse_int_poly(poly);
    if (conjugate >= 0) return AlgebraicNumber::conjugate(f, static_cast<std::size_t>(conjugate));
    if (root >= 0) return AlgebraicNumber::real_root(f, static_cast<std::size_t>(root));
    auto roots = isolate_real_roots(f);
    if (roots.empty()) return AlgebraicNumber::conjugate(f, 0);
    return AlgebraicNumber::real_root(f, roots.size() - 1);
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<Rational> rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& t : split(s, ',')) {
    try {
      out.push_back(parse_rational(t));
    } catch (const std::exception&) {
      throw ParseError("malformed rational '" + t + "'", 1);
    }
  }
  return out;
}

Integer integer_arg(const std::string& s) {
  Rational q = parse_rational(s);
  if (q.get_den() != 1) throw DomainError("expected an integer, got " + s);
  return q.get_num();
}

std::vector<unsigned long> weight_list(const std::string& s) {
  std::vector<unsigned long> out;
  for (const auto& q : rational_list(s)) {
    if (q.get_den() != 1 || q < 0) throw ParseError("weights must be nonnegative integers", 1);
    out.push_back(q.get_num().get_ui());
  }
  return out;
}

Exponent exponent_list(const std::string& s) {
  Exponent e;
  for (auto v : weight_list(s)) e.push_back(static_cast<unsigned>(v));
  return e;
}

// Multivariate text, or a univariate polynomial in any single variable name.
QPoly parse_family_member(const std::string& s, std::size_t arity) {
  try {
    return parse_multi_poly(s, arity);
  } catch (const ParseError&) {
    if (arity > 1) throw;
    RatPoly f = parse_rat_poly(s);
    QPoly p(1);
    for (long i = 0; i <= f.degree(); ++i) p.add_term(Exponent{static_cast<unsigned>(i)}, f[i]);
    return p;
  }
}

Json read_json_input(const std::string& arg, std::istream& in) {
  std::string text;
  if (arg == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (std::filesystem::is_regular_file(arg)) {
    std::ifstream f(arg);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    text = arg;
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("invalid JSON", e.byte);
  }
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// A table of the array under `key` when present, else key,value pairs.
std::string to_csv(const Json& j, const std::string& key) {
  std::ostringstream os;
  if (!key.empty() && j.contains(key) && j.at(key).is_array() && !j.at(key).empty()) {
    std::vector<std::string> header;
    bool first = true;
    for (const auto& row : j.at(key)) {
      std::vector<std::pair<std::string, std::string>> cells;
      flatten(row, "", cells);
      if (first) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i].first);
        os << "\n";
        first = false;
      }
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i].second);
      os << "\n";
    }
    return os.str();
  }
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(j, "", cells);
  os << "key,value\n";
  for (const auto& [k, v] : cells) os << csv_field(k) << "," << csv_field(v) << "\n";
  return os.str();
}

Json northcott_json(int degree, const Rational& height, const Globals& g, bool serial) {
  std::filesystem::path cached;
  if (!g.cache.empty()) {
    std::filesystem::create_directories(g.cache);
    cached = std::filesystem::path(g.cache) / ("northcott_d" + std::to_string(degree) + "_h" + to_string(height.get_num()) +
                                               "_" + to_string(height.get_den()) + ".json");
    if (std::filesystem::exists(cached)) {
      std::ifstream f(cached);
      return Json::parse(f);
    }
  }
  auto entries = northcott_enumerate(degree, height, serial ? Exec::serial : Exec::parallel);
  Json polys = Json::array();
  for (const auto& e : entries) {
    Json p = to_json(e.poly);
    p["mahler"] = to_json(e.mahler);
    polys.push_back(p);
  }
  Json r{{"degree_max", degree}, {"height_max", to_json(height)}, {"count", entries.size()}, {"polynomials", polys}};
  if (!cached.empty()) {
    std::ofstream f(cached);
    f << r.dump() << "\n";
  }
  return r;
}

Json siegel_json(const SiegelResult& s) {
  unsigned long nm = s.cols - s.rows;
  Integer lhs = pow(s.sup, nm);
  Integer rhs = pow(Integer(static_cast<unsigned long>(s.cols)) * s.a_max, s.rows);
  return Json{{"rows", s.rows},
              {"cols", s.cols},
              {"a_max", to_json(s.a_max)},
              {"x", to_json(s.x)},
              {"sup", to_json(s.sup)},
              {"kernel_rank", s.kernel_rank},
              {"minimal", s.minimal},
              {"bound", Json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}, {"holds", lhs < rhs}}}};
}

Json minima_json(const MinimaResult& m) {
  Json lambdas = Json::array(), wit = Json::array();
  for (const auto& l : m.lambdas) lambdas.push_back(to_json(l));
  for (const auto& w : m.witnesses) wit.push_back(to_json(w));
  return Json{{"lambdas", lambdas}, {"witnesses", wit}, {"radius", to_json(m.radius)}, {"candidates", m.candidates}};
}

Json record_json(const ApproxRecord& r) {
  Json j{{"p", to_json(r.p)}, {"q", to_json(r.q)}, {"error", to_json(r.error)}};
  j["exponent"] = r.exponent ? to_json(*r.exponent) : Json(nullptr);
  j["scaled_error"] = to_json(r.scaled_error);
  j["dirichlet"] = r.dirichlet;
  return j;
}

std::string exponent_csv(const ExponentReport& rep) {
  std::ostringstream os;
  os << "q,p,error_lo,error_hi,kappa_lo,kappa_hi\n";
  for (const auto& r : rep.records) {
    os << r.q << "," << r.p << "," << to_json(r.error.lo).get<std::string>() << ","
       << to_json(r.error.hi).get<std::string>() << ",";
    if (r.exponent)
      os << to_json(r.exponent->lo).get<std::string>() << "," << to_json(r.exponent->hi).get<std::string>();
    else
      os << ",";
    os << "\n";
  }
  return os.str();
}

}  // namespace

CommandOutput run_command(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Exact Diophantine approximation toolkit", "dioph"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--precision", g.precision, "target enclosure width (rational or decimal)");
  app.add_option("--seed", g.seed, "seed for randomized inputs");
  app.add_option("--out", g.out, "write output to FILE");
  app.add_option("--jobs", g.jobs, "worker thread cap");
  app.add_option("--cache", g.cache, "directory memoizing Northcott enumerations");

  Json result;
  std::string table;
  std::string raw_csv;
  std::function<void()> action;

  // height
  std::string h_value, h_point;
  AlphaArgs h_alpha;
  auto* height = app.add_subcommand("height", "Weil height of a rational, algebraic number or projective point");
  height->add_option("value", h_value, "rational number");
  h_alpha.add(height, false);
  height->add_option("--point", h_point, "projective point a,b,c");

  std::string m_poly;
  auto* mahler = app.add_subcommand("mahler", "Mahler measure of an integer polynomial");
  mahler->add_option("poly", m_poly)->required();

  int n_degree = 1;
  std::string n_height;
  bool n_serial = false;
  auto* north = app.add_subcommand("northcott", "all irreducible polynomials of bounded degree and height");
  north->add_option("--degree", n_degree)->required();
  north->add_option("--height", n_height)->required();
  north->add_flag("--serial", n_serial, "use the serial scan");

  std::string k_poly;
  auto* kron = app.add_subcommand("kronecker", "root-of-unity test for an irreducible polynomial");
  kron->add_option("poly", k_poly)->required();

  std::string s_input, s_random;
  bool s_pigeon = false;
  auto* siegel = app.add_subcommand("siegel", "small integer solution of A x = 0");
  siegel->add_option("input", s_input, "matrix JSON, file, or - for stdin");
  siegel->add_option("--random", s_random, "M,N,A: random M x N matrix with |a_ij| <= A");
  siegel->add_flag("--pigeonhole", s_pigeon, "also run the pigeonhole search");

  std::string snf_input;
  auto* siegel_nf = app.add_subcommand("siegel-nf", "Siegel's lemma over Q(alpha)");
  siegel_nf->add_option("input", snf_input, "matrix JSON, file, or - for stdin")->required();

  std::string i_poly, i_point, i_weights;
  AlphaArgs i_alpha;
  auto* index = app.add_subcommand("index", "index of a polynomial at a point");
  index->add_option("--poly", i_poly)->required();
  index->add_option("--point", i_point, "rational coordinates a,b,...");
  index->add_option("--weights", i_weights)->required();
  i_alpha.add(index, false);

  std::string w_family, w_mus;
  bool w_serial = false;
  auto* wron = app.add_subcommand("wronskian", "generalized Wronskians and linear independence");
  wron->add_option("--family", w_family, "polynomials separated by ';'")->required();
  wron->add_option("--mus", w_mus, "multi-indices separated by ';' (entries by ',')");
  wron->add_flag("--serial", w_serial);

  unsigned c_m = 1;
  std::string c_eps, c_r;
  auto* icount = app.add_subcommand("index-count", "count the index set I(m, eps)");
  icount->add_option("--m", c_m)->required();
  icount->add_option("--eps", c_eps)->required();
  icount->add_option("--r", c_r)->required();

  AlphaArgs a_alpha;
  unsigned a_m = 1;
  std::string a_eps, a_r;
  auto* aux = app.add_subcommand("auxpoly", "auxiliary polynomial with large index at (alpha, ..., alpha)");
  a_alpha.add(aux);
  aux->add_option("--m", a_m)->required();
  aux->add_option("--eps", a_eps)->required();
  aux->add_option("--r", a_r)->required();

  std::string rv_poly, rv_point, rv_r, rv_eta;
  auto* rverify = app.add_subcommand("roth-verify", "check Roth's lemma on an instance");
  rverify->add_option("--poly", rv_poly)->required();
  rverify->add_option("--point", rv_point)->required();
  rverify->add_option("--r", rv_r)->required();
  rverify->add_option("--eta", rv_eta)->required();

  AlphaArgs cf_alpha;
  std::size_t cf_terms = 10;
  auto* cf = app.add_subcommand("cf", "continued fraction expansion");
  cf_alpha.add(cf);
  cf->add_option("--terms", cf_terms);

  AlphaArgs l_alpha;
  std::string l_qmax = "100000";
  unsigned long l_sweep = 1000;
  auto* liou = app.add_subcommand("liouville", "Liouville constant and violation scan");
  l_alpha.add(liou);
  liou->add_option("--qmax", l_qmax);
  liou->add_option("--sweep", l_sweep);

  AlphaArgs e_alpha;
  std::string e_qmax = "10000", e_qmin = "1";
  auto* expo = app.add_subcommand("exponents", "approximation exponents of the convergents");
  e_alpha.add(expo);
  expo->add_option("--qmax", e_qmax);
  expo->add_option("--qmin", e_qmin);

  std::string b_input;
  bool b_reference = false;
  auto* minima = app.add_subcommand("minima", "successive minima of a form-defined body");
  minima->add_option("input", b_input, "body JSON, file, or - for stdin")->required();
  minima->add_flag("--reference", b_reference, "use the full-box reference enumeration");
  std::string mk_input;
  auto* mink = app.add_subcommand("minkowski", "Minkowski's second theorem check");
  mink->add_option("input", mk_input, "body JSON, file, or - for stdin")->required();

  CommandOutput out;
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out.out = app.help();
    return out;
  } catch (const CLI::CallForAllHelp&) {
    out.out = app.help("", CLI::AppFormatMode::All);
    return out;
  } catch (const CLI::ParseError& e) {
    out.err = e.what() + std::string("\n");
    out.code = 2;
    return out;
  }

  try {
    if (g.jobs > 0) set_max_threads(g.jobs);
    Rational precision = parse_rational(g.precision);
    if (precision <= 0) throw DomainError("precision must be positive");
    Exec exec = Exec::parallel;

    if (*height) {
      if (!h_point.empty()) {
        auto coords = rational_list(h_point);
        result = Json{{"point", h_point}};
        HeightValue hv = height_projective(coords);
        result.update(to_json(hv));
        result["log_height"] = to_json(log_height(hv, precision));
      } else if (!h_alpha.poly.empty()) {
        AlgebraicNumber a = h_alpha.get();
        HeightValue hv = weil_height_algebraic(a, precision);
        result = Json{{"min_poly", to_json(a.min_poly())}};
        result.update(to_json(hv));
        result["log_height"] = to_json(log_height(hv, precision));
      } else {
        if (h_value.empty()) throw ParseError("height needs a value, --alpha or --point", 1);
        Rational q = parse_rational(h_value);
        HeightValue hv = height_rational(q);
        result = to_json(hv);
        result["value"] = to_json(q);
        result["log_height"] = to_json(log_height(hv, precision));
      }
    } else if (*mahler) {
      IntPoly f = parse_int_poly(m_poly);
      RealEnclosure m = mahler_measure(f, precision);
      result = Json{{"poly", to_json(f)}, {"mahler", to_json(m)}, {"exact", m.is_point()},
                    {"unit_circle_roots", unit_circle_root_count(f)}};
    } else if (*north) {
      result = northcott_json(n_degree, parse_rational(n_height), g, n_serial);
      table = "polynomials";
    } else if (*kron) {
      IntPoly f = parse_int_poly(k_poly);
      AlgebraicNumber a = AlgebraicNumber::conjugate(f, 0);
      auto order = is_root_of_unity(a);
      HeightValue hv = weil_height_algebraic(a, precision);
      result = Json{{"min_poly", to_json(a.min_poly())},
                    {"root_of_unity", order.has_value()},
                    {"order", order ? Json(*order) : Json(nullptr)},
                    {"height", to_json(hv)},
                    {"height_contains_one", hv.enclosure.contains(1)}};
    } else if (*siegel) {
      IntRows a;
      if (!s_random.empty()) {
        auto dims = weight_list(s_random);
        if (dims.size() != 3) throw ParseError("--random expects M,N,A", 1);
        std::mt19937_64 rng(g.seed);
        long amax = static_cast<long>(dims[2]);
        std::uniform_int_distribution<long> dist(-amax, amax);
        a.assign(dims[0], IntVector(dims[1]));
        for (auto& row : a)
          for (auto& v : row) v = dist(rng);
      } else {
        if (s_input.empty()) throw ParseError("siegel needs a matrix or --random", 1);
        a = int_matrix_from_json(read_json_input(s_input, in));
      }
      result = siegel_json(siegel_solve_Z(a));
      Json entries = Json::array();
      for (const auto& row : a) entries.push_back(to_json(row));
      result["entries"] = entries;
      if (s_pigeon) result["pigeonhole"] = to_json(siegel_pigeonhole(a));
    } else if (*siegel_nf) {
      NFMatrix m = nf_matrix_from_json(read_json_input(snf_input, in));
      NFSiegelResult r = siegel_solve_NF(m);
      result = Json{{"x", to_json(r.x)},
                    {"degree", r.degree},
                    {"rows", r.rows},
                    {"cols", r.cols},
                    {"height", to_json(r.height)},
                    {"log_height", to_json(log_height(r.height, precision))},
                    {"c1", to_json(r.c1)},
                    {"c_K", to_json(r.log_c1)},
                    {"conj_max", to_json(r.conj_max)},
                    {"bound", to_json(r.bound)},
                    {"bound_holds", r.bound_holds},
                    {"expanded", siegel_json(r.expanded)}};
    } else if (*index) {
      QPoly p = parse_multi_poly(i_poly);
      auto w = weight_list(i_weights);
      if (w.size() > p.arity()) p = parse_multi_poly(i_poly, w.size());
      IndexValue v;
      if (!i_alpha.poly.empty()) {
        auto base = std::make_shared<const AlgebraicNumber>(i_alpha.get());
        NFElement gen = NFElement::generator(base);
        v = index_at(p, std::vector<NFElement>(p.arity(), gen), w, NFElement(base, Rational(0)));
      } else {
        v = index_at(p, rational_list(i_point), w, Rational(0));
      }
      result = Json{{"poly", to_json(p)}, {"weights", w}, {"index", to_json(v)}};
    } else if (*wron) {
      std::vector<QPoly> fam;
      std::size_t arity = 1;
      for (const auto& t : split(w_family, ';')) arity = std::max(arity, parse_family_member(t, 0).arity());
      for (const auto& t : split(w_family, ';')) fam.push_back(parse_family_member(t, arity));
      if (!w_mus.empty()) {
        std::vector<Exponent> mus;
        for (const auto& s : split(w_mus, ';')) mus.push_back(exponent_list(s));
        QPoly w = generalized_wronskian(fam, mus);
        result = Json{{"determinant", to_json(w)}, {"identically_zero", w.is_zero()}};
      } else {
        auto r = are_linearly_independent(fam, w_serial ? Exec::serial : exec);
        Json wit = Json::array();
        for (const auto& e : r.witness) wit.push_back(e);
        result = Json{{"independent", r.independent},
                      {"witness", r.independent ? wit : Json(nullptr)},
                      {"rank", r.rank},
                      {"tuples_checked", r.tuples_checked},
                      {"exhaustive", r.exhaustive}};
      }
    } else if (*icount) {
      IndexSetSpec spec{c_m, parse_rational(c_eps), weight_list(c_r)};
      auto r = count_index_set(spec);
      result = Json{{"m", c_m}, {"eps", to_json(spec.epsilon)}, {"r", spec.r}, {"count", to_json(r.count)},
                    {"bound", to_json(r.bound)}, {"holds", Rational(r.count) <= r.bound.hi}};
    } else if (*aux) {
      IndexSetSpec spec{a_m, parse_rational(a_eps), weight_list(a_r)};
      AuxPolyResult r = build_aux_poly(a_alpha.get(), spec);
      result = Json{{"poly", to_json(r.poly)},
                    {"index", to_json(r.index)},
                    {"index_target", to_json(r.index_target)},
                    {"height", to_json(r.height)},
                    {"log_height", to_json(r.log_height)},
                    {"ratio", to_json(r.ratio)},
                    {"vanishing_conditions", r.vanishing_conditions},
                    {"unknowns", r.unknowns},
                    {"expanded_rows", r.expanded_rows},
                    {"effective_rows", r.effective_rows},
                    {"sup", to_json(r.sup)}};
      result["nf_bound"] = r.nf ? to_json(r.nf->bound) : Json(nullptr);
      result["ratio_threshold"] = r.ratio_threshold ? to_json(*r.ratio_threshold) : Json(nullptr);
    } else if (*rverify) {
      auto r = weight_list(rv_r);
      QPoly p = parse_multi_poly(rv_poly, r.size());
      RothReport rep = roth_lemma_verify(p, rational_list(rv_point), r, parse_rational(rv_eta));
      result = Json{{"ratio_hypothesis", rep.ratio_hypothesis},
                    {"height_hypothesis", rep.height_hypothesis},
                    {"hypotheses_hold", rep.hypotheses_hold},
                    {"height_lhs", to_json(rep.height_lhs)},
                    {"height_rhs", to_json(rep.height_rhs)},
                    {"index", to_json(rep.index)},
                    {"conclusion_bound", to_json(rep.conclusion_bound)},
                    {"conclusion_holds", rep.conclusion_holds}};
    } else if (*cf) {
      ContinuedFraction c = continued_fraction(cf_alpha.get(), cf_terms);
      Json pq = Json::array(), conv = Json::array();
      for (const auto& a : c.partial_quotients) pq.push_back(to_json(a));
      for (const auto& [p, q] : c.convergents) conv.push_back(Json{{"p", to_json(p)}, {"q", to_json(q)}});
      result = Json{{"partial_quotients", pq}, {"convergents", conv}, {"terminated", c.terminated}};
      table = "convergents";
    } else if (*liou) {
      auto scan = liouville_scan(l_alpha.get(), integer_arg(l_qmax), l_sweep);
      Json v = Json::array();
      for (const auto& x : scan.violations) v.push_back(Json{{"p", to_json(x.p)}, {"q", to_json(x.q)}});
      result = Json{{"constant", to_json(scan.constant)}, {"checked", scan.checked}, {"violations", v}};
    } else if (*expo) {
      ExponentReport rep = exponent_report(e_alpha.get(), integer_arg(e_qmax), exec, integer_arg(e_qmin));
      Json recs = Json::array();
      for (const auto& r : rep.records) recs.push_back(record_json(r));
      result = Json{{"records", recs},
                    {"dirichlet_count", rep.dirichlet_count},
                    {"hurwitz_liminf", rep.records.empty() ? Json(nullptr) : to_json(rep.hurwitz_liminf)},
                    {"max_exponent", rep.max_exponent ? to_json(*rep.max_exponent) : Json(nullptr)}};
      raw_csv = exponent_csv(rep);
    } else if (*minima) {
      ConvexBody b = body_from_json(read_json_input(b_input, in));
      MinimaResult m = b_reference ? successive_minima_box(b) : successive_minima(b, exec);
      result = minima_json(m);
      result["volume"] = to_json(body_volume(b));
    } else if (*mink) {
      ConvexBody b = body_from_json(read_json_input(mk_input, in));
      MinkowskiReport r = minkowski_check(b, exec);
      result = minima_json(r.minima);
      result["volume"] = to_json(r.volume);
      result["product"] = to_json(r.product);
      result["lower"] = to_json(r.lower);
      result["upper"] = to_json(r.upper);
      result["lower_ok"] = r.lower_ok;
      result["upper_ok"] = r.upper_ok;
    }
  } catch (const ParseError& e) {
    out.err = std::string("parse error: ") + e.what() + "\n";
    out.code = 2;
  } catch (const DomainError& e) {
    out.err = std::string("invalid input: ") + e.what() + "\n";
    out.code = 2;
  } catch (const Json::exception& e) {
    out.err = std::string("invalid input: ") + e.what() + "\n";
    out.code = 2;
  } catch (const std::invalid_argument& e) {
    out.err = std::string("invalid input: ") + e.what() + "\n";
    out.code = 2;
  } catch (const InternalError& e) {
    out.err = std::string("internal error: ") + e.what() + "\n";
    out.code = 4;
  } catch (const PrecisionError& e) {
    out.err = std::string("precision: ") + e.what() + "\n";
    out.code = 3;
  } catch (const InfeasibleError& e) {
    out.err = std::string("infeasible: ") + e.what() + "\n";
    out.code = 3;
  } catch (const UnsupportedError& e) {
    out.err = std::string("unsupported: ") + e.what() + "\n";
    out.code = 3;
  }
  if (out.code != 0) return out;

  std::string text;
  if (g.format == "csv")
    text = raw_csv.empty() ? to_csv(result, table) : raw_csv;
  else
    text = result.dump(2) + "\n";
  if (!g.out.empty()) {
    std::ofstream f(g.out);
    if (!f) {
      out.err = "cannot write " + g.out + "\n";
      out.code = 2;
      return out;
    }
    f << text;
  } else {
    out.out = std::move(text);
  }
  return out;
}

}  // namespace dioph
