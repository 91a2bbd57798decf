#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <optional>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "jacring/degeneration.hpp"
#include "jacring/parse.hpp"

namespace jacring::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kCommands = {"hilbert", "hodge",       "lefschetz",
                                         "yukawa",  "torelli",     "classify",
                                         "family-scan", "tjurina", "delta"};

struct Options {
  std::string command;
  std::optional<std::string> poly, ideal, family, weights, degrees, t_values, ell, xi;
  std::optional<int> dim, vars, degree, reference_degree, codim, degree_cap;
  std::string mode = "slp";
  std::string format = "json";
  int window = kDefaultStabilizationWindow;
  std::uint64_t prime = kDefaultPrime;
  bool rational = false;
  bool raw = false;
  bool check_primes = false;
  std::uint64_t seed = 0;
  std::size_t samples = 8;
  unsigned threads = 1;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    const std::string t = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw InputError(flag + ": '" + t + "' is not an integer");
    }
    out.push_back(v);
  }
  if (out.empty()) throw InputError(flag + ": empty list");
  return out;
}

std::vector<mpq_class> parse_rational_list(const std::string& text) {
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rational(tok));
  if (out.empty()) throw InputError("--t-values: empty list");
  return out;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

/// One more than the largest variable index mentioned in `text`.
std::optional<std::size_t> inferred_vars(const std::string& text) {
  static const std::regex var("x([0-9]+)");
  std::optional<std::size_t> n;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var); it != std::sregex_iterator();
       ++it) {
    const std::size_t i = std::stoul((*it)[1].str()) + 1;
    if (!n || i > *n) n = i;
  }
  return n;
}

Grading make_grading(const Options& o, const std::string& text) {
  if (o.weights) {
    auto w = parse_int_list(*o.weights, "--weights");
    if (o.dim && w.size() != static_cast<std::size_t>(*o.dim + 2)) {
      throw InputError("--weights has " + std::to_string(w.size()) + " entries, --dim " +
                       std::to_string(*o.dim) + " needs " + std::to_string(*o.dim + 2));
    }
    return Grading(std::move(w));
  }
  if (o.dim) {
    if (*o.dim < 1) throw InputError("--dim must be at least 1");
    return Grading(static_cast<std::size_t>(*o.dim + 2));
  }
  if (o.vars) {
    if (*o.vars < 1) throw InputError("--vars must be at least 1");
    return Grading(static_cast<std::size_t>(*o.vars));
  }
  if (auto n = inferred_vars(text)) return Grading(*n);
  throw InputError("cannot infer the number of variables; pass --vars");
}

const std::string& require(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing required flag ") + flag);
  return *v;
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing required flag ") + flag);
  return *v;
}

template <class Field>
Polynomial<Field> parse_hypersurface(const std::string& text, const Ring<Field>& ring) {
  auto f = parse_polynomial(text, ring, true);
  if (f.is_zero()) throw InputError("zero polynomial: '" + text + "'");
  return f;
}

LefschetzMode parse_mode(const std::string& m) {
  if (m == "slp" || m == "strong") return LefschetzMode::Strong;
  if (m == "wlp" || m == "weak") return LefschetzMode::Weak;
  throw InputError("--mode: '" + m + "' is not one of slp, wlp");
}

template <class Field>
json polys_json(const std::vector<Polynomial<Field>>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

json monomials_json(const std::vector<Monomial>& ms) {
  json a = json::array();
  for (const auto& m : ms) {
    const std::string s = monomial_to_string(m);
    a.push_back(s.empty() ? "1" : s);
  }
  return a;
}

json rank_table_json(const std::vector<RankEntry>& table) {
  json a = json::array();
  for (const auto& e : table) {
    a.push_back({{"k", e.source_degree},
                 {"m", e.power},
                 {"source_dim", e.source_dim},
                 {"target_dim", e.target_dim},
                 {"rank", e.rank},
                 {"expected", e.expected},
                 {"maximal", e.maximal()}});
  }
  return a;
}

json obstruction_json(const HFObstruction& o) {
  json j{{"kind", to_string(o.kind)}};
  j["degree"] = o.obstructed() ? json(o.degree) : json(nullptr);
  return j;
}

template <class Field>
json lefschetz_report_json(const LefschetzReport<Field>& r) {
  json j{{"mode", to_string(r.mode)},
         {"ell", r.ell.to_string()},
         {"witness", r.witness},
         {"table", rank_table_json(r.table)}};
  j["failure"] =
      r.failure ? json{{"k", r.failure->first}, {"m", r.failure->second}} : json(nullptr);
  return j;
}

/// Command implementations share this context.
template <class Field>
struct Context {
  const Options& o;
  Field field;
  std::vector<std::string>& warnings;
};

template <class Field>
std::shared_ptr<const QuotientRing<Field>> quotient_from_flags(const Context<Field>& c,
                                                               json& result) {
  const auto& o = c.o;
  if (o.poly.has_value() == o.ideal.has_value()) {
    throw InputError("pass exactly one of --poly and --ideal");
  }
  if (o.poly) {
    Ring<Field> ring{make_grading(o, *o.poly), c.field};
    auto f = parse_hypersurface(*o.poly, ring);
    result["polynomial"] = f.to_string();
    result["degree"] = f.degree();
    result["jacobian_socle_degree"] = jacobian_socle_degree(f);
    return jacobian_quotient(f);
  }
  Ring<Field> ring{make_grading(o, *o.ideal), c.field};
  std::vector<Polynomial<Field>> gens;
  std::size_t i = 0;
  for (const auto& g : parse_polynomial_list(*o.ideal, ring.grading)) {
    auto h = convert(g, c.field);
    if (h.is_zero()) {
      throw InputError("zero polynomial: --ideal entry " + std::to_string(i) + " '" +
                       g.to_string() + "'");
    }
    if (!h.is_homogeneous()) {
      throw NotHomogeneous("--ideal entry " + std::to_string(i) + " '" + g.to_string() +
                           "' is not homogeneous");
    }
    gens.push_back(std::move(h));
    ++i;
  }
  return std::make_shared<const QuotientRing<Field>>(ring, gens);
}

template <class Field>
int cap_for(const Context<Field>& c, const QuotientRing<Field>& q) {
  if (c.o.degree_cap) {
    if (*c.o.degree_cap < 0) throw InputError("--degree-cap must be nonnegative");
    return *c.o.degree_cap;
  }
  return default_degree_cap(q);
}

template <class Field>
json cmd_hilbert(const Context<Field>& c) {
  json result;
  auto q = quotient_from_flags(c, result);
  const auto& grading = q->ring().grading;
  result["num_vars"] = grading.num_vars();
  result["weights"] = grading.weights();
  result["generators"] = polys_json(q->generators());
  result["generator_degrees"] = q->generator_degrees();
  const int cap = cap_for(c, *q);
  result["degree_cap"] = cap;
  std::vector<std::size_t> h;
  try {
    h = artinian_hilbert_function(*q, cap);
    result["artinian"] = true;
    result["top_degree"] = static_cast<int>(h.size()) - 1;
  } catch (const NotArtinian&) {
    for (int k = 0; k <= cap; ++k) h.push_back(q->graded_dim(k));
    result["artinian"] = false;
    result["top_degree"] = nullptr;
    c.warnings.push_back("graded pieces stay nonzero through degree " + std::to_string(cap + 1) +
                         "; the quotient is not Artinian or its top degree exceeds the cap");
  }
  result["hilbert_function"] = h;
  const auto degs = q->generator_degrees();
  if (degs.size() == grading.num_vars()) {
    const auto series = ci_hilbert_series(degs, grading);
    result["ci_series"] = series;
    bool match = true;
    for (std::size_t k = 0; k < h.size() || k < series.size(); ++k) {
      const long long a = k < h.size() ? static_cast<long long>(h[k]) : 0;
      const long long b = k < series.size() ? series[k] : 0;
      if (k < h.size() || result["artinian"].get<bool>()) match = match && a == b;
    }
    result["matches_ci_series"] = match;
  } else {
    result["ci_series"] = nullptr;
  }
  if (c.o.degree) {
    result["basis_degree"] = *c.o.degree;
    result["standard_monomials"] = monomials_json(q->standard_monomials(*c.o.degree));
  }
  return result;
}

template <class Field>
json cmd_hodge(const Context<Field>& c) {
  const auto& o = c.o;
  const int n = require(o.dim, "--dim");
  Ring<Field> ring{make_grading(o, require(o.poly, "--poly")), c.field};
  auto f = parse_hypersurface(*o.poly, ring);
  json result{{"polynomial", f.to_string()}, {"n", n}};
  if (o.raw) {
    SmoothHypersurface<Field>::check_shape(f, n);
    const auto ctx = HypersurfaceContext::make(n, f.degree());
    auto q = jacobian_quotient(f);
    std::vector<std::size_t> dims;
    for (int a : ctx.hodge_degrees) dims.push_back(q->graded_dim(a));
    const auto st = q->artinian_check(ctx.sigma);
    result["d"] = ctx.d;
    result["sigma"] = ctx.sigma;
    result["hodge_degrees"] = ctx.hodge_degrees;
    result["graded_dims"] = dims;
    result["artinian"] = st.artinian;
    result["raw"] = true;
    if (!st.artinian) {
      c.warnings.push_back("hypersurface is singular; graded_dims are not Hodge numbers");
    }
    return result;
  }
  auto x = SmoothHypersurface<Field>::make(f, n);
  result["d"] = x.d();
  result["sigma"] = x.sigma();
  result["hodge_degrees"] = x.context().hodge_degrees;
  result["hodge_numbers"] = x.hodge_numbers();
  result["raw"] = false;
  return result;
}

template <class Field>
json cmd_lefschetz(const Context<Field>& c) {
  json result;
  auto q = quotient_from_flags(c, result);
  const int cap = cap_for(c, *q);
  const LefschetzMode mode = parse_mode(c.o.mode);
  result["mode"] = to_string(mode);
  const auto h = artinian_hilbert_function(*q, cap);
  const int top = static_cast<int>(h.size()) - 1;
  result["hilbert_function"] = h;
  result["top_degree"] = top;
  result["socle_dimensions"] = socle_dimensions(*q, top);
  if (c.o.ell) {
    auto ell = parse_polynomial(*c.o.ell, q->ring());
    auto rep = lefschetz_check(*q, ell, mode, cap);
    result["obstruction"] = obstruction_json(rep.obstruction);
    result["outcome"] = rep.witness ? "Witness" : "Failure";
    result["report"] = lefschetz_report_json(rep);
    return result;
  }
  auto search = find_lefschetz_witness(*q, c.o.samples, c.o.seed, cap, mode);
  result["obstruction"] = obstruction_json(search.obstruction);
  result["outcome"] = to_string(search.outcome);
  result["candidates_tested"] = search.candidates_tested;
  result["report"] = search.report ? lefschetz_report_json(*search.report) : json(nullptr);
  if (search.outcome == WitnessOutcome::NoneFound) {
    c.warnings.push_back("no witness among " + std::to_string(search.candidates_tested) +
                         " candidates; this does not prove the property fails");
  }
  return result;
}

template <class Field>
SmoothHypersurface<Field> smooth_from_flags(const Context<Field>& c, json& result) {
  const int n = require(c.o.dim, "--dim");
  Ring<Field> ring{make_grading(c.o, require(c.o.poly, "--poly")), c.field};
  auto f = parse_hypersurface(*c.o.poly, ring);
  result["polynomial"] = f.to_string();
  result["n"] = n;
  auto x = SmoothHypersurface<Field>::make(f, n);
  result["d"] = x.d();
  return x;
}

template <class Field>
json cmd_yukawa(const Context<Field>& c) {
  json result;
  auto x = smooth_from_flags(c, result);
  const std::size_t h_n0 = x.quotient().graded_dim(x.context().hodge_degrees[0]);
  result["theoretical_max"] = h_n0;
  if (c.o.xi) {
    auto xi = parse_polynomial(*c.o.xi, x.polynomial().ring());
    auto ev = yukawa_evaluate(x, xi);
    result["xi"] = ev.xi.to_string();
    result["rank"] = ev.rank;
    result["route"] = ev.expanded ? "expanded" : "composed";
    return result;
  }
  auto rep = max_yukawa_rank(x, c.o.samples, c.o.seed);
  result["d_M"] = rep.d_M_lower_bound;
  result["verdict"] = to_string(rep.verdict);
  result["samples_tested"] = rep.samples_tested;
  result["witness_xi"] = rep.witness_xi ? json(rep.witness_xi->to_string()) : json(nullptr);
  result["lefschetz_ell"] =
      rep.lefschetz_ell ? json(rep.lefschetz_ell->to_string()) : json(nullptr);
  json samples = json::array();
  for (const auto& s : rep.samples) samples.push_back({{"label", s.label}, {"rank", s.rank}});
  result["samples"] = samples;
  if (rep.verdict == VariationVerdict::LowerBoundOnly) {
    c.warnings.push_back("d_M is a sampled lower bound below h^{n,0}; maximality not certified");
  }
  if (rep.verdict == VariationVerdict::Vacuous) {
    c.warnings.push_back("h^{n,0} = 0: the Yukawa map has zero source and the verdict is vacuous");
  }
  return result;
}

template <class Field>
json cmd_torelli(const Context<Field>& c) {
  json result;
  auto x = smooth_from_flags(c, result);
  auto t = torelli_rank(x);
  result["rank"] = t.rank;
  result["dim_deformations"] = t.dim_deformations;
  result["rows"] = t.rows;
  result["injective"] = t.injective;
  return result;
}

json cmd_classify(const Options& o) {
  const int n = require(o.dim, "--dim");
  const auto degrees = parse_int_list(require(o.degrees, "--degrees"), "--degrees");
  const int c = static_cast<int>(degrees.size());
  if (o.codim && *o.codim != c) {
    throw InputError("--codim " + std::to_string(*o.codim) + " disagrees with " +
                     std::to_string(c) + " entries in --degrees");
  }
  for (int d : degrees) {
    if (d < 2) throw InputError("--degrees: '" + std::to_string(d) + "' is below 2");
  }
  if (n < 1) throw InputError("--dim must be at least 1");
  const auto ctx = classify_ci(n, c, degrees);
  json result{{"n", ctx.n},
              {"c", ctx.c},
              {"degrees", ctx.degrees},
              {"kappa", ctx.kappa},
              {"classification", to_string(ctx.classification)},
              {"quadric_hypersurface", ctx.quadric_hypersurface}};
  if (o.weights) {
    const auto w = parse_int_list(*o.weights, "--weights");
    result["weights"] = w;
    result["weighted_socle"] = weighted_socle(w, degrees);
  }
  return result;
}

template <class Field>
std::vector<FamilyScanRow> scan_rows(const Context<Field>& c) {
  const int n = require(c.o.dim, "--dim");
  const auto& text = require(c.o.family, "--family");
  const auto tmpl = FamilyTemplate::parse(text, make_grading(c.o, text));
  const auto ts = parse_rational_list(require(c.o.t_values, "--t-values"));
  FamilyScanOptions opts;
  opts.delta_degree = c.o.degree;
  opts.stabilization_window = c.o.window;
  opts.threads = c.o.threads;
  if (!tmpl.depends_on_parameter()) {
    c.warnings.push_back("family template does not involve t; every row is the same polynomial");
  }
  return family_scan(tmpl, n, ts, c.o.samples, c.o.seed, c.field, opts);
}

/// Drops sampled polynomials, whose coefficients depend on the prime.
json prime_independent(json r) {
  for (const char* key : {"witness_xi", "lefschetz_ell", "xi"}) r.erase(key);
  if (r.contains("report") && r["report"].is_object()) r["report"].erase("ell");
  return r;
}

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class Field>
json cmd_family_scan(const Context<Field>& c) {
  const auto rows = scan_rows(c);
  json out = json::array();
  for (const auto& r : rows) {
    json j{{"t", rational_string(r.t)},
           {"polynomial", r.polynomial},
           {"smooth", r.smooth},
           {"a0", r.a0},
           {"mid", r.mid},
           {"sigma", r.sigma},
           {"delta_degree", r.delta_degree},
           {"dim_a0", r.dim_a0},
           {"dim_mid", r.dim_mid},
           {"dim_sigma", r.dim_sigma},
           {"dim_sigma_plus1", r.dim_sigma_plus1},
           {"dim_sigma_plus2", r.dim_sigma_plus2},
           {"tjurina_total", opt_json(r.tjurina_total)},
           {"yukawa_rank", opt_json(r.yukawa_rank)},
           {"yukawa_verdict", opt_json(r.yukawa_verdict)},
           {"delta", opt_json(r.delta)}};
    j["error"] = r.error.empty() ? json(nullptr) : json(r.error);
    out.push_back(std::move(j));
  }
  return json{{"rows", out}};
}

template <class T>
std::string csv_cell(const std::optional<T>& v) {
  if (!v) return "";
  std::ostringstream s;
  s << *v;
  return s.str();
}

template <class Field>
std::string family_scan_csv(const Context<Field>& c) {
  std::ostringstream s;
  s << "t,smooth,dim_a0,dim_mid,dim_sigma,dim_sigma_plus1,tjurina,yukawa_rank,delta\n";
  for (const auto& r : scan_rows(c)) {
    s << rational_string(r.t) << ',' << (r.smooth ? "true" : "false") << ',';
    if (r.evaluated) {
      s << r.dim_a0 << ',' << r.dim_mid << ',' << r.dim_sigma << ',' << r.dim_sigma_plus1;
    } else {
      s << ",,,";
    }
    s << ',' << csv_cell(r.tjurina_total) << ',' << csv_cell(r.yukawa_rank) << ','
      << csv_cell(r.delta) << '\n';
  }
  return s.str();
}

template <class Field>
json cmd_tjurina(const Context<Field>& c) {
  const auto& text = require(c.o.poly, "--poly");
  Ring<Field> ring{make_grading(c.o, text), c.field};
  auto f = parse_hypersurface(text, ring);
  if (c.o.window < 1) throw InputError("--window must be at least 1");
  json result{{"polynomial", f.to_string()},
              {"jacobian_socle_degree", jacobian_socle_degree(f)},
              {"window", c.o.window}};
  result["tjurina_total"] = total_tjurina(f, c.o.window);
  result["note"] =
      "stabilized dim (S/J)_k; equals the total Milnor number when every singular point is "
      "weighted homogeneous";
  return result;
}

template <class Field>
json cmd_delta(const Context<Field>& c) {
  const auto& text = require(c.o.poly, "--poly");
  const int k = require(c.o.degree, "--degree");
  Ring<Field> ring{make_grading(c.o, text), c.field};
  auto f = parse_hypersurface(text, ring);
  const int d = c.o.reference_degree.value_or(f.degree());
  if (d < 2) throw InputError("--reference-degree must be at least 2");
  auto q = jacobian_quotient(f);
  const long long delta = rank_drop_delta(*q, d, k);
  json result{{"polynomial", f.to_string()},
              {"k", k},
              {"reference_degree", d},
              {"dim_R_k", q->graded_dim(k)},
              {"smooth_value", static_cast<long long>(q->graded_dim(k)) - delta},
              {"delta", delta}};
  if (k < d - 1) {
    const std::size_t dim_s = ring.grading.monomials_of_degree(k).size();
    c.warnings.push_back("degree " + std::to_string(k) + " lies below the generator degree " +
                         std::to_string(d - 1) + ": dim R_" + std::to_string(k) + " = dim S_" +
                         std::to_string(k) + " = " + std::to_string(dim_s) +
                         " for every degree-" + std::to_string(d) +
                         " polynomial, so no value above " + std::to_string(dim_s) +
                         " is possible and delta is 0");
  }
  return result;
}

template <class Field>
json dispatch(const Context<Field>& c) {
  const auto& cmd = c.o.command;
  if (cmd == "hilbert") return cmd_hilbert(c);
  if (cmd == "hodge") return cmd_hodge(c);
  if (cmd == "lefschetz") return cmd_lefschetz(c);
  if (cmd == "yukawa") return cmd_yukawa(c);
  if (cmd == "torelli") return cmd_torelli(c);
  if (cmd == "classify") return cmd_classify(c.o);
  if (cmd == "family-scan") return cmd_family_scan(c);
  if (cmd == "tjurina") return cmd_tjurina(c);
  if (cmd == "delta") return cmd_delta(c);
  throw InputError("unknown command '" + cmd + "'");
}

json input_json(const Options& o) {
  json j = json::object();
  auto put = [&](const char* key, const auto& v) {
    if (v) j[key] = *v;
  };
  put("poly", o.poly);
  put("ideal", o.ideal);
  put("family", o.family);
  put("weights", o.weights);
  put("degrees", o.degrees);
  put("t_values", o.t_values);
  put("ell", o.ell);
  put("xi", o.xi);
  put("dim", o.dim);
  put("vars", o.vars);
  put("degree", o.degree);
  put("reference_degree", o.reference_degree);
  put("codim", o.codim);
  if (o.command == "lefschetz") j["mode"] = o.mode;
  if (o.command == "hodge") j["raw"] = o.raw;
  if (o.command == "tjurina" || o.command == "family-scan") j["window"] = o.window;
  if (o.command == "family-scan") j["format"] = o.format;
  return j;
}

json config_json(const Options& o) {
  json j{{"seed", o.seed},
         {"samples", o.samples},
         {"degree_cap", opt_json(o.degree_cap)},
         {"check_primes", o.check_primes},
         {"version", kVersion}};
  if (o.rational) {
    j["prime"] = nullptr;
    j["field"] = RationalField{}.name();
  } else {
    j["prime"] = o.prime;
    j["field"] = PrimeField(o.prime).name();
  }
  return j;
}

void add_flags(CLI::App& app, Options& o) {
  app.add_option("--poly", o.poly, "Homogeneous polynomial F; the ring is S/J_F");
  app.add_option("--ideal", o.ideal, "Comma-separated homogeneous generators of an ideal");
  app.add_option("--family", o.family, "Family template in x0.. and the parameter t");
  app.add_option("--dim", o.dim, "Dimension n of the hypersurface in P^{n+1}");
  app.add_option("--vars", o.vars, "Number of variables (inferred when omitted)");
  app.add_option("--weights", o.weights, "Comma-separated variable weights");
  app.add_option("--degrees", o.degrees, "Comma-separated complete-intersection degrees");
  app.add_option("--codim", o.codim, "Codimension; must match --degrees");
  app.add_option("--t-values", o.t_values, "Comma-separated rational parameter values");
  app.add_option("--degree", o.degree, "Degree k (delta, family-scan delta, hilbert basis)");
  app.add_option("--reference-degree", o.reference_degree, "Smooth reference degree d for delta");
  app.add_option("--ell", o.ell, "Linear form to test instead of searching");
  app.add_option("--xi", o.xi, "Degree-d class for a single Yukawa evaluation");
  app.add_option("--mode", o.mode, "Lefschetz mode: slp or wlp");
  app.add_option("--window", o.window, "Stabilization window beyond the socle degree");
  app.add_option("--format", o.format, "Output format: json or csv (family-scan)");
  app.add_flag("--raw", o.raw, "hodge: report graded dimensions without the smoothness gate");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Jacobian-ring computations for hypersurfaces", "jacring"};
  app.set_version_flag("--version", kVersion);
  app.add_option("--prime", o.prime, "Prime modulus below 2^63")->envname("JACRING_PRIME");
  app.add_flag("--rational", o.rational, "Compute over the rationals instead of a prime field");
  app.add_flag("--check-primes", o.check_primes,
               "Recompute the result at three large primes and report agreement");
  app.add_option("--seed", o.seed, "Seed for sampled candidates");
  app.add_option("--samples", o.samples, "Number of random candidates");
  app.add_option("--degree-cap", o.degree_cap, "Largest degree scanned for the top degree");
  app.add_option("--threads", o.threads, "Worker threads for family-scan");
  app.require_subcommand(1);
  for (const auto& name : kCommands) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    add_flags(*sub, o);
  }

  std::vector<const char*> argv{"jacring"};
  for (const auto& a : args) argv.push_back(a.c_str());
  const auto fail = [&](int code, const std::string& kind, const std::string& msg) {
    json report{{"command", o.command.empty() ? json(nullptr) : json(o.command)},
                {"error", {{"kind", kind}, {"message", msg}}}};
    if (!o.command.empty()) {
      report["input"] = input_json(o);
      try {
        report["config"] = config_json(o);
      } catch (const std::exception&) {
        report["config"] = nullptr;
      }
    }
    out << report.dump(2) << '\n';
    err << "jacring: " << msg << '\n';
    return code;
  };

  if (!args.empty() && args[0].rfind("-", 0) != 0 && !kCommands.count(args[0])) {
    return fail(2, "input", "unknown command '" + args[0] + "'");
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    o.command = app.get_subcommands().front()->get_name();
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(2, "input", e.what());
  }
  if (o.samples < 1) return fail(2, "input", "--samples must be at least 1");
  if (o.threads < 1) return fail(2, "input", "--threads must be at least 1");
  if (o.format != "json" && o.format != "csv") {
    return fail(2, "input", "--format: '" + o.format + "' is not one of json, csv");
  }
  if (o.format == "csv" && o.command != "family-scan") {
    return fail(2, "input", "--format csv is only available for family-scan");
  }
  if (o.rational && o.check_primes) {
    return fail(2, "input", "--check-primes needs prime-field arithmetic, not --rational");
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    json config = config_json(o);
    std::vector<std::string> warnings;
    if (o.format == "csv") {
      if (o.rational) {
        out << family_scan_csv(Context<RationalField>{o, RationalField{}, warnings});
      } else {
        out << family_scan_csv(Context<PrimeField>{o, PrimeField(o.prime), warnings});
      }
      for (const auto& w : warnings) err << "jacring: warning: " << w << '\n';
      return 0;
    }
    json result;
    if (o.rational) {
      result = dispatch(Context<RationalField>{o, RationalField{}, warnings});
    } else {
      result = dispatch(Context<PrimeField>{o, PrimeField(o.prime), warnings});
    }
    if (o.check_primes) {
      json per_prime = json::array();
      bool agree = true;
      const json reference = prime_independent(result);
      for (std::uint64_t p : kAgreementPrimes) {
        std::vector<std::string> ignored;
        json r = dispatch(Context<PrimeField>{o, PrimeField(p), ignored});
        agree = agree && prime_independent(r) == reference;
        per_prime.push_back(p);
      }
      result["prime_agreement"] = {{"primes", per_prime}, {"agree", agree}};
      if (!agree) {
        warnings.push_back("results differ between primes; the default prime may be unlucky");
      }
    }
    json report{{"command", o.command},
                {"input", input_json(o)},
                {"config", config},
                {"result", result},
                {"warnings", warnings}};
    out << report.dump(2) << '\n';
    for (const auto& w : warnings) err << "jacring: warning: " << w << '\n';
  } catch (const MathRefusal& e) {
    return fail(1, "refusal", e.what());
  } catch (const InputError& e) {
    return fail(2, "input", e.what());
  } catch (const std::exception& e) {
    return fail(2, "input", e.what());
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  err << "jacring: " << o.command << " finished in " << ms << " ms\n";
  return 0;
}

}  // namespace jacring::cli
