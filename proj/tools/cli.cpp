#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "elim/complexes.hpp"
#include "elim/elimination.hpp"
#include "elim/koszul.hpp"
#include "elim/mahler.hpp"
#include "elim/multipoly.hpp"
#include "elim/rational_linalg.hpp"
#include "elim/stability.hpp"
#include "json_io.hpp"

namespace elim::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::string_view kSubcommands[] = {
    "torsion", "exactness", "scaling-exponent", "chi",  "dims",  "build",  "resultant", "resultant-symbolic",
    "sylvester", "discriminant", "chow-points", "weight", "limit", "slope", "mahler",    "l2norm",
};

constexpr OperationRoute kRoutes[] = {
    {"det", "torsion"},
    {"rank", "exactness"},
    {"select_independent_columns", "exactness"},
    {"complete_to_basis", "torsion"},
    {"is_complex", "exactness"},
    {"is_exact", "exactness"},
    {"torsion", "torsion"},
    {"trim", "dims"},
    {"scaling_exponent", "scaling-exponent"},
    {"parse/format", "limit"},
    {"is_homogeneous", "l2norm"},
    {"mul/add/partial", "discriminant"},
    {"monomial_basis", "resultant-symbolic"},
    {"apply_linear", "resultant"},
    {"eval/eval_float", "mahler"},
    {"term_dimension", "dims"},
    {"chi", "chi"},
    {"macaulay_bound", "build"},
    {"build_complex", "build"},
    {"resultant", "resultant"},
    {"sylvester_resultant", "sylvester"},
    {"resultant_degree", "resultant-symbolic"},
    {"resultant_symbolic", "resultant-symbolic"},
    {"discriminant", "discriminant"},
    {"chow_form_points", "chow-points"},
    {"act_decompose", "limit"},
    {"weight", "weight"},
    {"limit_polynomial", "limit"},
    {"induced_coefficient_weights", "weight"},
    {"slope_fit", "slope"},
    {"l2_norm_sq", "l2norm"},
    {"theta", "mahler"},
    {"theta_along_orbit", "mahler"},
};

struct Options {
  std::string input;
  std::string json_text;
  std::vector<std::size_t> dims;
  std::size_t n = 0;
  std::vector<unsigned> degrees;
  std::optional<long> twist;
  std::string forms;
  std::string transform;
  std::string f;
  std::string g;
  std::string form;
  std::string points;
  std::string poly;
  std::vector<long> weights;
  std::vector<long> ambient;
  std::optional<unsigned> form_degree;
  double tmin = 1e-6;
  double tmax = 1e-3;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  std::size_t shards = 1;
  std::optional<std::size_t> vars;
  double t = 1.0;
};

std::string str(const Rational& q) { return to_string(q); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

// First letter run of the first variable name in `text`, e.g. "w" for "w1^2".
std::string detect_prefix(std::string_view text, std::string_view fallback = "x") {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
      return std::string(text.substr(i, j - i));
    }
  }
  return std::string(fallback);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BasedComplex load_complex(const Options& o) {
  if (o.input.empty() == o.json_text.empty()) throw UsageError("give exactly one of --input or --json");
  const std::string text = o.json_text.empty() ? read_text(o.input) : o.json_text;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  return io::complex_from_json(j);
}

std::vector<MultiPoly> parse_forms(const std::string& text, std::size_t vars) {
  std::vector<MultiPoly> out;
  for (const auto& piece : split(text, ';')) out.push_back(parse_poly(piece, vars));
  return out;
}

Matrix parse_matrix_rows(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : split(text, ';')) {
    std::vector<Rational> r;
    for (const auto& e : split(row, ',')) r.push_back(parse_rational(e));
    rows.push_back(std::move(r));
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Rational> entries;
  for (auto& r : rows) {
    if (r.size() != cols) throw UsageError("matrix rows have different lengths");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(entries));
}

Json torsion_payload(const TorsionResult& t) {
  Json j;
  j["value"] = str(t.value);
  j["n_parity"] = t.n_odd ? "odd" : "even";
  j["kappa"] = t.kappa;
  auto factors = Json::array();
  for (const auto& f : t.factor_log) {
    Json e;
    e["term"] = f.term;
    e["det"] = str(f.det);
    e["exponent"] = f.exponent;
    factors.push_back(std::move(e));
  }
  j["factors"] = std::move(factors);
  return j;
}

KoszulSpec spec_from(const Options& o) {
  KoszulSpec spec{o.n, o.degrees, 0};
  spec.validate();
  spec.twist = o.twist.value_or(macaulay_bound(spec));
  return spec;
}

std::vector<double> decade_grid(double tmax, double tmin) {
  if (!(tmin > 0.0 && tmax < 1.0 && tmin < tmax)) throw UsageError("need 0 < tmin < tmax < 1");
  const double hi = std::log10(tmax);
  const double lo = std::log10(tmin);
  const std::size_t steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(hi - lo)));
  std::vector<double> ts;
  for (std::size_t k = 0; k <= steps; ++k) {
    double e = hi + (lo - hi) * static_cast<double>(k) / static_cast<double>(steps);
    if (std::abs(e - std::round(e)) < 1e-12) e = std::round(e);
    ts.push_back(std::pow(10.0, e));
  }
  return ts;
}

OnePS weights_for(const Options& o) {
  if (!o.ambient.empty()) {
    if (!o.form_degree) throw UsageError("--ambient requires --form-degree");
    return induced_coefficient_weights(o.ambient.size() - 1, *o.form_degree, OnePS{o.ambient});
  }
  if (o.weights.empty()) throw UsageError("give --weights or --ambient with --form-degree");
  return OnePS{o.weights};
}

using Handler = std::function<Json(const Options&)>;

std::map<std::string, Handler, std::less<>> handlers() {
  std::map<std::string, Handler, std::less<>> h;

  h["torsion"] = [](const Options& o) {
    const BasedComplex c = load_complex(o);
    return torsion_payload(torsion(c));
  };

  h["exactness"] = [](const Options& o) {
    const BasedComplex c = load_complex(o);
    Json j;
    const bool complex = is_complex(c);
    j["is_complex"] = complex;
    j["exact"] = complex && is_exact(c);
    auto ranks = Json::array();
    auto pivots = Json::array();
    for (const auto& b : c.boundaries()) {
      ranks.push_back(rank(b));
      pivots.push_back(select_independent_columns(b));
    }
    j["ranks"] = std::move(ranks);
    j["pivot_columns"] = std::move(pivots);
    return j;
  };

  h["scaling-exponent"] = [](const Options& o) {
    Json j;
    j["exponent"] = scaling_exponent(o.dims);
    return j;
  };

  h["chi"] = [](const Options& o) {
    Json j;
    j["chi"] = chi(spec_from(o));
    return j;
  };

  h["dims"] = [](const Options& o) {
    const KoszulSpec spec = spec_from(o);
    Json j;
    j["m"] = spec.twist;
    j["macaulay_bound"] = macaulay_bound(spec);
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k <= spec.n + 1; ++k) r.push_back(term_dimension(spec, k));
    j["r"] = r;
    // Term i of the complex holds |S| = n+1-i.
    std::vector<std::size_t> full(r.rbegin(), r.rend());
    j["complex_dims"] = full;
    std::size_t lead = 0;
    while (lead < full.size() && full[lead] == 0) ++lead;
    j["trimmed_dims"] = std::vector<std::size_t>(full.begin() + static_cast<long>(lead), full.end());
    return j;
  };

  h["build"] = [](const Options& o) {
    const auto forms = parse_forms(o.forms, o.n + 1);
    const FormSystem sys(forms);
    KoszulSpec spec{sys.n(), sys.degrees(), 0};
    if (forms.size() != o.n + 1) throw DomainError("expected n+1 forms");
    spec.twist = o.twist.value_or(macaulay_bound(spec));
    return io::to_json(build_complex(spec, forms));
  };

  h["resultant"] = [](const Options& o) {
    auto forms = parse_forms(o.forms, o.n + 1);
    if (forms.size() != o.n + 1) {
      throw DomainError("expected " + std::to_string(o.n + 1) + " forms, got " + std::to_string(forms.size()));
    }
    if (!o.transform.empty()) {
      const Matrix a = parse_matrix_rows(o.transform);
      for (auto& f : forms) f = apply_linear(f, a);
    }
    Json j;
    j["value"] = str(resultant(FormSystem(forms)));
    return j;
  };

  h["resultant-symbolic"] = [](const Options& o) {
    SymbolicLimits limits;
    if (const char* env = std::getenv("ELIM_MAX_GRID")) {
      try {
        limits.max_grid = std::stoul(env);
      } catch (const std::exception&) {
        throw UsageError("ELIM_MAX_GRID must be a nonnegative integer");
      }
    }
    const MultiPoly r = resultant_symbolic(o.n, o.degrees, limits);
    Json j;
    j["polynomial"] = format_poly(r, "u");
    j["degree"] = resultant_degree(o.degrees);
    j["terms"] = r.term_count();
    auto vars = Json::array();
    std::size_t index = 0;
    for (std::size_t i = 0; i < o.degrees.size(); ++i) {
      for (const auto& mono : monomial_basis(o.n + 1, o.degrees[i])) {
        Json v;
        v["name"] = "u" + std::to_string(index++);
        v["form"] = i;
        v["monomial"] = format_poly(MultiPoly::monomial(mono));
        vars.push_back(std::move(v));
      }
    }
    j["variables"] = std::move(vars);
    return j;
  };

  h["sylvester"] = [](const Options& o) {
    Json j;
    j["value"] = str(sylvester_resultant(parse_poly(o.f, 2), parse_poly(o.g, 2)));
    return j;
  };

  h["discriminant"] = [](const Options& o) {
    const std::optional<std::size_t> vars = o.vars ? o.vars : std::optional<std::size_t>{};
    Json j;
    j["value"] = str(discriminant(parse_poly(o.form, vars)));
    return j;
  };

  h["chow-points"] = [](const Options& o) {
    std::vector<std::vector<Rational>> pts;
    for (const auto& p : split(o.points, ';')) {
      std::vector<Rational> coords;
      for (const auto& c : split(p, ',')) coords.push_back(parse_rational(c));
      pts.push_back(std::move(coords));
    }
    const MultiPoly chow = chow_form_points(pts);
    Json j;
    j["polynomial"] = format_poly(chow, "u");
    j["degree"] = pts.size();
    return j;
  };

  h["weight"] = [](const Options& o) {
    const OnePS lambda = weights_for(o);
    const MultiPoly f = parse_poly(o.poly, lambda.weights.size());
    Json j;
    j["weight"] = weight(f, lambda);
    if (!o.ambient.empty()) j["weights"] = lambda.weights;
    return j;
  };

  h["limit"] = [](const Options& o) {
    const OnePS lambda = weights_for(o);
    const MultiPoly f = parse_poly(o.poly, lambda.weights.size());
    const std::string prefix = detect_prefix(o.poly);
    Json j;
    j["weight"] = weight(f, lambda);
    j["limit"] = format_poly(limit_polynomial(f, lambda), prefix);
    auto parts = Json::array();
    for (const auto& [e, part] : act_decompose(f, lambda)) {
      Json p;
      p["exponent"] = e;
      p["part"] = format_poly(part, prefix);
      parts.push_back(std::move(p));
    }
    j["parts"] = std::move(parts);
    return j;
  };

  h["slope"] = [](const Options& o) {
    const OnePS lambda = weights_for(o);
    const MultiPoly f = parse_poly(o.poly, lambda.weights.size());
    const auto ts = decade_grid(o.tmax, o.tmin);
    Json j;
    j["slope"] = slope_fit(f, lambda, ts);
    j["weight"] = weight(f, lambda);
    j["t_values"] = ts;
    return j;
  };

  h["mahler"] = [](const Options& o) {
    ThetaEstimate est;
    if (!o.weights.empty()) {
      const MultiPoly f = parse_poly(o.poly, o.weights.size());
      est = theta_along_orbit(f, OnePS{o.weights}, o.t, o.samples, o.seed, o.shards);
    } else {
      const MultiPoly f = parse_poly(o.poly, o.vars);
      est = theta(f, o.samples, o.seed, o.shards);
    }
    Json j;
    j["mean"] = est.mean;
    j["stderr"] = est.std_error;
    j["samples"] = est.samples;
    j["seed"] = est.seed;
    return j;
  };

  h["l2norm"] = [](const Options& o) {
    const MultiPoly f = parse_poly(o.poly, o.vars);
    const auto d = homogeneous_degree(f);
    if (!d) throw DomainError("l2norm: polynomial is not homogeneous");
    Json j;
    j["value"] = str(l2_norm_sq(f));
    j["degree"] = *d;
    return j;
  };

  return h;
}

void configure(CLI::App& app, Options& o) {
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto complex_input = [&o](CLI::App* sub) {
    sub->add_option("--input", o.input, "Complex JSON file ('-' for stdin)");
    sub->add_option("--json", o.json_text, "Complex JSON given inline");
  };
  auto koszul_spec = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "Ambient projective dimension")->required();
    sub->add_option("--degrees", o.degrees, "Form degrees d0,...,dn")->delimiter(',')->required();
    sub->add_option("--m", o.twist, "Twist (default: Macaulay bound sum(d) - n)");
  };
  auto one_ps = [&o](CLI::App* sub) {
    sub->add_option("--poly", o.poly, "Polynomial")->required();
    sub->add_option("--weights", o.weights, "Integer weights a0,a1,...")->delimiter(',')->allow_extra_args(false);
    sub->add_option("--ambient", o.ambient, "Ambient weights b0..bn; acts on coefficients of forms")
        ->delimiter(',')
        ->allow_extra_args(false);
    sub->add_option("--form-degree", o.form_degree, "Degree of the forms whose coefficients --poly is in");
  };

  complex_input(app.add_subcommand("torsion", "Torsion of a based exact complex"));
  complex_input(app.add_subcommand("exactness", "Composition, ranks and exactness of a complex"));

  app.add_subcommand("scaling-exponent", "Degree of the torsion under d -> mu d")
      ->add_option("--dims", o.dims, "Term dimensions r0,...,r_{n+1}")
      ->delimiter(',')
      ->required();

  koszul_spec(app.add_subcommand("chi", "Alternating weighted Koszul dimension sum"));
  koszul_spec(app.add_subcommand("dims", "Koszul term dimensions r_j(m)"));

  auto* build = app.add_subcommand("build", "Koszul complex of a system of forms, as complex JSON");
  build->add_option("--n", o.n, "Ambient projective dimension")->required();
  build->add_option("--forms", o.forms, "Forms separated by ';'")->required();
  build->add_option("--m", o.twist, "Twist (default: Macaulay bound)");

  auto* res = app.add_subcommand("resultant", "Resultant of n+1 forms on P^n via Koszul torsion");
  res->add_option("--n", o.n, "Ambient projective dimension")->required();
  res->add_option("--forms", o.forms, "Forms separated by ';'")->required();
  res->add_option("--transform", o.transform, "Substitute x -> A x first; rows ';', entries ','");

  auto* sym = app.add_subcommand("resultant-symbolic", "Resultant as a polynomial in generic coefficients");
  sym->add_option("--n", o.n, "Ambient projective dimension")->required();
  sym->add_option("--degrees", o.degrees, "Form degrees")->delimiter(',')->required();

  auto* syl = app.add_subcommand("sylvester", "Sylvester resultant of two binary forms");
  syl->add_option("--f", o.f, "First binary form")->required();
  syl->add_option("--g", o.g, "Second binary form")->required();

  auto* disc = app.add_subcommand("discriminant", "Resultant of the partial derivatives of a form");
  disc->add_option("--form", o.form, "Homogeneous form")->required();
  disc->add_option("--vars", o.vars, "Variable count (default: inferred)");

  app.add_subcommand("chow-points", "Chow form of a finite point set")
      ->add_option("--points", o.points, "Points separated by ';', coordinates by ','")
      ->required();

  one_ps(app.add_subcommand("weight", "Weight of a polynomial under a one-parameter subgroup"));
  one_ps(app.add_subcommand("limit", "Degeneration limit under a one-parameter subgroup"));
  auto* slope = app.add_subcommand("slope", "Fitted log-slope of ||lambda(t) F||^2 against log t^2");
  one_ps(slope);
  slope->add_option("--tmin", o.tmin, "Smallest t (default 1e-6)");
  slope->add_option("--tmax", o.tmax, "Largest t (default 1e-3)");

  auto* mahler = app.add_subcommand("mahler", "Monte Carlo Mahler measure Theta");
  mahler->add_option("--poly", o.poly, "Homogeneous polynomial")->required();
  mahler->add_option("--samples", o.samples, "Sample count (default 100000)");
  mahler->add_option("--seed", o.seed, "RNG seed (default 0)");
  mahler->add_option("--shards", o.shards, "Parallel shards (result does not depend on this)");
  mahler->add_option("--vars", o.vars, "Variable count (default: inferred)");
  mahler->add_option("--weights", o.weights, "Act by lambda(t) first")->delimiter(',')->allow_extra_args(false);
  mahler->add_option("--t", o.t, "Orbit parameter t > 0 (with --weights)");

  auto* l2 = app.add_subcommand("l2norm", "Exact squared L2 norm over the unit sphere");
  l2->add_option("--poly", o.poly, "Homogeneous polynomial")->required();
  l2->add_option("--vars", o.vars, "Variable count (default: inferred)");
}

}  // namespace

std::span<const std::string_view> subcommands() { return kSubcommands; }

std::span<const OperationRoute> operation_routes() { return kRoutes; }

CommandResult run(std::span<const std::string> argv) {
  CLI::App app{"Exact elimination theory: torsion, resultants, weights and Mahler measures", "elim"};
  Options o;
  configure(app, o);

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());

  CommandResult result;
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    if (code == 0) {
      result.diagnostics = out.str();
      return result;
    }
    result.status = Status::usage_error;
    result.diagnostics = err.str() + out.str();
    return result;
  }

  const auto table = handlers();
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    result.payload = table.at(name)(o);
  } catch (const ParseError& e) {
    result.status = Status::usage_error;
    result.diagnostics = std::string("parse error: ") + e.what();
  } catch (const io::FormatError& e) {
    result.status = Status::usage_error;
    result.diagnostics = std::string("format error: ") + e.what();
  } catch (const UsageError& e) {
    result.status = Status::usage_error;
    result.diagnostics = e.what();
  } catch (const std::exception& e) {
    result.status = Status::domain_error;
    result.diagnostics = e.what();
  }
  return result;
}

}  // namespace elim::cli
