#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "padwav/errors.hpp"
#include "padwav/monna.hpp"
#include "padwav/mra.hpp"
#include "padwav/sampling.hpp"
#include "padwav/vladimirov.hpp"
#include "suites.hpp"

namespace padwav::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
  int p = 2;
  int precision = kDefaultDigits;
  std::uint64_t seed = 0;
  std::string format;  // empty: the subcommand's own default
  std::string out;
};

struct Result {
  int code = 0;
  std::string text;
  std::vector<std::pair<std::string, std::string>> extra_files;  // path, content
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool csv(const Config& c, const char* fallback = "json") {
  return (c.format.empty() ? std::string(fallback) : c.format) == "csv";
}

PAdic literal(const Config& c, const std::string& text) { return parse_padic(text, c.p, c.precision); }

json classification_json(const Classification& c) {
  return {{"gamma", c.index.gamma},
          {"n", c.index.n.to_string()},
          {"j", c.index.j},
          {"phase_num", c.phase.numerator().get_si()},
          {"phase_den", c.phase.denominator().get_si()}};
}

// classify --a --b
Result cmd_classify(const Config& c, const std::string& a, const std::string& b) {
  const Classification cl = classify_affine(AffineParams(literal(c, a), literal(c, b)));
  const json doc = classification_json(cl);
  if (csv(c)) {
    std::string text = "gamma,n,j,phase_num,phase_den\n";
    text += std::to_string(cl.index.gamma) + "," + cl.index.n.to_string() + "," + std::to_string(cl.index.j) +
            "," + cl.phase.numerator().get_str() + "," + cl.phase.denominator().get_str() + "\n";
    return {0, text, {}};
  }
  return {0, doc.dump() + "\n", {}};
}

struct WaveletArgs {
  std::optional<int> gamma;
  std::string n = "0";
  int j = 1;
  std::string a;
  std::string b;
  std::vector<std::string> xs;
};

// wavelet: psi_{gamma n j} (--gamma, --n, --j) or psi^{a,b} (--a, --b) at --x points
Result cmd_wavelet(const Config& c, const WaveletArgs& w) {
  const bool affine = !w.a.empty() || !w.b.empty();
  if (affine == w.gamma.has_value()) throw DomainError("give either --gamma [--n --j] or --a and --b");
  if (affine && (w.a.empty() || w.b.empty())) throw DomainError("--a and --b go together");
  std::optional<WaveletIndex> idx;
  std::optional<AffineParams> ab;
  if (affine) {
    ab.emplace(literal(c, w.a), literal(c, w.b));
  } else {
    idx.emplace(*w.gamma, coset_rep(literal(c, w.n)), w.j);
  }
  json values = json::array();
  std::string text = "x,re,im\n";
  for (const std::string& xs : w.xs) {
    const PAdic x = literal(c, xs);
    const Complex v = affine ? affine_wavelet_at(*ab, x) : wavelet_at(*idx, x);
    values.push_back({{"x", xs}, {"re", v.real()}, {"im", v.imag()}});
    text += xs + "," + fmt(v.real()) + "," + fmt(v.imag()) + "\n";
  }
  if (csv(c)) return {0, text, {}};
  json doc = {{"p", c.p}};
  if (affine) {
    doc["a"] = w.a;
    doc["b"] = w.b;
    doc["classification"] = classification_json(classify_affine(*ab));
  } else {
    doc["gamma"] = idx->gamma;
    doc["n"] = idx->n.to_string();
    doc["j"] = idx->j;
  }
  doc["values"] = std::move(values);
  return {0, doc.dump(2) + "\n", {}};
}

SchwartzFunction load(const Config& c, const std::string& path) {
  SchwartzFunction f = load_function(read_file(path), c.precision);
  if (f.prime() != c.p) {
    throw DomainError("function file has p = " + std::to_string(f.prime()) + " but --p is " + std::to_string(c.p));
  }
  return f;
}

// coeffs --file --gamma-lo --gamma-hi: CSV table plus a JSON sidecar
Result cmd_coeffs(const Config& c, const std::string& file, int lo, int hi, const std::string& sidecar) {
  if (lo > hi) throw DomainError("empty window: --gamma-lo > --gamma-hi");
  const SchwartzFunction f = load(c, file);
  const std::vector<Coefficient> table = coefficient_table(f, lo, hi);
  const ParsevalSummary s = parseval_summary(f, table, lo, hi);
  const Complex total = integral(f);
  json summary = {{"p", c.p},
                  {"gamma_lo", lo},
                  {"gamma_hi", hi},
                  {"coefficients", table.size()},
                  {"norm_sq", s.norm_sq},
                  {"partial_parseval", s.captured},
                  {"residual_norm_sq", s.residual_norm_sq}};
  if (total != Complex(0.0) && s.analytic_tail) {
    summary["analytic_tail"] = *s.analytic_tail;
  } else {
    summary["analytic_tail"] = nullptr;
  }
  summary["required_window"] = {s.coverage.required_lo, s.coverage.required_hi};
  summary["window_covers_support"] = s.coverage.covered;

  Result r;
  if (csv(c, "csv")) {
    r.text = "gamma,n_literal,j,coeff_re,coeff_im\n";
    for (const Coefficient& k : table) {
      r.text += std::to_string(k.index.gamma) + "," + k.index.n.to_string() + "," + std::to_string(k.index.j) +
                "," + fmt(k.value.real()) + "," + fmt(k.value.imag()) + "\n";
    }
  } else {
    json rows = json::array();
    for (const Coefficient& k : table) {
      rows.push_back({{"gamma", k.index.gamma},
                      {"n", k.index.n.to_string()},
                      {"j", k.index.j},
                      {"re", k.value.real()},
                      {"im", k.value.imag()}});
    }
    r.text = json{{"summary", summary}, {"coefficients", rows}}.dump(2) + "\n";
  }
  std::string side = sidecar;
  if (side.empty() && !c.out.empty()) side = c.out + ".summary.json";
  if (!side.empty()) r.extra_files.emplace_back(side, summary.dump(2) + "\n");
  return r;
}

// spectrum: eigenvalue table of D^alpha over a window of basis wavelets
Result cmd_spectrum(const Config& c, double alpha, int lo, int hi, int cosets, int samples) {
  if (lo > hi) throw DomainError("empty window: --gamma-lo > --gamma-hi");
  const VladimirovParams params(alpha, c.p);
  json cases = json::array();
  std::string text = "gamma,n,j,eigenvalue,max_rel_err\n";
  for (int gamma = lo; gamma <= hi; ++gamma) {
    for (const CosetRep& n : coset_window(c.p, cosets)) {
      for (int j = 1; j < c.p; ++j) {
        const WaveletIndex idx(gamma, n, j);
        const double lambda = wavelet_eigenvalue(params, gamma);
        const double err = eigenvalue_check(idx, params, samples, c.seed);
        cases.push_back({{"gamma", gamma}, {"n", n.to_string()}, {"j", j}, {"eigenvalue", lambda}, {"max_rel_err", err}});
        text += std::to_string(gamma) + "," + n.to_string() + "," + std::to_string(j) + "," + fmt(lambda) + "," +
                fmt(err) + "\n";
      }
    }
  }
  if (csv(c)) return {0, text, {}};
  const json doc = {{"p", c.p}, {"alpha", alpha}, {"gamma_p", gamma_p(c.p, alpha)}, {"cases", cases}};
  return {0, doc.dump(2) + "\n", {}};
}

struct MonnaArgs {
  std::string x;
  std::string real;
  std::string center;
  std::optional<int> scale;
};

// monna: rho(--x), rho^{-1}(--real) or the image of the ball (--center, --scale)
Result cmd_monna(const Config& c, const MonnaArgs& m) {
  const int modes = !m.x.empty() + !m.real.empty() + (!m.center.empty() || m.scale.has_value());
  if (modes != 1) throw DomainError("give exactly one of --x, --real, or --center with --scale");
  json doc = {{"p", c.p}};
  std::string header;
  std::string row;
  if (!m.x.empty()) {
    const DyadicReal r = rho(literal(c, m.x));
    doc["x"] = m.x;
    doc["rho"] = to_string(r.value());
    header = "x,rho";
    row = m.x + "," + to_string(r.value());
  } else if (!m.real.empty()) {
    const PAdic x = rho_inverse(DyadicReal(parse_rational(m.real), c.p));
    doc["real"] = m.real;
    doc["padic"] = to_literal(x);
    header = "real,padic";
    row = m.real + "," + to_literal(x);
  } else {
    if (m.center.empty() || !m.scale) throw DomainError("--center and --scale go together");
    const RealInterval image = ball_image(Ball::make(literal(c, m.center), *m.scale));
    doc["center"] = m.center;
    doc["scale"] = *m.scale;
    doc["left"] = to_string(image.left);
    doc["right"] = to_string(image.right());
    doc["interval"] = image.to_string();
    header = "center,scale,left,right";
    row = m.center + "," + std::to_string(*m.scale) + "," + to_string(image.left) + "," + to_string(image.right());
  }
  if (csv(c)) return {0, header + "\n" + row + "\n", {}};
  return {0, doc.dump() + "\n", {}};
}

// project --file --gamma [--detail]: P_gamma f or its detail component in W_gamma
Result cmd_project(const Config& c, const std::string& file, int gamma, bool detail) {
  const SchwartzFunction f = load(c, file);
  const SchwartzFunction g = detail ? detail_component(f, gamma) : project(f, gamma);
  if (csv(c)) {
    std::string text = "center,scale,re,im\n";
    for (const auto& [ball, value] : g.cells()) {
      text += to_string(ball.center_value()) + "," + std::to_string(g.scale()) + "," + fmt(value.real()) + "," +
              fmt(value.imag()) + "\n";
    }
    return {0, text, {}};
  }
  const auto scale = membership_scale(f);
  json doc = {{"p", c.p},
              {"gamma", gamma},
              {"component", detail ? "detail" : "projection"},
              {"input_membership_scale", scale ? json(*scale) : json(nullptr)},
              {"input_norm_sq", norm_sq(f)},
              {"norm_sq", norm_sq(g)},
              {"function", json::parse(dump_function(g))}};
  return {0, doc.dump(2) + "\n", {}};
}

// verify --suite: exit 1 when any check fails
Result cmd_verify(const Config& c, const std::string& suite) {
  const json report = run_suite(suite, c.p, c.seed);
  const int code = report.at("passed").get<bool>() ? 0 : 1;
  if (csv(c)) {
    std::string text = "suite,check,cases,max_error,tolerance,passed\n";
    auto rows = [&](const json& r) {
      for (const auto& k : r.at("checks")) {
        text += r.at("suite").get<std::string>() + "," + k.at("name").get<std::string>() + "," +
                std::to_string(k.at("cases").get<long>()) + "," + fmt(k.at("max_error").get<double>()) + "," +
                fmt(k.at("tolerance").get<double>()) + "," + (k.at("passed").get<bool>() ? "true" : "false") + "\n";
      }
    };
    if (report.contains("suites")) {
      for (const auto& r : report.at("suites")) rows(r);
    } else {
      rows(report);
    }
    return {code, text, {}};
  }
  return {code, report.dump(2) + "\n", {}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic wavelets: classification, transforms, spectra, Monna map and checks", "padwav"};
  app.require_subcommand(1);
  Config config;
  app.add_option("--p", config.p, "prime")->capture_default_str();
  app.add_option("--precision", config.precision, "p-adic digits kept for rational literals (>= 8)")
      ->check(CLI::Range(8, 1 << 20))
      ->capture_default_str();
  app.add_option("--seed", config.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--format", config.format, "json or csv (default depends on the command)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", config.out, "write the output here instead of stdout");

  std::string a;
  std::string b;
  auto* classify = app.add_subcommand("classify", "classify the affine wavelet psi^{a,b}");
  classify->add_option("--a", a, "dilation (p-adic literal)")->required();
  classify->add_option("--b", b, "translation (p-adic literal)")->required();

  WaveletArgs wargs;
  auto* wavelet = app.add_subcommand("wavelet", "evaluate psi_{gamma n j} or psi^{a,b} at points");
  wavelet->add_option("--gamma", wargs.gamma, "scale of a basis wavelet");
  wavelet->add_option("--n", wargs.n, "coset in Q_p / Z_p (p-adic literal)")->capture_default_str();
  wavelet->add_option("--j", wargs.j, "frequency label in [1, p-1]")->capture_default_str();
  wavelet->add_option("--a", wargs.a, "dilation of an affine wavelet");
  wavelet->add_option("--b", wargs.b, "translation of an affine wavelet");
  wavelet->add_option("--x", wargs.xs, "evaluation points (p-adic literals)")->required();

  std::string file;
  int lo = 0;
  int hi = 0;
  std::string sidecar;
  auto* coeffs = app.add_subcommand("coeffs", "wavelet coefficient table of a function file");
  coeffs->add_option("--file", file, "function file (JSON)")->required();
  coeffs->add_option("--gamma-lo", lo, "lowest scale")->required();
  coeffs->add_option("--gamma-hi", hi, "highest scale")->required();
  coeffs->add_option("--sidecar", sidecar, "summary JSON path (default: <out>.summary.json when --out is set)");

  double alpha = 1.0;
  int slo = -3;
  int shi = 3;
  int cosets = 5;
  int samples = 20;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the Vladimirov operator on basis wavelets");
  spectrum->add_option("--alpha", alpha, "order alpha > 0")->capture_default_str();
  spectrum->add_option("--gamma-lo", slo, "lowest scale")->capture_default_str();
  spectrum->add_option("--gamma-hi", shi, "highest scale")->capture_default_str();
  spectrum->add_option("--cosets", cosets, "cosets per scale")->check(CLI::PositiveNumber)->capture_default_str();
  spectrum->add_option("--samples", samples, "sample points per wavelet")->check(CLI::PositiveNumber)->capture_default_str();

  MonnaArgs margs;
  auto* monna = app.add_subcommand("monna", "Monna map rho, its inverse, and ball images");
  monna->add_option("--x", margs.x, "finite p-adic expansion to map");
  monna->add_option("--real", margs.real, "nonnegative rational with p-power denominator to pull back");
  monna->add_option("--center", margs.center, "ball center");
  monna->add_option("--scale", margs.scale, "ball scale k (radius p^{-k})");

  int pgamma = 0;
  bool detail = false;
  auto* proj = app.add_subcommand("project", "projection onto V_gamma (or the W_gamma component)");
  proj->add_option("--file", file, "function file (JSON)")->required();
  proj->add_option("--gamma", pgamma, "scale")->required();
  proj->add_flag("--detail", detail, "return the component in W_gamma = V_{gamma-1} minus V_gamma");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(suite_names()))->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "padwav: " << e.what() << "\n";
    return 2;
  }

  Result result;
  try {
    require_prime(config.p);
    if (*classify) {
      result = cmd_classify(config, a, b);
    } else if (*wavelet) {
      result = cmd_wavelet(config, wargs);
    } else if (*coeffs) {
      result = cmd_coeffs(config, file, lo, hi, sidecar);
    } else if (*spectrum) {
      result = cmd_spectrum(config, alpha, slo, shi, cosets, samples);
    } else if (*monna) {
      result = cmd_monna(config, margs);
    } else if (*proj) {
      result = cmd_project(config, file, pgamma, detail);
    } else {
      result = cmd_verify(config, suite);
    }
  } catch (const Error& e) {
    err << "padwav: " << e.what() << "\n";
    return 2;
  }

  auto write = [&](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    return static_cast<bool>(f);
  };
  for (const auto& [path, text] : result.extra_files) {
    if (!write(path, text)) {
      err << "padwav: cannot write '" << path << "'\n";
      return 2;
    }
  }
  if (config.out.empty()) {
    out << result.text;
  } else if (!write(config.out, result.text)) {
    err << "padwav: cannot write '" << config.out << "'\n";
    return 2;
  }
  return result.code;
}

}  // namespace padwav::cli
