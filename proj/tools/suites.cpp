#include "suites.hpp"

#include <algorithm>
#include <cmath>

#include "padwav/errors.hpp"
#include "padwav/monna.hpp"
#include "padwav/mra.hpp"
#include "padwav/sampling.hpp"
#include "padwav/vladimirov.hpp"

namespace padwav::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kMaxWitnesses = 5;

struct Check {
  Check(std::string name, double tolerance) : name(std::move(name)), tolerance(tolerance) {}

  std::string name;
  double tolerance = 0.0;
  long cases = 0;
  double max_error = 0.0;
  json witnesses = json::array();
  std::string note;

  void record(double error, const std::string& where) {
    ++cases;
    max_error = std::max(max_error, error);
    if (!(error <= tolerance) && witnesses.size() < kMaxWitnesses) {
      witnesses.push_back({{"case", where}, {"error", error}});
    }
  }
  bool passed() const { return witnesses.empty(); }

  json to_json() const {
    json out = {{"name", name}, {"cases", cases},         {"max_error", max_error},
                {"tolerance", tolerance}, {"passed", passed()}, {"witnesses", witnesses}};
    if (!note.empty()) out["note"] = note;
    return out;
  }
};

json report(const std::string& suite, int p, std::uint64_t seed, const std::vector<Check>& checks) {
  json out = {{"suite", suite}, {"p", p}, {"seed", seed}};
  bool ok = true;
  out["checks"] = json::array();
  for (const Check& c : checks) {
    ok = ok && c.passed();
    out["checks"].push_back(c.to_json());
  }
  out["passed"] = ok;
  return out;
}

std::string index_string(const WaveletIndex& idx) {
  return "(" + std::to_string(idx.gamma) + ", " + idx.n.to_string() + ", " + std::to_string(idx.j) + ")";
}

std::string affine_string(const AffineParams& ab) {
  return "a=" + to_literal(ab.a) + " b=" + to_literal(ab.b);
}

// (a, b) with valuations uniform in [-6, 6] and uniform digits
AffineParams random_affine(Rng& rng, int p) {
  return AffineParams(random_finite(rng, p, -6, 6, 6), random_finite(rng, p, -6, 6, 8));
}

json lemma_suite(int p, std::uint64_t seed) {
  Rng rng(seed);
  Check pointwise{"pointwise_coincidence", 1e-12};
  for (int i = 0; i < 1000; ++i) {
    const AffineParams ab = random_affine(rng, p);
    const Classification c = classify_affine(ab);
    const SchwartzFunction basis = basis_wavelet(c.index);
    const Complex factor = c.phase.to_complex();
    double worst = 0.0;
    for (const PAdic& x : sample_points(rng, Ball::make(ab.b, ab.a.valuation()), 200)) {
      worst = std::max(worst, std::abs(affine_wavelet_at(ab, x) - factor * evaluate(basis, x)));
    }
    pointwise.record(worst, affine_string(ab));
  }
  Check roundtrip{"roundtrip", 0.0};
  const auto cosets = coset_window(p, 20);
  for (int gamma = -4; gamma <= 4; ++gamma) {
    for (int j = 1; j < p; ++j) {
      for (const CosetRep& n : cosets) {
        const WaveletIndex idx(gamma, n, j);
        const Classification c = classify_affine(affine_params_of(idx));
        roundtrip.record(c.index == idx && c.phase.is_identity() ? 0.0 : 1.0, index_string(idx));
      }
    }
  }
  return report("lemma", p, seed, {pointwise, roundtrip});
}

json ortho_suite(int p, std::uint64_t seed) {
  Check gram{"gram_identity", 1e-12};
  std::vector<std::pair<WaveletIndex, SchwartzFunction>> basis;
  for (int gamma = -2; gamma <= 2; ++gamma) {
    for (const CosetRep& n : coset_window(p, 10)) {
      for (int j = 1; j < p; ++j) {
        WaveletIndex idx(gamma, n, j);
        SchwartzFunction f = basis_wavelet(idx);
        basis.emplace_back(std::move(idx), std::move(f));
      }
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Complex expected = i == k ? Complex(1.0) : Complex(0.0);
      gram.record(std::abs(inner_product(basis[i].second, basis[k].second) - expected),
                  index_string(basis[i].first) + " x " + index_string(basis[k].first));
    }
  }
  Rng rng(seed);
  Check transform{"transform_routes", 1e-12};
  for (int i = 0; i < 200; ++i) {
    const SchwartzFunction f = random_function(rng, p, 2, 2, 6);
    const AffineParams ab(random_finite(rng, p, -3, 3, 4), random_finite(rng, p, -3, 3, 6));
    const TransformValue t = continuous_transform(f, ab);
    transform.record(std::abs(t.direct - t.via_basis), affine_string(ab));
  }
  return report("ortho", p, seed, {gram, transform});
}

json admissibility_suite(int p, std::uint64_t seed) {
  Check constant{"admissibility_constant", 1e-12};
  const double c = admissibility_constant(p, 1);
  constant.record(std::abs(c - 1.0 / p), "depth 1");
  json out = report("admissibility", p, seed, {constant});
  out["constant"] = c;
  out["expected"] = 1.0 / p;
  return out;
}

json vladimirov_suite(int p, std::uint64_t seed) {
  Check eigen{"eigenvalues", 1e-10};
  for (double alpha : {0.5, 1.0, 2.0}) {
    const VladimirovParams params(alpha, p);
    for (int gamma = -3; gamma <= 3; ++gamma) {
      for (const CosetRep& n : coset_window(p, 5)) {
        for (int j = 1; j < p; ++j) {
          const WaveletIndex idx(gamma, n, j);
          eigen.record(eigenvalue_check(idx, params, 20, seed),
                       "alpha=" + std::to_string(alpha) + " " + index_string(idx));
        }
      }
    }
  }
  // Omega: gamma_p (1 - 1/p) p^{-alpha} / (1 - p^{-alpha}) on Z_p and
  // -gamma_p |x|^{-1-alpha} off it
  Check omega{"omega_closed_form", 1e-12};
  const SchwartzFunction unit = indicator(Ball::unit(p));
  for (double alpha : {0.5, 1.0, 2.0}) {
    const VladimirovParams params(alpha, p);
    const double g = gamma_p(p, alpha);
    const double inside = g * (1.0 - 1.0 / p) * std::pow(p, -alpha) / (1.0 - std::pow(p, -alpha));
    for (int e = 0; e <= 3; ++e) {
      const PAdic x = PAdic::power(p, e);
      omega.record(std::abs(apply_pointwise(unit, params, x) - inside), "x=" + to_literal(x));
    }
    for (int r = 1; r <= 4; ++r) {
      const PAdic x = PAdic::power(p, -r);
      const double outside = -g * std::pow(p, -r * (1.0 + alpha));
      omega.record(std::abs(apply_pointwise(unit, params, x) - outside), "x=" + to_literal(x));
    }
  }
  return report("vladimirov", p, seed, {eigen, omega});
}

json axioms_json(const MraReport& r) {
  json out = json::array();
  for (const AxiomResult& a : r.axioms) {
    json entry = {{"name", a.name}, {"passed", a.passed}, {"checks", a.checks}, {"detail", a.detail}};
    if (a.witness) entry["witness"] = json::parse(dump_function(*a.witness));
    if (a.witness_scale) entry["witness_scale"] = *a.witness_scale;
    out.push_back(std::move(entry));
  }
  return out;
}

json mra_suite(int p, std::uint64_t seed) {
  const MraReport standard = axiom_report(p, standard_test_functions(p, -3, 3, 6), -3, 3, 6);
  Rng rng(seed);
  std::vector<SchwartzFunction> randoms;
  for (int i = 0; i < 200; ++i) randoms.push_back(random_function(rng, p, 1, 2, 5));
  const MraReport random = axiom_report(p, randoms, -3, 3, 4);
  Check axioms{"axioms", 0.0};
  for (const MraReport* r : {&standard, &random}) {
    for (const AxiomResult& a : r->axioms) axioms.record(a.passed ? 0.0 : 1.0, a.name + ": " + a.detail);
  }
  Check correspondence{"indicator_correspondence", 0.0};
  for (int gamma = -3; gamma <= 3; ++gamma) {
    for (const CosetRep& n : coset_window(p, 8)) {
      correspondence.record(indicator_correspondence(gamma, n, 60, seed),
                            "gamma=" + std::to_string(gamma) + " n=" + n.to_string());
    }
  }
  json out = report("mra", p, seed, {axioms, correspondence});
  out["standard"] = {{"gamma_lo", standard.gamma_lo}, {"gamma_hi", standard.gamma_hi},
                     {"passed", standard.passed()}, {"axioms", axioms_json(standard)}};
  out["random"] = {{"functions", randoms.size()}, {"gamma_lo", random.gamma_lo},
                   {"gamma_hi", random.gamma_hi}, {"passed", random.passed()},
                   {"axioms", axioms_json(random)}};
  return out;
}

json monna_suite(int p, std::uint64_t seed) {
  Rng rng(seed);
  Check measure{"measure_conservation", 0.0};
  for (int i = 0; i < 500; ++i) {
    const int scale = std::uniform_int_distribution<int>(-4, 4)(rng);
    const Ball b = Ball::make(random_finite(rng, p, -6, 6, 8), scale);
    const RealInterval image = ball_image(b);
    bool ok = image.length == b.measure();
    for (int s = 0; s < 4; ++s) ok = ok && image.contains(rho(random_point_in(rng, b, 4)).value());
    measure.record(ok ? 0.0 : 1.0, "center=" + to_literal(b.center()) + " scale=" + std::to_string(scale));
  }
  Check holder{"holder_inequality", 0.0};
  Check bijection{"bijection", 0.0};
  for (int i = 0; i < 1000; ++i) {
    const PAdic x = random_finite(rng, p, -5, 5, 7);
    const PAdic y = random_finite(rng, p, -5, 5, 7);
    const Rational gap = abs(rho(x).value() - rho(y).value());
    // x - y is a windowed value, so equal pairs are settled before taking its norm
    const Rational distance = x == y ? Rational(0) : norm_and_valuation(x - y).norm;
    holder.record(gap <= distance ? 0.0 : to_double(gap - distance), "x=" + to_literal(x) + " y=" + to_literal(y));
    const DyadicReal r = rho(x);
    bijection.record(rho_inverse(r) == x ? 0.0 : 1.0, "x=" + to_literal(x));
  }
  Check haar{"haar_correspondence", 1e-12};
  if (p == 2) {
    for (int gamma = -4; gamma <= 4; ++gamma) {
      for (const CosetRep& n : coset_window(2, 10)) {
        haar.record(haar_correspondence(gamma, n, 500, seed),
                    "gamma=" + std::to_string(gamma) + " n=" + n.to_string());
      }
    }
  } else {
    haar.note = "defined for p = 2 only; not run";
  }
  return report("monna", p, seed, {measure, holder, bijection, haar});
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "lemma", "ortho", "vladimirov", "mra", "monna", "admissibility"};
  return names;
}

json run_suite(const std::string& name, int p, std::uint64_t seed) {
  require_prime(p);
  if (name == "lemma") return lemma_suite(p, seed);
  if (name == "ortho") return ortho_suite(p, seed);
  if (name == "admissibility") return admissibility_suite(p, seed);
  if (name == "vladimirov") return vladimirov_suite(p, seed);
  if (name == "mra") return mra_suite(p, seed);
  if (name == "monna") return monna_suite(p, seed);
  if (name == "all") {
    json out = {{"suite", "all"}, {"p", p}, {"seed", seed}, {"suites", json::array()}};
    bool ok = true;
    for (const std::string& s : suite_names()) {
      if (s == "all") continue;
      json r = run_suite(s, p, seed);
      ok = ok && r["passed"].get<bool>();
      out["suites"].push_back(std::move(r));
    }
    out["passed"] = ok;
    return out;
  }
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace padwav::cli
