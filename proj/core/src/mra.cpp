#include "padwav/mra.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "padwav/errors.hpp"
#include "padwav/monna.hpp"
#include "padwav/sampling.hpp"

namespace padwav {

std::optional<int> membership_scale(const SchwartzFunction& f) {
  if (f.empty()) return std::nullopt;
  return -coarsen(f).scale();
}

bool is_member(const SchwartzFunction& f, int gamma) {
  const int target = -gamma;
  if (f.empty() || target >= f.scale()) return true;
  // every ball at the target scale meeting the support must be fully listed
  // with a single value
  const double needed = std::pow(static_cast<double>(f.prime()), f.scale() - target);
  if (needed > static_cast<double>(f.size())) return false;
  struct Group {
    std::size_t count = 0;
    Complex value;
    bool uniform = true;
  };
  std::map<Ball, Group> groups;
  for (const auto& [ball, value] : f.cells()) {
    Group& g = groups[ball.ancestor(target)];
    if (g.count == 0) {
      g.value = value;
    } else if (g.value != value) {
      g.uniform = false;
    }
    ++g.count;
  }
  return std::all_of(groups.begin(), groups.end(), [&](const auto& entry) {
    return entry.second.uniform && static_cast<double>(entry.second.count) == needed;
  });
}

SchwartzFunction project(const SchwartzFunction& f, int gamma) {
  const int target = -gamma;
  if (f.empty()) return SchwartzFunction(f.prime(), std::max(f.scale(), target));
  const SchwartzFunction c = coarsen(f);
  if (target >= c.scale()) return c;
  const double mu = std::pow(static_cast<double>(c.prime()), -c.scale());
  std::map<Ball, Complex> sums;
  for (const auto& [ball, value] : c.cells()) sums[ball.ancestor(target)] += value * mu;
  SchwartzFunction out(c.prime(), target);
  for (const auto& [ball, sum] : sums) out.insert(ball, sum / ball.measure_value());
  return out;
}

SchwartzFunction detail_component(const SchwartzFunction& f, int gamma) {
  return linear_combine(1.0, project(f, gamma - 1), -1.0, project(f, gamma));
}

SchwartzFunction generator(int p, int gamma, const CosetRep& n) {
  if (n.prime() != p) throw DomainError("prime mismatch in generator");
  const Ball ball = Ball::make(shift(n.padic(), -gamma), -gamma);
  SchwartzFunction g(p, -gamma);
  g.insert(ball, std::pow(static_cast<double>(p), -0.5 * gamma));
  return g;
}

bool MraReport::passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed; });
}

namespace {

void check(AxiomResult& result, bool ok, const std::string& what, const SchwartzFunction& f,
           int gamma) {
  ++result.checks;
  if (ok || !result.passed) {
    if (!ok) result.passed = false;
    return;
  }
  result.passed = false;
  result.detail = what + " at gamma = " + std::to_string(gamma);
  result.witness = f;
  result.witness_scale = gamma;
}

AxiomResult nesting(const std::vector<SchwartzFunction>& fs, int lo, int hi) {
  AxiomResult r;
  r.name = "nesting";
  for (const auto& f : fs) {
    if (f.empty()) continue;
    const int ms = *membership_scale(f);
    for (int g = lo; g <= hi; ++g) {
      const bool member = is_member(f, g);
      check(r, member == (g <= ms), "membership disagrees with membership_scale " +
                                        std::to_string(ms), f, g);
      if (member) check(r, is_member(f, g - 1), "V_gamma not contained in V_{gamma-1}", f, g);
    }
    const SchwartzFunction refined = refine_to_scale(f, f.scale() + 1);
    check(r, membership_scale(refined) == ms, "refinement changed the membership scale", f, ms);
  }
  return r;
}

AxiomResult scaling(const std::vector<SchwartzFunction>& fs, int p, int lo, int hi) {
  AxiomResult r;
  r.name = "scaling";
  const PAdic dilation = PAdic::power(p, 1);
  const PAdic origin = PAdic::zero(p);
  for (const auto& f : fs) {
    if (f.empty()) continue;
    // g(x) = p^{1/2} f(x / p)
    const SchwartzFunction g = affine_act(dilation, origin, f);
    for (int gamma = lo; gamma <= hi; ++gamma) {
      check(r, is_member(f, gamma) == is_member(g, gamma - 1),
            "f in V_gamma does not match f(p^-1 .) in V_{gamma-1}", f, gamma);
    }
    check(r, *membership_scale(g) == *membership_scale(f) - 1, "dilation did not shift the scale",
          f, *membership_scale(f));
  }
  return r;
}

AxiomResult translation(const std::vector<SchwartzFunction>& fs, int p, int lo, int hi,
                        const std::vector<CosetRep>& window) {
  AxiomResult r;
  r.name = "translation";
  const PAdic one = PAdic::power(p, 0);
  for (const auto& f : fs) {
    if (f.empty()) continue;
    for (const CosetRep& n : window) {
      const SchwartzFunction h = affine_act(one, n.padic(), f);
      for (int gamma = lo; gamma <= hi; ++gamma) {
        check(r, is_member(f, gamma) == is_member(h, gamma),
              "translation by " + n.to_string() + " changed membership", f, gamma);
      }
      check(r, std::abs(norm_sq(h) - norm_sq(f)) <= 1e-12 * std::max(1.0, norm_sq(f)),
            "translation by " + n.to_string() + " changed the norm", f, 0);
    }
  }
  return r;
}

AxiomResult orthonormal_generator(const std::vector<SchwartzFunction>& fs, int p,
                                  const std::vector<CosetRep>& window) {
  AxiomResult r;
  r.name = "orthonormal_generator";
  std::vector<SchwartzFunction> phis;
  for (const CosetRep& n : window) phis.push_back(generator(p, 0, n));
  for (std::size_t i = 0; i < phis.size(); ++i) {
    check(r, membership_scale(phis[i]) == 0, "generator translate is not exactly in V_0", phis[i],
          0);
    for (std::size_t k = 0; k < phis.size(); ++k) {
      const Complex expected = i == k ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      check(r, inner_product(phis[i], phis[k]) == expected,
            "Gram entry (" + window[i].to_string() + ", " + window[k].to_string() + ") is not exact",
            phis[i], 0);
    }
  }
  // members of V_0 expand exactly over the translates
  for (const auto& f : fs) {
    if (f.empty() || *membership_scale(f) < 0) continue;
    const SchwartzFunction f0 = refine_to_scale(coarsen(f), 0);
    SchwartzFunction sum(p, 0);
    for (const auto& [ball, value] : f0.cells()) {
      const SchwartzFunction phi = generator(p, 0, coset_rep(ball.center()));
      sum = linear_combine(1.0, sum, inner_product(phi, f0), phi);
    }
    check(r, same_function(sum, f), "expansion over generator translates differs", f, 0);
  }
  return r;
}

AxiomResult density(const std::vector<SchwartzFunction>& fs, int lo, int hi) {
  AxiomResult r;
  r.name = "density";
  for (const auto& f : fs) {
    if (f.empty()) continue;
    const int ms = *membership_scale(f);
    for (int gamma = std::min(lo, ms); gamma <= std::min(hi, ms); ++gamma) {
      check(r, same_function(project(f, gamma), f), "projection is not the identity", f, gamma);
    }
  }
  return r;
}

AxiomResult trivial_intersection(const std::vector<SchwartzFunction>& fs, int p) {
  AxiomResult r;
  r.name = "trivial_intersection";
  for (const auto& f : fs) {
    if (f.empty()) continue;
    const SchwartzFunction c = coarsen(f);
    const int m = c.support_exponent();
    const Complex total = integral(c);
    double previous = norm_sq(f);
    for (int gamma = m; gamma <= m + 3; ++gamma) {
      const SchwartzFunction proj = project(f, gamma);
      const Ball whole = Ball::make(PAdic::zero(p), -gamma);
      SchwartzFunction expected(p, -gamma);
      if (-gamma >= c.scale()) {
        expected = c;  // already a single cell: nothing to average
      } else {
        expected.insert(whole, total / whole.measure_value());
      }
      check(r, proj.scale() == expected.scale() && proj.cells() == expected.cells(),
            "projection is not the single-cell average", f, gamma);
      const double n2 = norm_sq(proj);
      const double law = std::norm(total) * std::pow(static_cast<double>(p), -gamma);
      check(r, std::abs(n2 - law) <= 1e-12 * std::max(1.0, law), "norm law |int f|^2 p^-gamma fails",
            f, gamma);
      check(r, n2 <= previous * (1.0 + 1e-12), "projection norm increased", f, gamma);
      previous = n2;
    }
  }
  return r;
}

}  // namespace

MraReport axiom_report(int p, const std::vector<SchwartzFunction>& functions, int gamma_lo,
                       int gamma_hi, int coset_count) {
  require_prime(p);
  if (functions.empty()) throw DomainError("axiom_report needs at least one test function");
  if (gamma_lo > gamma_hi) throw DomainError("empty gamma range");
  for (const auto& f : functions) {
    if (f.prime() != p) throw DomainError("test function prime differs from p");
  }
  const auto window = coset_window(p, coset_count);
  MraReport report;
  report.p = p;
  report.gamma_lo = gamma_lo;
  report.gamma_hi = gamma_hi;
  report.axioms.push_back(nesting(functions, gamma_lo, gamma_hi));
  report.axioms.push_back(scaling(functions, p, gamma_lo, gamma_hi));
  report.axioms.push_back(translation(functions, p, gamma_lo, gamma_hi, window));
  report.axioms.push_back(orthonormal_generator(functions, p, window));
  report.axioms.push_back(density(functions, gamma_lo, gamma_hi));
  report.axioms.push_back(trivial_intersection(functions, p));
  return report;
}

std::vector<SchwartzFunction> standard_test_functions(int p, int gamma_lo, int gamma_hi,
                                                      int coset_count) {
  const auto window = coset_window(p, coset_count);
  std::vector<SchwartzFunction> out;
  for (const CosetRep& n : window) out.push_back(generator(p, 0, n));
  for (int gamma = gamma_lo; gamma <= gamma_hi; ++gamma) {
    if (gamma == 0) continue;
    for (const CosetRep& n : window) out.push_back(generator(p, gamma, n));
  }
  return out;
}

double indicator_correspondence(int gamma, const CosetRep& n, int samples, std::uint64_t seed) {
  const int p = n.prime();
  const Ball ball = Ball::make(shift(n.padic(), -gamma), -gamma);
  const SchwartzFunction omega = indicator(ball);
  const Rational width = pow_p(p, gamma);
  const Rational offset = width * rho(n.padic()).value();
  Rng rng(seed);
  double worst = 0.0;
  for (const PAdic& x : sample_points(rng, ball, samples)) {
    const Rational t = rho(x).value() - offset;
    const double real_side = (t >= 0 && t < width) ? 1.0 : 0.0;
    worst = std::max(worst, std::abs(evaluate(omega, x) - Complex(real_side, 0.0)));
  }
  return worst;
}

}  // namespace padwav
