#include "padwav/schwartz.hpp"

#include <cmath>

#include "json.hpp"
#include "padwav/errors.hpp"

namespace padwav {

namespace {

// Refinements beyond this many cells are almost certainly a caller bug.
constexpr double kMaxRefinedCells = 4e6;

void require_same_prime(const SchwartzFunction& f, const SchwartzFunction& g) {
  if (f.prime() != g.prime()) {
    throw DomainError("prime mismatch: " + std::to_string(f.prime()) + " vs " +
                      std::to_string(g.prime()));
  }
}

}  // namespace

SchwartzFunction::SchwartzFunction(int p, int scale) : p_(p), scale_(scale) { require_prime(p); }

void SchwartzFunction::insert(const Ball& ball, Complex value) {
  if (ball.prime() != p_) throw DomainError("cell prime does not match the function");
  if (ball.scale() != scale_) {
    throw DomainError("cell scale " + std::to_string(ball.scale()) +
                      " differs from function scale " + std::to_string(scale_));
  }
  if (cells_.contains(ball)) {
    throw DomainError("cell with center " + to_string(ball.center_value()) + " listed twice");
  }
  if (value == Complex(0.0, 0.0)) return;
  cells_.emplace(ball, value);
}

int SchwartzFunction::support_exponent() const {
  if (cells_.empty()) throw DomainError("support exponent of the zero function");
  int r = -scale_;
  for (const auto& [ball, value] : cells_) r = std::max(r, -ball.center_low());
  return r;
}

Complex SchwartzFunction::value_on(const Ball& ball) const {
  if (ball.scale() < scale_) throw DomainError("ball is coarser than the function resolution");
  const auto it = cells_.find(ball.ancestor(scale_));
  return it == cells_.end() ? Complex(0.0, 0.0) : it->second;
}

SchwartzFunction indicator(const Ball& ball) {
  SchwartzFunction f(ball.prime(), ball.scale());
  f.insert(ball, 1.0);
  return f;
}

SchwartzFunction refine_to_scale(const SchwartzFunction& f, int scale) {
  if (scale < f.scale()) {
    throw DomainError("cannot refine from scale " + std::to_string(f.scale()) + " to coarser " +
                      std::to_string(scale));
  }
  if (static_cast<double>(f.size()) * std::pow(f.prime(), scale - f.scale()) > kMaxRefinedCells) {
    throw DomainError("refinement to scale " + std::to_string(scale) + " is too large");
  }
  std::vector<std::pair<Ball, Complex>> level(f.cells().begin(), f.cells().end());
  for (int k = f.scale(); k < scale; ++k) {
    std::vector<std::pair<Ball, Complex>> next;
    next.reserve(level.size() * static_cast<std::size_t>(f.prime()));
    for (const auto& [ball, value] : level) {
      for (auto& child : ball.children()) next.emplace_back(std::move(child), value);
    }
    level = std::move(next);
  }
  SchwartzFunction out(f.prime(), scale);
  for (const auto& [ball, value] : level) out.insert(ball, value);
  return out;
}

SchwartzFunction coarsen(const SchwartzFunction& f) {
  SchwartzFunction current = f;
  while (!current.empty()) {
    struct Group {
      int count = 0;
      Complex value;
      bool uniform = true;
    };
    std::map<Ball, Group> groups;
    for (const auto& [ball, value] : current.cells()) {
      auto& g = groups[ball.parent()];
      if (g.count == 0) {
        g.value = value;
      } else if (g.value != value) {
        g.uniform = false;
      }
      ++g.count;
    }
    const bool mergeable = std::all_of(groups.begin(), groups.end(), [&](const auto& entry) {
      return entry.second.uniform && entry.second.count == current.prime();
    });
    if (!mergeable) break;
    SchwartzFunction merged(current.prime(), current.scale() - 1);
    for (const auto& [parent, g] : groups) merged.insert(parent, g.value);
    current = std::move(merged);
  }
  return current;
}

Complex evaluate(const SchwartzFunction& f, const PAdic& x) {
  if (x.prime() != f.prime()) throw DomainError("prime mismatch in evaluate");
  const Ball cell = Ball::make(x, f.scale());
  const auto it = f.cells().find(cell);
  return it == f.cells().end() ? Complex(0.0, 0.0) : it->second;
}

SchwartzFunction linear_combine(Complex alpha, const SchwartzFunction& f, Complex beta,
                                const SchwartzFunction& g) {
  require_same_prime(f, g);
  const int scale = std::max(f.scale(), g.scale());
  const SchwartzFunction rf = refine_to_scale(f, scale);
  const SchwartzFunction rg = refine_to_scale(g, scale);
  std::map<Ball, Complex> sum;
  for (const auto& [ball, value] : rf.cells()) sum[ball] += alpha * value;
  for (const auto& [ball, value] : rg.cells()) sum[ball] += beta * value;
  SchwartzFunction out(f.prime(), scale);
  for (const auto& [ball, value] : sum) out.insert(ball, value);
  return out;
}

SchwartzFunction scaled(Complex alpha, const SchwartzFunction& f) {
  SchwartzFunction out(f.prime(), f.scale());
  for (const auto& [ball, value] : f.cells()) out.insert(ball, alpha * value);
  return out;
}

Complex inner_product(const SchwartzFunction& f, const SchwartzFunction& g) {
  require_same_prime(f, g);
  Complex acc(0.0, 0.0);
  if (f.scale() >= g.scale()) {
    const double mu = std::pow(static_cast<double>(f.prime()), -f.scale());
    for (const auto& [ball, value] : f.cells()) acc += std::conj(value) * g.value_on(ball) * mu;
  } else {
    const double mu = std::pow(static_cast<double>(g.prime()), -g.scale());
    for (const auto& [ball, value] : g.cells()) acc += std::conj(f.value_on(ball)) * value * mu;
  }
  return acc;
}

double norm_sq(const SchwartzFunction& f) { return inner_product(f, f).real(); }

Complex integral(const SchwartzFunction& f) {
  const double mu = std::pow(static_cast<double>(f.prime()), -f.scale());
  Complex acc(0.0, 0.0);
  for (const auto& [ball, value] : f.cells()) acc += value * mu;
  return acc;
}

SchwartzFunction affine_act(const PAdic& a, const PAdic& b, const SchwartzFunction& f) {
  if (a.prime() != f.prime() || b.prime() != f.prime()) {
    throw DomainError("prime mismatch in affine action");
  }
  const int v = a.valuation();
  const int scale = f.scale() + v;
  const double amplitude = std::pow(static_cast<double>(f.prime()), 0.5 * v);
  SchwartzFunction out(f.prime(), scale);
  for (const auto& [ball, value] : f.cells()) {
    const PAdic image = a * ball.center() + b;
    out.insert(Ball::make(image, scale), value * amplitude);
  }
  return out;
}

bool same_function(const SchwartzFunction& f, const SchwartzFunction& g) {
  if (f.prime() != g.prime()) return false;
  if (f.empty() || g.empty()) return f.empty() && g.empty();
  const SchwartzFunction cf = coarsen(f);
  const SchwartzFunction cg = coarsen(g);
  return cf.scale() == cg.scale() && cf.cells() == cg.cells();
}

SchwartzFunction load_function(const std::string& json_text, int precision) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("function file is not valid JSON: ") + e.what());
  }
  try {
    const int p = doc.at("p").get<int>();
    const int scale = doc.at("scale").get<int>();
    if (!is_prime(p)) throw ParseError("function file: p = " + std::to_string(p) + " is not prime");
    SchwartzFunction f(p, scale);
    std::map<Ball, std::pair<std::size_t, std::string>> seen;
    const auto& cells = doc.at("cells");
    if (!cells.is_array()) throw ParseError("function file: 'cells' must be an array");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto& cell = cells[i];
      const std::string center = cell.at("center").get<std::string>();
      const auto& value = cell.at("value");
      if (!value.is_array() || value.size() != 2) {
        throw ParseError("function file: cell " + std::to_string(i) + " value must be [re, im]");
      }
      const Ball ball = Ball::make(parse_padic(center, p, precision), scale);
      if (const auto it = seen.find(ball); it != seen.end()) {
        throw ParseError("function file: cells " + std::to_string(it->second.first) + " ('" +
                         it->second.second + "') and " + std::to_string(i) + " ('" + center +
                         "') overlap at scale " + std::to_string(scale));
      }
      seen.emplace(ball, std::make_pair(i, center));
      f.insert(ball, Complex(value[0].get<double>(), value[1].get<double>()));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("function file: ") + e.what());
  } catch (const PrecisionError& e) {
    throw ParseError(std::string("function file: ") + e.what());
  }
}

std::string dump_function(const SchwartzFunction& f) {
  nlohmann::json doc;
  doc["p"] = f.prime();
  doc["scale"] = f.scale();
  doc["cells"] = nlohmann::json::array();
  for (const auto& [ball, value] : f.cells()) {
    doc["cells"].push_back({{"center", to_string(ball.center_value())},
                            {"value", {value.real(), value.imag()}}});
  }
  return doc.dump(2);
}

}  // namespace padwav
