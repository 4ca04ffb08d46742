#include "commands.hpp"

#include <cmath>
#include <sstream>

#include "branchlab/branchlab.hpp"

namespace branchlab::cli {

namespace {

int startType(const Config& c, const Model& m) {
  return c.has("start") ? m.typeIndex(c.string("start")) : 0;
}

PsiPreset psiPreset(const std::string& s) {
  if (s == "unit") return PsiPreset::Unit;
  if (s == "harmonic") return PsiPreset::Harmonic;
  throw InvalidInput("psi must be 'unit' or 'harmonic', got '" + s + "'");
}

std::vector<double> leafWeights(const Config& c, const Model& m) {
  auto w = c.reals("leaf_weights", std::vector<double>(m.typeCount(), 1.0));
  if (w.size() != m.typeCount()) throw InvalidInput("leaf_weights needs one entry per type");
  return w;
}

Integration integration(const Config& c, std::uint64_t seed, unsigned threads) {
  Integration how = Integration::grid(200);
  if (c.has("integration")) {
    const auto& j = c.raw("integration");
    if (!j.is_object()) throw InvalidInput("'integration' must be an object");
    for (const auto& [k, _] : j.items())
      if (k != "method" && k != "cells" && k != "samples") throw InvalidInput("unknown integration key '" + k + "'");
    const std::string method = j.value("method", std::string("grid"));
    if (method == "grid") {
      how = Integration::grid(j.value("cells", 200));
    } else if (method == "monte-carlo") {
      how = Integration::monteCarlo(j.value("samples", std::size_t{1'000'000}), seed);
    } else {
      throw InvalidInput("integration method must be 'grid' or 'monte-carlo'");
    }
  }
  how.threads = threads;
  return how;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? std::string(1, sep) : "") + parts[i];
  return s;
}

ShapeFunctional heightAndWeights(int R, const std::vector<double>& w) {
  return functionals::product(functionals::heightAtMost(R), functionals::leafWeights(w));
}

}  // namespace

CommandResult modelCheck(const Config& c, const RunContext&) {
  c.allowOnly({"model", "tolerance", "seed"});
  const Model m = c.model();
  const double tol = c.real("tolerance", 1e-9);
  const Eigenpair ep = eigenpair(m);
  const double s2 = sigmaSquared(m, ep);
  const bool critical = ep.critical(tol);
  CommandResult r;
  r.table.columns = {"quantity", "type", "value"};
  r.table.add({"perron", "", number(ep.perron)});
  r.table.add({"sigma2", "", number(s2)});
  r.table.add({"primitive", "", true});
  r.table.add({"critical", "", critical});
  for (std::size_t x = 0; x < m.typeCount(); ++x) r.table.add({"h", m.typeName(static_cast<int>(x)), number(ep.h(static_cast<Eigen::Index>(x)))});
  for (std::size_t x = 0; x < m.typeCount(); ++x) r.table.add({"pi", m.typeName(static_cast<int>(x)), number(ep.pi(static_cast<Eigen::Index>(x)))});
  for (const auto& w : ep.warnings) r.table.add({"warning", "", w});
  r.exitCode = critical ? kOk : kModelProperty;
  return r;
}

CommandResult simulateTrees(const Config& c, const RunContext& ctx) {
  c.allowOnly({"model", "start", "generations", "runs", "seed"});
  const Model m = c.model();
  const int x0 = startType(c, m);
  const int gens = c.integer("generations");
  const int runs = c.integer("runs", 1);
  if (gens < 0 || runs < 1) throw InvalidInput("need generations >= 0 and runs >= 1");
  CommandResult r;
  r.table.columns = {"run", "size", "final_generation", "tree", "marks"};
  for (int i = 0; i < runs; ++i) {
    const MarkedTree t = simulate(m, x0, gens, deriveSeed(ctx.seed, static_cast<std::uint64_t>(i)));
    long last = 0;
    for (const auto& v : t.tree.vertices()) last += static_cast<int>(v.generation()) == gens;
    const TreeDump d = dumpMarkedTree(t, m);
    r.table.add({i, static_cast<long>(t.tree.size()), last, d.tree, join(d.marks, ' ')});
  }
  return r;
}

CommandResult verifyManyToFew(const Config& c, const RunContext& ctx) {
  c.allowOnly({"model", "k", "R", "psi", "start", "leaf_weights", "tolerance", "cap", "seed"});
  const Model m = c.model();
  const auto ks = c.integers("k"), Rs = c.integers("R");
  const auto psis = c.strings("psi", std::vector<std::string>{"unit", "harmonic"});
  std::vector<std::string> allTypes = m.typeNames();
  const auto starts = c.strings("start", allTypes);
  const auto w = leafWeights(c, m);
  const double tol = c.real("tolerance", 1e-9);
  const auto cap = static_cast<std::uint64_t>(c.real("cap", static_cast<double>(kDefaultEnumerationCap)));

  CommandResult r;
  r.table.columns = {"k", "R", "psi", "start", "bruteforce", "m2f", "recursive", "max_abs_diff", "status"};
  bool failed = false;
  for (const auto& p : psis) {
    const SpineKernel kernel = SpineKernel::build(m, psiPreset(p));
    for (int k : ks)
      for (int R : Rs)
        for (const auto& s : starts) {
          const int x = m.typeIndex(s);
          const MomentQuery q{k, x, heightAndWeights(R, w), R};
          const double m2f = momentManyToFew(kernel, q, ctx.threads);
          const double rec = momentRecursive(kernel, x, heightIndicatorProducts(k, R, w));
          double bf = std::nan("");
          std::string status;
          try {
            bf = momentBruteforce(m, q, R, cap);
          } catch (const EnumerationCapExceeded&) {
            status = "skipped";
          }
          double diff = std::abs(m2f - rec);
          if (status.empty()) {
            diff = std::max({diff, std::abs(m2f - bf), std::abs(rec - bf)});
            status = diff <= tol ? "pass" : "fail";
          } else if (diff > tol) {
            status = "fail";
          }
          failed = failed || status == "fail";
          r.table.add({k, R, p, s, number(bf), number(m2f), number(rec), number(diff), status});
        }
  }
  r.exitCode = failed ? kVerification : kOk;
  return r;
}

CommandResult moments(const Config& c, const RunContext& ctx) {
  c.allowOnly({"model", "k", "R", "psi", "start", "leaf_weights", "methods", "cap", "seed"});
  const Model m = c.model();
  const int k = c.integer("k"), R = c.integer("R");
  const int x = startType(c, m);
  const auto w = leafWeights(c, m);
  const SpineKernel kernel = SpineKernel::build(m, psiPreset(c.string("psi", "harmonic")));
  const auto cap = static_cast<std::uint64_t>(c.real("cap", static_cast<double>(kDefaultEnumerationCap)));
  const MomentQuery q{k, x, heightAndWeights(R, w), R};
  CommandResult r;
  r.table.columns = {"method", "value"};
  for (const auto& method : c.strings("methods", std::vector<std::string>{"m2f", "recursive", "bruteforce"})) {
    double v;
    if (method == "m2f")
      v = momentManyToFew(kernel, q, ctx.threads);
    else if (method == "recursive")
      v = momentRecursive(kernel, x, heightIndicatorProducts(k, R, w));
    else if (method == "bruteforce")
      v = momentBruteforce(m, q, R, cap);
    else
      throw InvalidInput("unknown method '" + method + "'");
    r.table.add({method, number(v)});
  }
  return r;
}

CommandResult convergence(const Config& c, const RunContext& ctx) {
  c.allowOnly({"model", "k", "R", "start", "leaf_weights", "n", "kolmogorov_n", "rescaled", "ultrametric",
               "integration", "seed"});
  const Model m = c.model();
  ConvergenceOptions o;
  o.k = c.integer("k", 1);
  o.R = c.real("R", 1.0);
  o.x0 = startType(c, m);
  const auto w = leafWeights(c, m);
  const double R = o.R;
  o.F = [w, R](const ContinuousShape& s, const std::vector<int>& t) {
    double v = 1;
    for (std::size_t i = 0; i < s.k(); ++i) {
      if (s.l[i] > R + 1e-12) return 0.0;
      v *= w[static_cast<std::size_t>(t[i])];
    }
    return v;
  };
  o.nGrid = c.integers("n");
  o.kolmogorovGrid = c.integers("kolmogorov_n", std::vector<int>{});
  o.rescaled = c.boolean("rescaled", true);
  o.ultrametric = c.boolean("ultrametric", true);
  o.limitIntegration = integration(c, ctx.seed, ctx.threads);
  o.threads = ctx.threads;
  const ConvergenceReport rep = convergenceReport(m, o);
  CommandResult r;
  r.table.meta["critical"] = rep.critical;
  r.table.meta["perron"] = number(rep.perron);
  r.table.meta["sigma2"] = number(rep.sigma2);
  for (std::size_t i = 0; i < rep.warnings.size(); ++i) r.table.meta["warning_" + std::to_string(i)] = rep.warnings[i];
  r.table.columns = {"n", "observed", "limit", "rel_error", "path"};
  for (const auto& row : rep.rows)
    r.table.add({row.n, number(row.observed), number(row.limit), number(row.relError), row.path});
  r.exitCode = rep.critical ? kOk : kModelProperty;
  return r;
}

CommandResult survival(const Config& c, const RunContext&) {
  c.allowOnly({"model", "n", "seed"});
  const Model m = c.model();
  CommandResult r;
  r.table.columns = {"n", "type", "scaled", "limit", "abs_error"};
  bool critical = true;
  for (const auto& row : kolmogorovProfile(m, c.integers("n"))) {
    critical = critical && !std::isnan(row.limit);
    r.table.add({row.n, m.typeName(row.type), number(row.scaled), number(row.limit),
                 number(std::abs(row.scaled - row.limit))});
  }
  r.exitCode = critical ? kOk : kModelProperty;
  return r;
}

CommandResult cpp(const Config& c, const RunContext& ctx) {
  c.allowOnly({"model", "sigma2", "pi", "k", "phi", "samples", "epsilon", "positions_per_sample", "grid_cells", "seed"});
  LimitQuery q;
  q.k = c.integer("k", 1);
  if (c.has("model")) {
    if (c.has("sigma2") || c.has("pi")) throw InvalidInput("give either 'model' or 'sigma2'/'pi', not both");
    const Model m = c.model();
    const Eigenpair ep = eigenpair(m);
    if (!ep.critical()) throw ModelPropertyError("the CPP limit needs a critical model");
    q.sigma2 = sigmaSquared(m, ep);
    q.pi.assign(ep.pi.data(), ep.pi.data() + ep.pi.size());
  } else {
    q.sigma2 = c.real("sigma2", 1.0);
    q.pi = c.reals("pi", std::vector<double>{1.0});
  }
  // phi: {"kind": "one"} or {"kind": "distance_at_least", "threshold": t} (all pairs)
  std::string kind = "one";
  double threshold = 0;
  if (c.has("phi")) {
    const auto& j = c.raw("phi");
    if (!j.is_object()) throw InvalidInput("'phi' must be an object");
    for (const auto& [key, _] : j.items())
      if (key != "kind" && key != "threshold") throw InvalidInput("unknown phi key '" + key + "'");
    kind = j.value("kind", std::string("one"));
    threshold = j.value("threshold", 0.0);
  }
  if (kind == "one") {
    q.phi = [](const DistanceMatrix&, const std::vector<int>&) { return 1.0; };
  } else if (kind == "distance_at_least") {
    q.phi = [threshold](const DistanceMatrix& d, const std::vector<int>&) {
      for (std::size_t i = 1; i < d.dim(); ++i)
        for (std::size_t j = i + 1; j < d.dim(); ++j)
          if (d(i, j) < threshold) return 0.0;
      return 1.0;
    };
  } else {
    throw InvalidInput("phi kind must be 'one' or 'distance_at_least'");
  }
  CppMonteCarloOptions o;
  o.samples = static_cast<std::size_t>(c.integer("samples", 100'000));
  o.epsilon = c.real("epsilon", 1e-3);
  o.positionsPerSample = static_cast<std::size_t>(c.integer("positions_per_sample", 8));
  o.seed = ctx.seed;
  o.threads = ctx.threads;
  const Estimate e = cppMonomialMonteCarlo(q, o);
  const double formula = cppMoment(q, Integration::grid(c.integer("grid_cells", 1000))).value;
  const double z = (e.value - formula) / e.standardError;
  CommandResult r;
  r.table.columns = {"k", "sigma2", "mc", "stderr", "formula", "z", "status"};
  const bool ok = std::abs(z) <= 3;
  r.table.add({q.k, number(q.sigma2), number(e.value), number(e.standardError), number(formula), number(z),
               ok ? "pass" : "fail"});
  r.exitCode = ok ? kOk : kVerification;
  return r;
}

}  // namespace branchlab::cli
