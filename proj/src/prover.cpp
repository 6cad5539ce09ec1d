#include "filiform/prover.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <set>
#include <thread>

#include <json.hpp>

namespace filiform {

namespace {

int sweep_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("FILIFORM_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v < 1024) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return static_cast<int>(hw);
}

bool in_empty_region(const Triple& t) {
  auto region = enumerate_empty_region(t.n);
  return std::find(region.begin(), region.end(), t) != region.end();
}

bool nondegenerate(const LieAlgebra& g, const Triple& t) {
  auto nonzero = [&](int i, int j) {
    for (const auto& p : g.bracket_basis(i, j))
      if (!p.is_zero()) return true;
    return false;
  };
  return nonzero(t.z1, t.n) && nonzero(t.z2, t.z2 + 1);
}

}  // namespace

EmptinessCertificate emptiness_certificate(const Triple& t) {
  if (!in_empty_region(t))
    throw Error(Errc::NotInRegion,
                "triple " + t.str() + " is outside the region 4 <= z1 <= 2(n-z2)-4, z1 <= z2 <= n-3 <= 2z2-5");
  EmptinessCertificate cert;
  cert.triple = t;
  CombinatorialContext ctx = context(t);
  cert.p = ctx.p;
  cert.q = ctx.q;
  cert.r = ctx.r;

  // step 0: alpha_1 = 0, because its Jacobiator coefficient factor is nonzero
  Polynomial a1sq = alpha1_coefficient(t);
  // extract the scalar factor of alpha_1^2
  cert.alpha1_factor = a1sq.is_zero() ? Rational(0) : a1sq.terms().front().second;
  if (cert.alpha1_factor.is_zero())
    throw Error(Errc::SignPatternFailure,
                "alpha1 coefficient vanishes at " + t.str() + "; the first proof step would fail");

  ProofCoeffs pc = proof_coeffs(ctx);
  cert.a0 = pc.a0;
  cert.b0 = pc.b0;
  cert.a1 = pc.a1;
  cert.b1 = pc.b1;
  cert.c1 = pc.c1;
  cert.a_prime = pc.a_prime;
  cert.b_prime = pc.b_prime;

  cert.signs_ok = pc.a0.sign() < 0 && pc.b0.sign() < 0 && pc.a_prime.sign() >= 0 &&
                  pc.b_prime.sign() > 0 && pc.c1.sign() < 0;
  if (!cert.signs_ok)
    throw Error(Errc::SignPatternFailure,
                "sign pattern a0<0, b0<0, a'>=0, b'>0, c1<0 fails at " + t.str() + ": a0=" + pc.a0.str() +
                    " b0=" + pc.b0.str() + " a'=" + pc.a_prime.str() + " b'=" + pc.b_prime.str() +
                    " c1=" + pc.c1.str());

  cert.lhs = pc.b0 * pc.b0 * pc.a_prime;
  cert.rhs = pc.a0 * (pc.a0 * pc.c1 - pc.b0 * pc.b_prime);
  // the sign pattern already forces lhs >= 0 > rhs; record the violation exactly
  cert.relation_violated = cert.lhs != cert.rhs && cert.lhs >= Rational(0) && cert.rhs < Rational(0);
  if (!cert.relation_violated)
    throw Error(Errc::SignPatternFailure,
                "contradiction relation not violated at " + t.str() + ": lhs=" + cert.lhs.str() +
                    " rhs=" + cert.rhs.str());

  cert.steps = std::min(t.n - t.z2 - 1, t.z2 - t.z1);
  for (int l = 1; l <= cert.steps; ++l)
    cert.step_conclusions.push_back("gamma_" + std::to_string(l) + " = alpha_" + std::to_string(l + 1) + " = 0");

  if (t.z1 == t.z2) {
    cert.terminal = "alpha_1 = 0 already forces [e_{z2}, e_{z2+1}] = 0, contradicting z2";
  } else if (cert.steps == t.z2 - t.z1 && cert.steps == t.n - t.z2 - 1) {
    cert.terminal = "[e_{z1}, e_n] = 0 and [e_{z2}, e_{z2+1}] = 0, contradicting z1 and z2";
  } else if (cert.steps == t.n - t.z2 - 1) {
    cert.terminal = "[e_{z1}, e_n] = 0, contradicting the definition of z1";
  } else {
    cert.terminal = "[e_{z2}, e_{z2+1}] = 0, contradicting the definition of z2";
  }
  cert.conclusion = true;
  return cert;
}

std::string EmptinessCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["triple"] = {triple.z1, triple.z2, triple.n};
  j["p"] = p;
  j["q"] = q;
  j["r"] = r;
  j["alpha1_factor"] = alpha1_factor.str();
  j["a0"] = a0.str();
  j["b0"] = b0.str();
  j["a1"] = a1.str();
  j["b1"] = b1.str();
  j["c1"] = c1.str();
  j["a_prime"] = a_prime.str();
  j["b_prime"] = b_prime.str();
  j["signs_ok"] = signs_ok;
  j["lhs"] = lhs.str();
  j["rhs"] = rhs.str();
  j["relation_violated"] = relation_violated;
  j["steps"] = steps;
  j["step_conclusions"] = step_conclusions;
  j["terminal"] = terminal;
  j["conclusion"] = conclusion;
  return j.dump(2);
}

SearchReport grid_search(const Triple& t, const std::vector<Rational>& grid, long long budget,
                         std::uint64_t seed) {
  if (!t.valid()) throw Error(Errc::InvalidTriple, "invalid triple " + t.str());
  if (grid.empty()) throw Error(Errc::PreconditionFailure, "empty grid");
  SearchReport rep;
  rep.triple = t;
  rep.grid = grid;
  rep.budget = budget;
  rep.seed = seed;

  LieAlgebra symbolic = generate_general(GeneralLawParams::symbolic(t));
  std::vector<std::string> names = symbolic.parameters();
  const size_t mu = names.size();

  // candidate list: exhaustive when |grid|^mu fits the budget, else seeded
  double total = 1;
  bool exhaustive = true;
  for (size_t i = 0; i < mu; ++i) {
    total *= static_cast<double>(grid.size());
    if (total > static_cast<double>(budget)) {
      exhaustive = false;
      break;
    }
  }
  rep.exhaustive = exhaustive;

  std::vector<std::vector<size_t>> candidates;
  if (exhaustive) {
    std::vector<size_t> idx(mu, 0);
    while (true) {
      candidates.push_back(idx);
      size_t pos = 0;
      while (pos < mu) {
        if (++idx[pos] < grid.size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == mu) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, grid.size() - 1);
    for (long long c = 0; c < budget; ++c) {
      std::vector<size_t> idx(mu);
      for (size_t i = 0; i < mu; ++i) idx[i] = pick(rng);
      candidates.push_back(std::move(idx));
    }
  }
  rep.tested = static_cast<long long>(candidates.size());

  std::vector<char> hits(candidates.size(), 0);
  std::atomic<size_t> next{0};
  int nthreads = std::min<int>(sweep_threads(), static_cast<int>(candidates.size() ? candidates.size() : 1));
  auto worker = [&] {
    while (true) {
      size_t c = next.fetch_add(1);
      if (c >= candidates.size()) return;
      std::map<std::string, Rational> assignment;
      for (size_t i = 0; i < mu; ++i) assignment[names[i]] = grid[candidates[c][i]];
      LieAlgebra g = symbolic.specialize(assignment);
      if (!nondegenerate(g, t)) continue;
      if (!g.jacobi_check().empty()) continue;
      hits[c] = 1;
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (size_t c = 0; c < candidates.size(); ++c) {
    if (!hits[c]) continue;
    FoundInstance inst;
    for (size_t i = 0; i < mu; ++i) inst.params[names[i]] = grid[candidates[c][i]];
    rep.found.push_back(std::move(inst));
  }
  return rep;
}

std::string SearchReport::to_json() const {
  nlohmann::ordered_json j;
  j["triple"] = {triple.z1, triple.z2, triple.n};
  std::vector<std::string> gs;
  for (const auto& g : grid) gs.push_back(g.str());
  j["grid"] = gs;
  j["budget"] = budget;
  j["seed"] = seed;
  j["exhaustive"] = exhaustive;
  j["tested"] = tested;
  j["evidence"] = "heuristic only: absence on a grid does not prove emptiness";
  nlohmann::ordered_json found_json = nlohmann::ordered_json::array();
  for (const auto& inst : found) {
    nlohmann::ordered_json o;
    for (const auto& [k, v] : inst.params) o[k] = v.str();
    found_json.push_back(std::move(o));
  }
  j["found"] = std::move(found_json);
  return j.dump(2);
}

TheoremVerdict derived_length_theorem_check(const Triple& t,
                                            const std::map<std::string, Rational>& fag_params) {
  GeneralLawParams params = specialize_fag(GeneralLawParams::symbolic(t), FagRange::Full);
  LieAlgebra symbolic = generate_general(params);
  std::map<std::string, Rational> assignment;
  for (const auto& name : symbolic.parameters()) {
    auto it = fag_params.find(name);
    assignment[name] = it == fag_params.end() ? Rational(0) : it->second;
  }
  LieAlgebra g = symbolic.specialize(assignment);
  if (!g.jacobi_check().empty())
    throw Error(Errc::PreconditionFailure, "instance at " + t.str() + " is not Jacobi-consistent");
  if (!nondegenerate(g, t))
    throw Error(Errc::PreconditionFailure, "instance at " + t.str() + " is degenerate");
  ZInvariants z = invariants_z(g, true);
  if (z.model || z.z1 != t.z1 || z.z2 != t.z2)
    throw Error(Errc::PreconditionFailure, "instance does not realize its triple " + t.str());

  SeriesReport rep = classify(g);
  TheoremVerdict v;
  v.triple = t;
  v.derived_length = rep.derived_length.value_or(-1);
  v.z1 = z.z1;
  v.z2 = z.z2;
  v.pass = v.derived_length <= 3;
  v.detail = "derived length " + std::to_string(v.derived_length);
  if (t.z2 == t.n - 1) {
    v.pass = v.pass && v.derived_length == 2;
    v.detail += " (z2 = n-1: metabelian case)";
  } else if (t.z2 == t.n - 2) {
    v.pass = v.pass && v.derived_length == 3;
    v.detail += " (z2 = n-2: derived length exactly 3)";
  }
  return v;
}

LieAlgebra paper15(const Rational& beta33) {
  Triple t{4, 9, 15};
  GeneralLawParams params = GeneralLawParams::zero(t);
  params.alpha[6] = Polynomial(beta33 / Rational(14));
  params.gamma[5] = Polynomial(Rational(363) * beta33);
  params.beta[{1, 5}] = Polynomial(Rational(27) * beta33);
  params.beta[{2, 4}] = Polynomial(Rational(21, 5) * beta33);
  params.beta[{3, 3}] = Polynomial(beta33);
  params.beta[{4, 2}] = Polynomial(Rational(3, 10) * beta33);
  return generate_general(params);
}

std::pair<LieAlgebra, std::vector<Polynomial>> paper31_family() {
  Triple t{4, 17, 31};
  GeneralLawParams params = GeneralLawParams::zero(t);
  params.alpha[14] = Polynomial::variable(alpha_name(14));
  params.gamma[13] = Polynomial::variable(gamma_name(13));
  for (int k = 1; k <= 12; ++k) params.beta[{k, 14 - k}] = Polynomial::variable(beta_name(k, 14 - k));
  LieAlgebra g = generate_general(params);
  return {g, constraints(g)};
}

std::vector<Polynomial> constraints(const LieAlgebra& g) {
  std::set<Polynomial> seen;
  for (const auto& violation : g.jacobi_check())
    for (const auto& [h, poly] : violation.coords) {
      Polynomial p = poly;
      if (!p.is_zero() && p.terms().front().second.sign() < 0) p = -p;
      seen.insert(std::move(p));
    }
  return {seen.begin(), seen.end()};
}

}  // namespace filiform
