#include "apolar/theorems.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace apolar {

namespace {

constexpr std::size_t kX = 1, kY = 2, kZ = 3;  // four-variable layout

bool check_consistency(const TheoremReport& r) {
  if (!r.observed) return true;
  switch (r.prediction) {
    case Prediction::NoClaim:
      return true;
    case Prediction::Generic:
      return *r.observed == Observation::Generic;
    case Prediction::NotGeneric:
      return *r.observed == Observation::NotGeneric;
    case Prediction::PropertyHolds:
      return *r.observed == Observation::PropertyHeld;
  }
  return false;
}

void finalize(TheoremReport& r) {
  r.applicable = r.failed_hypotheses.empty();
  if (!r.applicable) r.prediction = Prediction::NoClaim;
  r.consistent = check_consistency(r);
}

Observation verdict_observation(const Analysis& a) {
  return a.verdict.generic ? Observation::Generic : Observation::NotGeneric;
}

/// Gates shared by the stratified results: four variables, WZ shape, a
/// nonempty X-free part, and a pure Z power somewhere among the strata.
std::optional<FormDecomposition> gated_decomposition(const NormalForm& nf,
                                                     TheoremReport& r,
                                                     bool need_pure_z = true) {
  if (nf.F.vars().count() != 4) {
    r.failed_hypotheses.push_back("the form lives in four variables");
    return std::nullopt;
  }
  if (nf.shape != ShapeTag::WZ) {
    r.failed_hypotheses.push_back("the form has shape G + W Z^[j-1]");
    return std::nullopt;
  }
  try {
    std::optional<FormDecomposition> dec(decompose(nf));
    if (need_pure_z && !dec->some_pure_z) {
      r.failed_hypotheses.push_back("some stratum contains a pure Z power");
      return std::nullopt;
    }
    return dec;
  } catch (const ValidationError& e) {
    r.failed_hypotheses.push_back(std::string("stratification: ") + e.what());
    return std::nullopt;
  }
}

int block_ydeg(const Block& b) { return deg_in_var(b.g, 0); }
int block_zdeg(const Block& b) { return deg_in_var(b.g, 1); }

}  // namespace

std::string prediction_name(Prediction p) {
  switch (p) {
    case Prediction::Generic: return "generic";
    case Prediction::NotGeneric: return "not-generic";
    case Prediction::NoClaim: return "no-claim";
    case Prediction::PropertyHolds: return "holds";
  }
  return "?";
}

std::string observation_name(Observation o) {
  switch (o) {
    case Observation::Generic: return "generic";
    case Observation::NotGeneric: return "not-generic";
    case Observation::PropertyHeld: return "held";
    case Observation::PropertyViolated: return "violated";
  }
  return "?";
}

FormDecomposition decompose(const NormalForm& nf) {
  const VariableSet& vars = nf.F.vars();
  // (W, X, Y, Z) stratifies over X; (W, Y, Z) has the single stratum G_0
  if (vars.count() != 4 && vars.count() != 3)
    throw ValidationError("decompose",
                          "stratification needs the (W[,X],Y,Z) layout");
  if (nf.shape != ShapeTag::WZ)
    throw ValidationError("decompose", "stratification needs the WZ shape");
  if (nf.G.is_zero())
    throw ValidationError("decompose", "G vanishes; c_p undefined");

  const bool has_x = vars.count() == 4;
  const std::size_t yi = has_x ? kY : 1, zi = has_x ? kZ : 2;
  const Field& k = nf.F.field();
  VariableSet yz = vars.subset({yi, zi});

  std::map<int, DualForm> strata;
  for (const auto& [e, c] : nf.G.terms()) {
    if (e[vars.w_index()] != 0)
      throw ValidationError("decompose", "G involves W");
    Exponent small{e[yi], e[zi]};
    int a = has_x ? e[kX] : 0;
    auto it = strata.find(a);
    if (it == strata.end()) it = strata.emplace(a, DualForm(yz, k)).first;
    it->second.add_term(small, c);
  }
  if (!strata.count(0))
    throw ValidationError("decompose",
                          "no X-free stratum; c_p would be zero");

  FormDecomposition dec{0,  strata.at(0), 0,     0,
                        0,  {},           {},    false,
                        false,            nf.w_coeff,
                        vars,             yz};
  dec.j = nf.j;
  dec.p = deg_in_var(dec.g0, 0);
  dec.q = dec.j - dec.p;
  int min_y = dec.p;
  for (const auto& [e, c] : dec.g0.terms()) min_y = std::min(min_y, e[0]);
  dec.m = dec.p - min_y;
  for (int t = 0; t <= dec.m; ++t) {
    Exponent e{dec.p - t, dec.q + t};
    dec.c.push_back(dec.g0.coefficient(e));
  }
  for (const auto& [a, g] : strata) {
    if (a == 0) continue;
    if (g.degree() != dec.j - a)
      throw InternalError("block degree disagrees with its X exponent");
    dec.blocks.push_back(Block{a, g});
  }
  for (const auto& [a, g] : strata) {
    bool pure_z = false;
    for (const auto& [e, c] : g.terms())
      if (e[0] == 0) pure_z = true;
    if (pure_z) dec.some_pure_z = true;
  }
  if (!dec.blocks.empty()) {
    dec.y_divides_top = true;
    for (const auto& [e, c] : dec.blocks.back().g.terms())
      if (e[0] == 0) dec.y_divides_top = false;
  }

  if (reassemble(dec) != nf.F)
    throw InternalError("decomposition does not reassemble to F");
  return dec;
}

DualForm reassemble(const FormDecomposition& dec) {
  const Field& k = dec.w_coeff.field();
  const bool has_x = dec.vars.count() == 4;
  const std::size_t yi = has_x ? kY : 1, zi = has_x ? kZ : 2;
  DualForm f(dec.vars, k);
  auto lift = [&](const DualForm& g, int a) {
    for (const auto& [e, c] : g.terms()) {
      Exponent big(dec.vars.count(), 0);
      if (a != 0) big[kX] = a;
      big[yi] = e[0];
      big[zi] = e[1];
      f.add_term(big, c);
    }
  };
  lift(dec.g0, 0);
  for (const auto& b : dec.blocks) lift(b.g, b.a);
  Exponent wterm(dec.vars.count(), 0);
  wterm[dec.vars.w_index()] = 1;
  wterm[zi] = dec.j - 1;
  f.add_term(wterm, dec.w_coeff);
  return f;
}

TheoremReport check_restrict(const NormalForm& nf, std::size_t t) {
  TheoremReport r;
  r.theorem = "restrict";
  const VariableSet& vars = nf.F.vars();
  if (nf.shape != ShapeTag::WZ)
    r.failed_hypotheses.push_back("the form has shape G + W Z^[j-1]");
  if (t == vars.w_index() || t == vars.z_index() || t >= vars.count())
    r.failed_hypotheses.push_back("t names one of x_1..x_{n-1}");
  if (nf.G.is_zero())
    r.failed_hypotheses.push_back("G is nonzero");
  if (!r.failed_hypotheses.empty()) {
    finalize(r);
    return r;
  }

  DualForm lifted = shift_up(nf.G, t);
  Exponent socle(vars.count(), 0);
  socle[vars.w_index()] = 1;
  socle[vars.z_index()] = nf.j;
  DualForm fprime = lifted;
  fprime.add_term(socle, nf.w_coeff);

  NormalForm nf_prime = validate_normal_form(fprime);
  Analysis base = analyze(nf);
  Analysis raised = analyze(nf_prime);

  r.notes.push_back("base form: " + std::string(base.verdict.generic
                                                    ? "generic"
                                                    : "not generic"));
  if (base.verdict.generic) {
    r.prediction = Prediction::Generic;  // claim about F'
    r.observed = verdict_observation(raised);
  } else {
    r.prediction = Prediction::NoClaim;
    r.observed = verdict_observation(raised);
    if (!raised.verdict.generic)
      r.notes.push_back(
          "contrapositive: the lift is not generic, so the base could "
          "not have been");
    else
      r.notes.push_back(
          "lift is generic although the base is not; the implication "
          "has no converse");
  }
  finalize(r);
  return r;
}

TheoremReport check_lem0(const DualForm& g0) {
  TheoremReport r;
  r.theorem = "lem0";
  if (g0.is_zero() || !g0.is_homogeneous()) {
    r.failed_hypotheses.push_back("G_0 is a nonzero form");
    finalize(r);
    return r;
  }
  if (g0.vars().count() != 2) {
    r.failed_hypotheses.push_back("G_0 lives in the two variables Y, Z");
    finalize(r);
    return r;
  }
  const int j = g0.degree();
  const int p = deg_in_var(g0, 0);
  if (!(p < j - p)) r.failed_hypotheses.push_back("p < j - p");
  if (!r.failed_hypotheses.empty()) {
    finalize(r);
    return r;
  }

  const Field& k = g0.field();
  const VariableSet& yz = g0.vars();
  Exponent yp1{p + 1, 0};
  RingElement gen = RingElement::monomial(yz, yp1, Scalar::one(k));
  GradedIdealSlices expected =
      ideal_slices_from_generators({gen}, yz, k, j - p);

  InverseSystem sys(yz, {g0});
  bool held = true;
  for (int d = 1; d <= j - p && held; ++d)
    if (!(sys.ann_slice(d) == expected.slice[static_cast<std::size_t>(d)]))
      held = false;

  r.prediction = Prediction::PropertyHolds;
  r.observed = held ? Observation::PropertyHeld : Observation::PropertyViolated;
  finalize(r);
  return r;
}

TheoremReport check_th0(const NormalForm& nf) {
  TheoremReport r;
  r.theorem = "th0";
  auto dec = gated_decomposition(nf, r);
  if (dec && dec->blocks.empty())
    r.failed_hypotheses.push_back("at least one X block is present");
  if (!r.failed_hypotheses.empty()) {
    finalize(r);
    return r;
  }

  int max_block_y = 0;
  for (const auto& b : dec->blocks)
    max_block_y = std::max(max_block_y, block_ydeg(b));
  const int a1 = dec->blocks.front().a;

  if (a1 > dec->p && max_block_y < dec->p) {
    r.prediction = Prediction::NotGeneric;
    r.observed = verdict_observation(analyze(nf));
  } else {
    r.prediction = Prediction::NoClaim;
    r.notes.push_back("a_1 <= deg_Y G_0 or deg_Y G_0 <= max deg_Y G_i; the "
                      "necessary condition is met");
  }
  finalize(r);
  return r;
}

TheoremReport check_thm1(const NormalForm& nf) {
  TheoremReport r;
  r.theorem = "thm1";
  auto dec = gated_decomposition(nf, r);
  if (dec) {
    if (dec->blocks.size() != 1)
      r.failed_hypotheses.push_back("exactly one X block");
    else {
      const Block& b = dec->blocks.front();
      const int deg_g1 = dec->j - b.a;
      if (!(b.a > deg_g1))
        r.failed_hypotheses.push_back("deg_X F > deg G_1 (a > j - a)");
      if (!(deg_g1 >= dec->p))
        r.failed_hypotheses.push_back("deg G_1 >= deg_Y G_0");
    }
  }
  if (!r.failed_hypotheses.empty()) {
    finalize(r);
    return r;
  }

  const Block& b = dec->blocks.front();
  r.prediction = block_ydeg(b) == dec->p ? Prediction::Generic
                                         : Prediction::NotGeneric;
  r.observed = verdict_observation(analyze(nf));
  finalize(r);
  return r;
}

TheoremReport check_tm2(const NormalForm& nf) {
  TheoremReport r;
  r.theorem = "tm2";
  auto dec = gated_decomposition(nf, r);
  if (dec) {
    if (dec->blocks.empty())
      r.failed_hypotheses.push_back("at least one X block is present");
    else {
      const int a1 = dec->blocks.front().a;
      const int an = dec->blocks.back().a;
      if (!(dec->j - an < a1))
        r.failed_hypotheses.push_back("j - a_n < a_1");
      if (dec->y_divides_top)
        r.failed_hypotheses.push_back("Y does not divide G_n");
      for (std::size_t i = 0; i + 1 < dec->blocks.size(); ++i)
        if (!(block_ydeg(dec->blocks[i]) < dec->p)) {
          r.failed_hypotheses.push_back(
              "deg_Y G_i < deg_Y G_0 for the lower blocks");
          break;
        }
    }
  }
  if (!r.failed_hypotheses.empty()) {
    finalize(r);
    return r;
  }

  if (block_ydeg(dec->blocks.back()) != dec->p) {
    r.prediction = Prediction::NotGeneric;
    r.observed = verdict_observation(analyze(nf));
  } else {
    r.prediction = Prediction::NoClaim;
    r.notes.push_back("deg_Y G_n = deg_Y G_0; the necessary condition is met");
  }
  finalize(r);
  return r;
}

TheoremReport check_tm2_converse(const NormalForm& nf) {
  TheoremReport r;
  r.theorem = "tm2-converse";
  auto dec = gated_decomposition(nf, r);
  if (dec) {
    if (dec->blocks.empty())
      r.failed_hypotheses.push_back("at least one X block is present");
    else {
      const Block& top = dec->blocks.back();
      const int deg_top = dec->j - top.a;
      if (block_ydeg(top) != dec->p)
        r.failed_hypotheses.push_back("deg_Y G_n = p");
      if (block_zdeg(top) != deg_top)
        r.failed_hypotheses.push_back(
            "deg_Z G_n = p + s (a pure Z power tops the Z degrees)");
      if (!(deg_top < dec->blocks.front().a))
        r.failed_hypotheses.push_back("deg G_n < a_1");
      for (std::size_t i = 0; i + 1 < dec->blocks.size(); ++i)
        if (!(block_ydeg(dec->blocks[i]) < dec->p)) {
          r.failed_hypotheses.push_back(
              "deg_Y G_i < deg_Y G_0 for the lower blocks");
          break;
        }
    }
  }
  if (!r.failed_hypotheses.empty()) {
    finalize(r);
    return r;
  }

  const Block& top = dec->blocks.back();
  const int s = dec->j - top.a - dec->p;
  // condition (1): lower Y degrees stay below deg_Y(G_n - Y^[p] Z^[s])
  DualForm trimmed = top.g;
  Exponent top_term{dec->p, s};
  trimmed.add_term(top_term, -trimmed.coefficient(top_term));
  bool cond1 = true;
  int trimmed_y = trimmed.is_zero() ? -1 : deg_in_var(trimmed, 0);
  for (std::size_t i = 0; i + 1 < dec->blocks.size(); ++i)
    if (!(block_ydeg(dec->blocks[i]) < trimmed_y)) cond1 = false;
  // condition (2): lower Z degrees stay below deg_Z G_n
  bool cond2 = true;
  for (std::size_t i = 0; i + 1 < dec->blocks.size(); ++i)
    if (!(block_zdeg(dec->blocks[i]) < block_zdeg(top))) cond2 = false;

  if (!cond1 && !cond2) {
    r.failed_hypotheses.push_back(
        "one of the two exponent conditions on the lower blocks");
    finalize(r);
    return r;
  }
  r.notes.push_back(cond1 ? "condition (1) applies" : "condition (2) applies");
  r.prediction = Prediction::Generic;
  r.observed = verdict_observation(analyze(nf));
  finalize(r);
  return r;
}

TheoremReport check_hilb(const NormalForm& nf) {
  TheoremReport r;
  r.theorem = "hilb";
  if (nf.shape != ShapeTag::WZ) {
    r.failed_hypotheses.push_back("the form has shape G + W Z^[j-1]");
    finalize(r);
    return r;
  }
  Analysis a = analyze(nf);
  std::ostringstream os;
  os << "difference vector:";
  for (long v : a.hilbert_diff) os << ' ' << v;
  os << ", beta = " << a.verdict.beta;
  r.notes.push_back(os.str());
  if (!nf.i2_pattern) {
    r.failed_hypotheses.push_back("ann(F)_2 is the expected quadric space");
    r.notes.push_back(a.diff_pattern_ok
                          ? "pattern nevertheless holds"
                          : "pattern fails outside the stated hypotheses");
    finalize(r);
    return r;
  }
  r.prediction = Prediction::PropertyHolds;
  r.observed = a.diff_pattern_ok ? Observation::PropertyHeld
                                 : Observation::PropertyViolated;
  finalize(r);
  return r;
}

TheoremReport check_unimodal(const NormalForm& nf) {
  TheoremReport r;
  r.theorem = "unimodal";
  if (nf.shape != ShapeTag::WZ) {
    r.failed_hypotheses.push_back("J = ann(G, Z^[deg G - 1]) needs the WZ "
                                  "shape");
    finalize(r);
    return r;
  }
  if (nf.G.is_zero()) {
    r.failed_hypotheses.push_back("G is nonzero");
    finalize(r);
    return r;
  }
  Analysis a = analyze(nf);
  std::ostringstream os;
  os << "H_{R'/J}:";
  for (std::size_t v : a.profile.hilbert_rj) os << ' ' << v;
  r.notes.push_back(os.str());
  r.prediction = Prediction::PropertyHolds;
  r.observed = a.unimodal_j ? Observation::PropertyHeld
                            : Observation::PropertyViolated;
  finalize(r);
  return r;
}

DualForm random_form(const FormShape& shape, std::uint64_t seed,
                     const Field& field) {
  if (shape.n != 2 && shape.n != 3)
    throw ValidationError("infeasible-shape", "n must be 2 or 3");
  if (shape.j < 3) throw ValidationError("infeasible-shape", "j must be >= 3");
  if (shape.p < 2 || shape.p >= shape.j)
    throw ValidationError("infeasible-shape", "need 2 <= p < j");
  if (shape.q >= 0 && shape.p + shape.q != shape.j)
    throw ValidationError("infeasible-shape", "p + q must equal j");
  if (shape.m < 0 || shape.m > shape.p - 2)
    throw ValidationError("infeasible-shape",
                          "the Y-spread must keep 1 <= deg_Y and avoid "
                          "Y Z^[j-1] terms (m <= p-2)");
  if (shape.n == 2 && !shape.block_exps.empty())
    throw ValidationError("infeasible-shape", "blocks need the X variable");
  int prev = 0;
  for (int a : shape.block_exps) {
    if (a <= prev)
      throw ValidationError("infeasible-shape",
                            "block exponents must be strictly increasing");
    if (a > shape.j - 1)
      throw ValidationError("infeasible-shape", "block exponent too large");
    prev = a;
  }
  if (shape.coeff_range < 1)
    throw ValidationError("infeasible-shape", "empty coefficient pool");
  if (shape.top_block_ydeg && shape.block_exps.empty())
    throw ValidationError("infeasible-shape",
                          "top block Y-degree needs a block");
  if (shape.top_block_ydeg &&
      (*shape.top_block_ydeg < 0 ||
       *shape.top_block_ydeg > shape.j - shape.block_exps.back()))
    throw ValidationError("infeasible-shape", "top block Y-degree too large");

  std::mt19937_64 rng(seed);
  auto draw_coeff = [&]() {
    long v = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(
                                             shape.coeff_range));
    if (shape.signed_coeffs && rng() % 2) v = -v;
    return Scalar::integer(v, field);
  };

  std::vector<std::string> names =
      shape.n == 2 ? std::vector<std::string>{"W", "Y", "Z"}
                   : std::vector<std::string>{"W", "X", "Y", "Z"};
  VariableSet vars = VariableSet::make(names);
  const std::size_t xi = 1;
  const std::size_t yi = shape.n == 2 ? 1 : 2;
  const std::size_t zi = vars.z_index();

  DualForm f(vars, field);
  const int q = shape.j - shape.p;
  for (int t = 0; t <= shape.m; ++t) {
    if (t > 0 && rng() % 2) continue;  // sparse interior, c_p always kept
    Exponent e(vars.count(), 0);
    e[yi] = shape.p - t;
    e[zi] = q + t;
    f.add_term(e, draw_coeff());
  }

  for (std::size_t bi = 0; bi < shape.block_exps.size(); ++bi) {
    const int a = shape.block_exps[bi];
    const int deg = shape.j - a;
    const bool last = bi + 1 == shape.block_exps.size();
    const int y_cap = last && shape.top_block_ydeg ? *shape.top_block_ydeg
                                                   : deg;

    std::vector<int> ys;
    if (last && shape.top_block_ydeg) ys.push_back(*shape.top_block_ydeg);
    if (last && shape.force_pure_z && a > 1) ys.push_back(0);
    int want = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                              shape.max_block_terms));
    for (int tries = 0; tries < 4 * want; ++tries) {
      int y = static_cast<int>(rng() % static_cast<std::uint64_t>(y_cap + 1));
      if (a == 1 && y == 0) continue;  // X Z^[j-1] would break normal form
      if (std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(y);
      if (static_cast<int>(ys.size()) >= want) break;
    }
    if (ys.empty())
      throw ValidationError("infeasible-shape", "block admits no terms");
    for (int y : ys) {
      Exponent e(vars.count(), 0);
      e[xi] = a;
      e[yi] = y;
      e[zi] = deg - y;
      f.add_term(e, draw_coeff());
    }
  }

  Exponent socle(vars.count(), 0);
  socle[vars.w_index()] = 1;
  socle[zi] = shape.j - 1;
  f.add_term(socle, Scalar::one(field));

  validate_normal_form(f);  // structural self-check
  return f;
}

}  // namespace apolar
