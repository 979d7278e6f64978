#include "pst/beta.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "pst/commutant.hpp"
#include "pst/constraints.hpp"
#include "pst/error.hpp"

namespace pst {

namespace {

std::vector<std::vector<int>> sign_patterns(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> s(n);
    for (std::size_t b = 0; b < n; ++b) s[b] = (mask >> (n - 1 - b)) & 1 ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

void check_signs(const std::vector<int>& signs, std::size_t n, const char* what) {
  if (signs.size() != n) {
    throw DimensionMismatch(std::string(what) + " expects " + std::to_string(n) + " signs, got " +
                            std::to_string(signs.size()));
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw PreconditionError(std::string(what) + " signs must be +1 or -1");
  }
}

Mat D(std::initializer_list<long> d) {
  std::vector<GaussianRational> v(d.begin(), d.end());
  return Mat::diag(v);
}

bool equal_up_to_sign(const Op& a, const Op& b) { return a == b || a == -b; }

BetaFlags compute_flags(const Op& op, CaseTag c) {
  BetaFlags f;
  const Op id = Op::identity();
  f.is_involution = op * op == id;
  f.is_self_adjoint = dagger(op) == op;
  f.commutes_with_j = j_conjugate(op) == op;
  f.commutes_with_gamma = commutator(op, gamma()).is_zero();
  f.commutes_with_gamma_star = commutator(op, gamma_star()).is_zero();
  f.is_zero_cycle = is_zero_cycle(op, c);
  f.is_trivial = op == id || op == -id;
  return f;
}

void finish(BetaCandidate& b, CaseTag c) {
  b.flags = compute_flags(b.op, c);
  b.witness = one_term_expressible(b.op, c);
  b.flags.is_one_term_expressible = b.witness.has_value();
}

// Names of the one-term operators, matched up to global sign.
std::string one_term_name(CaseTag c, const Op& op) {
  if (equal_up_to_sign(op, Op::identity())) return "identity";
  const std::vector<std::string> names = {"nontrivial", "case2", "final"};
  for (const auto& n : names) {
    try {
      if (equal_up_to_sign(op, beta_by_name(c, n))) return n;
    } catch (const UsageError&) {
    }
  }
  return "";
}

}  // namespace

std::string sign_string(const std::vector<int>& signs) {
  std::string s;
  for (int x : signs) s += x > 0 ? '+' : '-';
  return s;
}

std::size_t one_term_arity(CaseTag c) { return block_sizes(c).size(); }

std::size_t eta_arity(CaseTag c) {
  switch (c) {
    case CaseTag::Unreduced: return 2;
    case CaseTag::Reduced: return 4;
    case CaseTag::StandardModel: return 6;
  }
  return 0;
}

Op one_term_op(CaseTag c, const std::vector<int>& signs) {
  const auto sizes = block_sizes(c);
  check_signs(signs, sizes.size(), "one-term beta");
  AlgebraElement a;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    a.blocks.push_back(Mat::identity(sizes[k]) * GaussianRational(signs[k]));
  }
  const Op p = rep(c, a);
  return p * j_conjugate(p);
}

BetaCandidate one_term_beta(CaseTag c, const std::vector<int>& signs) {
  BetaCandidate b;
  b.signs = signs;
  b.kind = BetaCandidate::Kind::OneTerm;
  b.op = one_term_op(c, signs);
  b.name = one_term_name(c, b.op);
  if (b.name.empty()) b.name = sign_string(signs);
  finish(b, c);
  return b;
}

std::vector<Op> eta_projectors(CaseTag c) {
  const Mat I = Mat::identity(4);
  const Mat e1 = D({1, 0, 0, 0}), rest = D({0, 1, 1, 1});
  switch (c) {
    case CaseTag::Unreduced: {
      const Mat top = D({1, 1, 0, 0}), bot = D({0, 0, 1, 1});
      return {embed(top, 1, 1, I) + embed(I, 2, 2, top), embed(bot, 1, 1, I) + embed(I, 2, 2, bot)};
    }
    case CaseTag::Reduced: {
      const Mat P = D({1, 1, 0, 0}), Q = D({0, 0, 1, 1});
      return {embed(P, 1, 1, e1) + embed(e1, 2, 2, P), embed(P, 1, 1, rest) + embed(rest, 2, 2, P),
              embed(Q, 1, 1, e1) + embed(e1, 2, 2, Q), embed(Q, 1, 1, rest) + embed(rest, 2, 2, Q)};
    }
    case CaseTag::StandardModel: {
      const Mat P1 = D({1, 0, 0, 0}), P2 = D({0, 1, 0, 0}), P3 = D({0, 0, 1, 1});
      return {embed(P1, 1, 1, e1) + embed(e1, 2, 2, P1),   embed(P1, 1, 1, rest) + embed(rest, 2, 2, P1),
              embed(P2, 1, 1, e1) + embed(e1, 2, 2, P2),   embed(P2, 1, 1, rest) + embed(rest, 2, 2, P2),
              embed(P3, 1, 1, e1) + embed(e1, 2, 2, P3),   embed(P3, 1, 1, rest) + embed(rest, 2, 2, P3)};
    }
  }
  throw std::invalid_argument("unknown case");
}

Op eta_op(CaseTag c, const std::vector<int>& eta) {
  const auto ps = eta_projectors(c);
  check_signs(eta, ps.size(), "eta pattern");
  Op out;
  for (std::size_t k = 0; k < ps.size(); ++k) out += ps[k] * GaussianRational(eta[k]);
  return out;
}

std::vector<BetaCandidate> enumerate_one_term(CaseTag c) {
  std::vector<BetaCandidate> out;
  for (const auto& s : sign_patterns(one_term_arity(c))) {
    const Op op = one_term_op(c, s);
    if (op(0, 0) != GaussianRational(1)) continue;
    bool seen = false;
    for (const auto& b : out) seen = seen || equal_up_to_sign(b.op, op);
    if (!seen) out.push_back(one_term_beta(c, s));
  }
  return out;
}

std::vector<Op> block_scalar_projectors(CaseTag c) {
  const auto comm = commutant(algebra_case(c).real_generators);
  const auto fam = solve({MemberOf{comm.space, "commutant"}, CommuteWithJ{}, SelfAdjoint{},
                          CommuteWith{gamma(), "gamma"}});
  std::vector<Op> out;
  Op sum;
  for (const auto& v : fam.space.basis()) {
    Op p = unrealify(v);
    if (!p.is_diagonal()) throw std::logic_error("constrained commutant is not diagonal");
    for (std::size_t a = 0; a < kHilbertDim; ++a) {
      const auto& z = p(a, a);
      if (!z.is_zero() && !z.is_one()) throw std::logic_error("constrained commutant is not 0/1 valued");
      if (!z.is_zero() && !sum(a, a).is_zero()) throw std::logic_error("projector supports overlap");
    }
    sum += p;
    out.push_back(std::move(p));
  }
  if (sum != Op::identity()) throw std::logic_error("projectors do not sum to the identity");
  return out;
}

std::vector<BetaCandidate> enumerate_generic(CaseTag c) {
  const auto refs = eta_projectors(c);
  const auto solved = block_scalar_projectors(c);
  if (solved.size() != refs.size()) {
    throw std::logic_error("block-scalar family has " + std::to_string(solved.size()) + " projectors, expected " +
                           std::to_string(refs.size()));
  }
  for (const auto& r : refs) {
    bool found = false;
    for (const auto& s : solved) found = found || s == r;
    if (!found) throw std::logic_error("eta projector missing from the solved family");
  }

  std::vector<Op> named;
  if (c == CaseTag::Reduced) named = reduced_reference_betas();

  std::vector<BetaCandidate> out;
  for (auto tail : sign_patterns(refs.size() - 1)) {
    std::vector<int> eta{1};
    eta.insert(eta.end(), tail.begin(), tail.end());
    BetaCandidate b;
    b.signs = eta;
    b.kind = BetaCandidate::Kind::Eta;
    b.op = eta_op(c, eta);
    for (std::size_t k = 0; k < named.size() && b.name.empty(); ++k) {
      if (b.op == named[k]) b.name = "b" + std::to_string(k + 1);
    }
    if (b.name.empty()) b.name = one_term_name(c, b.op);
    if (b.name.empty()) b.name = "eta:" + sign_string(eta);
    finish(b, c);
    out.push_back(std::move(b));
  }
  return out;
}

const ZeroCycleSpan& zero_cycle_span(CaseTag c) {
  static std::mutex mu;
  static std::map<CaseTag, ZeroCycleSpan> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(c); it != cache.end()) return it->second;
  const auto gens = algebra_case(c).real_generators;
  std::vector<Op> opp;
  for (const auto& g : gens) opp.push_back(opposite(g));
  Echelon<Rational> e(kRealDim);
  for (const auto& a : gens) {
    for (const auto& b : opp) e.insert(realify(a * b));
  }
  return cache.emplace(c, ZeroCycleSpan{c, SubspaceBasis::from_echelon(e)}).first->second;
}

bool is_zero_cycle(const Op& op, CaseTag c) {
  return zero_cycle_span(c).space.contains_vector(realify(op));
}

std::optional<std::vector<int>> one_term_expressible(const Op& op, CaseTag c) {
  for (const auto& s : sign_patterns(one_term_arity(c))) {
    if (one_term_op(c, s) == op) return s;
  }
  return std::nullopt;
}

std::vector<Op> reduced_reference_betas() {
  const Mat I = Mat::identity(4);
  const Mat P = D({1, 1, 0, 0}), Q = D({0, 0, 1, 1}), R = D({1, 0, 0, 0}), S = D({0, 1, 1, 1});
  const Mat s13 = D({1, -1, -1, -1}), m13 = D({-1, 1, 1, 1}), s22 = D({1, 1, -1, -1}), m22 = D({-1, -1, 1, 1});
  return {
      Op::identity(),
      embed(P, 1, 1, I) + embed(Q, 1, 1, s13) + embed(R, 2, 2, I) + embed(S, 2, 2, s22),
      embed(s22, 1, 1, I) + embed(I, 2, 2, s22),
      // The lambda-row block carries diag(1_2, -1_2); this is the J-commuting choice.
      embed(P, 1, 1, I) + embed(Q, 1, 1, m13) + embed(R, 2, 2, s22) + embed(S, 2, 2, I),
      embed(P, 1, 1, s13) + embed(Q, 1, 1, I) + embed(R, 2, 2, I) + embed(S, 2, 2, m22),
      embed(s22, 1, 1, s13) + embed(s13, 2, 2, s22),
      embed(I, 1, 1, s13) + embed(s13, 2, 2, I),
      embed(P, 1, 1, s13) + embed(-Q, 1, 1, I) + embed(R, 2, 2, s22) + embed(-S, 2, 2, I),
  };
}

Op beta_by_name(CaseTag c, const std::string& name) {
  auto undefined = [&]() {
    return UsageError("beta '" + name + "' is not defined for case " + to_string(c));
  };
  auto parse = [&](const std::string& s, std::size_t n) {
    std::vector<int> out;
    for (char ch : s) {
      if (ch == '+') out.push_back(1);
      else if (ch == '-') out.push_back(-1);
      else throw UsageError("bad sign pattern '" + name + "'");
    }
    if (out.size() != n) {
      throw UsageError("sign pattern '" + name + "' needs " + std::to_string(n) + " signs for case " + to_string(c));
    }
    return out;
  };
  if (name == "identity") return Op::identity();
  if (name == "nontrivial") {
    if (c == CaseTag::Unreduced) return one_term_op(c, {1, -1, 1});
    if (c == CaseTag::Reduced) return one_term_op(c, {1, -1, 1, 1});
    throw undefined();
  }
  if (name == "case2") {
    if (c == CaseTag::Reduced) return one_term_op(c, {-1, 1, 1, -1});
    throw undefined();
  }
  if (name == "final") {
    if (c == CaseTag::Reduced) return one_term_op(c, {1, 1, 1, -1});
    if (c == CaseTag::StandardModel) return one_term_op(c, {1, 1, -1});
    throw undefined();
  }
  if (name.size() == 2 && name[0] == 'b' && name[1] >= '1' && name[1] <= '8') {
    if (c != CaseTag::Reduced) throw undefined();
    return reduced_reference_betas()[static_cast<std::size_t>(name[1] - '1')];
  }
  if (name.rfind("eta:", 0) == 0) return eta_op(c, parse(name.substr(4), eta_arity(c)));
  if (!name.empty() && (name[0] == '+' || name[0] == '-')) return one_term_op(c, parse(name, one_term_arity(c)));
  throw UsageError("unknown beta name '" + name + "'");
}

}  // namespace pst
