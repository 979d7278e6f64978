#include "pst/constraints.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pst/error.hpp"

namespace pst {

namespace {

constexpr std::size_t N = kHilbertDim;

struct Term {
  GaussianRational coef;
  std::uint32_t unknown;  // flat row * 32 + col
  bool conj;
};

void push_equation(const std::vector<Term>& terms, std::vector<RealVec>& out) {
  std::vector<std::pair<std::uint32_t, Rational>> re, im;
  for (const auto& t : terms) {
    const std::uint32_t x = 2 * t.unknown, y = x + 1;
    const Rational& cr = t.coef.re();
    const Rational& ci = t.coef.im();
    re.emplace_back(x, cr);
    im.emplace_back(x, ci);
    if (t.conj) {
      re.emplace_back(y, ci);
      im.emplace_back(y, Rational(-cr));
    } else {
      re.emplace_back(y, Rational(-ci));
      im.emplace_back(y, cr);
    }
  }
  for (auto* raw : {&re, &im}) {
    RealVec v = make_sparse(std::move(*raw));
    if (!v.empty()) out.push_back(std::move(v));
  }
}

std::uint32_t flat(std::size_t r, std::size_t c) { return static_cast<std::uint32_t>(r * N + c); }

struct Nonzeros {
  std::vector<std::vector<std::pair<std::size_t, GaussianRational>>> by_row, by_col;
  explicit Nonzeros(const Op& g) : by_row(N), by_col(N) {
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c < N; ++c) {
        if (!g(r, c).is_zero()) {
          by_row[r].emplace_back(c, g(r, c));
          by_col[c].emplace_back(r, g(r, c));
        }
      }
    }
  }
};

// Equations of  X G + sign * G X = 0.
std::vector<RealVec> lower_product(const Op& g, int sign) {
  const Nonzeros nz(g);
  std::vector<RealVec> out;
  std::vector<Term> terms;
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) {
      terms.clear();
      for (const auto& [c, v] : nz.by_col[b]) terms.push_back({v, flat(a, c), false});
      for (const auto& [c, v] : nz.by_row[a]) terms.push_back({sign > 0 ? v : -v, flat(c, b), false});
      if (!terms.empty()) push_equation(terms, out);
    }
  }
  return out;
}

int kind_rank(const Constraint& c) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CommuteWithJ>) return 0;
        else if constexpr (std::is_same_v<T, AnticommuteWith>) return 1;
        else if constexpr (std::is_same_v<T, CommuteWith>) return 2;
        else if constexpr (std::is_same_v<T, MemberOf>) return 3;
        else return 4;
      },
      c);
}

// Precomputed exact checker for one constraint.
class Checker {
 public:
  explicit Checker(const Constraint& c) : c_(c) {
    if (const auto* m = std::get_if<CommuteWith>(&c)) {
      nz_.emplace(m->op);
      sign_ = -1;
    } else if (const auto* a = std::get_if<AnticommuteWith>(&c)) {
      nz_.emplace(a->op);
      sign_ = 1;
    } else if (const auto* s = std::get_if<MemberOf>(&c)) {
      if (s->space.ambient_dim() != kRealDim) {
        throw DimensionMismatch("membership constraint needs ambient dimension 2048");
      }
      ech_.emplace(s->space.echelon());
    }
  }

  bool operator()(const Op& x) const {
    switch (c_.index()) {
      case 0:
      case 1:
        return product_residual_zero(x);
      case 2:
        for (std::size_t a = 0; a < N; ++a)
          for (std::size_t b = 0; b < N; ++b)
            if (x(a, b) != x(j_partner(a), j_partner(b)).conj()) return false;
        return true;
      case 3:
        for (std::size_t a = 0; a < N; ++a)
          for (std::size_t b = a; b < N; ++b)
            if (x(a, b) != x(b, a).conj()) return false;
        return true;
      default:
        return ech_->contains(realify(x));
    }
  }

 private:
  bool product_residual_zero(const Op& x) const {
    std::map<std::uint32_t, GaussianRational> res;
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t c = 0; c < N; ++c) {
        const auto& v = x(r, c);
        if (v.is_zero()) continue;
        // (X G)[r, b] += X[r, c] G[c, b]
        for (const auto& [b, g] : nz_->by_row[c]) res[flat(r, b)] += v * g;
        // sign * (G X)[a, c] += G[a, r] X[r, c]
        for (const auto& [a, g] : nz_->by_col[r]) {
          if (sign_ > 0) res[flat(a, c)] += g * v;
          else res[flat(a, c)] -= g * v;
        }
      }
    }
    return std::all_of(res.begin(), res.end(), [](const auto& kv) { return kv.second.is_zero(); });
  }

  const Constraint& c_;
  std::optional<Nonzeros> nz_;
  int sign_ = 0;
  std::optional<Echelon<Rational>> ech_;
};

}  // namespace

std::string describe(const Constraint& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CommuteWith>) return "commute(" + v.name + ")";
        else if constexpr (std::is_same_v<T, AnticommuteWith>) return "anticommute(" + v.name + ")";
        else if constexpr (std::is_same_v<T, CommuteWithJ>) return "commute(J)";
        else if constexpr (std::is_same_v<T, SelfAdjoint>) return "self-adjoint";
        else return "member(" + v.name + ")";
      },
      c);
}

bool satisfies(const Op& x, const Constraint& c) { return Checker(c)(x); }

std::vector<RealVec> lower(const Constraint& c) {
  std::vector<RealVec> out;
  switch (c.index()) {
    case 0:
      return lower_product(std::get<CommuteWith>(c).op, -1);
    case 1:
      return lower_product(std::get<AnticommuteWith>(c).op, 1);
    case 2:
      // X[a, b] - conj X[sa, sb] = 0
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
          push_equation({{1, flat(a, b), false}, {-1, flat(j_partner(a), j_partner(b)), true}}, out);
      return out;
    case 3:
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a; b < N; ++b)
          push_equation({{1, flat(a, b), false}, {-1, flat(b, a), true}}, out);
      return out;
    default: {
      const auto& s = std::get<MemberOf>(c).space;
      if (s.ambient_dim() != kRealDim) {
        throw DimensionMismatch("membership constraint needs ambient dimension 2048");
      }
      return s.equations();
    }
  }
}

DiracFamily solve(const std::vector<Constraint>& constraints, LoweringOrder order,
                  std::optional<CaseTag> case_tag) {
  std::vector<const Constraint*> seq;
  for (const auto& c : constraints) seq.push_back(&c);
  if (order == LoweringOrder::Canonical) {
    std::stable_sort(seq.begin(), seq.end(),
                     [](const Constraint* a, const Constraint* b) { return kind_rank(*a) < kind_rank(*b); });
  }
  Echelon<Rational> rows(kRealDim);
  for (const Constraint* c : seq) {
    for (const auto& r : lower(*c)) rows.insert(r);
  }
  DiracFamily fam{rows.kernel(), constraints, case_tag};

  std::vector<Checker> checks;
  checks.reserve(constraints.size());
  for (const auto& c : fam.constraints) checks.emplace_back(c);
  for (const auto& v : fam.space.basis()) {
    const Op x = unrealify(v);
    for (std::size_t k = 0; k < checks.size(); ++k) {
      if (!checks[k](x)) {
        throw std::logic_error("solution basis element violates " + describe(fam.constraints[k]));
      }
    }
  }
  return fam;
}

bool selfadjoint_coefficient_check(const Op& x) {
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l)
          for (int r = 1; r <= 4; ++r)
            for (int s = 1; s <= 4; ++s) {
              if (x.at({k, l, i, j, r, s}) != x.at({l, k, j, i, s, r}).conj()) return false;
            }
  return true;
}

bool j_commute_coefficient_check(const Op& x) {
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 4; ++k)
      for (int l = 1; l <= 4; ++l)
        for (int r = 1; r <= 4; ++r)
          for (int s = 1; s <= 4; ++s) {
            // (i, j) = (1, 1) pairs with (2, 2); (1, 2) pairs with (2, 1).
            if (x.at({k, l, 1, j, r, s}) != x.at({r, s, 2, 3 - j, k, l}).conj()) return false;
          }
  return true;
}

Op sector_part(const Op& d, int i, int j) {
  Op out;
  for (std::size_t a = 0; a < N; ++a) {
    if (static_cast<int>((a / 4) % 2) + 1 != i) continue;
    for (std::size_t b = 0; b < N; ++b) {
      if (static_cast<int>((b / 4) % 2) + 1 == j) out(a, b) = d(a, b);
    }
  }
  return out;
}

D0Split split_D0(const Op& d) {
  if (!j_commute_coefficient_check(d)) {
    throw PreconditionError("split_D0 requires an operator commuting with J");
  }
  Op d0 = sector_part(d, 1, 1) + sector_part(d, 1, 2);
  Op d1 = j_conjugate(d0);
  return {std::move(d0), std::move(d1)};
}

Op riemannian_restriction(const Op& d) {
  return (d + dagger(d)) * GaussianRational(make_rational(1, 2));
}

SubspaceBasis coordinate_projection(const DiracFamily& family, const std::vector<TensorIndex>& coords) {
  if (coords.empty()) throw PreconditionError("coordinate set must be nonempty");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> src;  // (realified coordinate, target)
  for (std::size_t m = 0; m < coords.size(); ++m) {
    if (!coords[m].valid()) throw PreconditionError("invalid tensor index " + to_string(coords[m]));
    const auto [row, col] = coords[m].flat();
    src.emplace_back(real_coord(row - 1, col - 1, 0), static_cast<std::uint32_t>(2 * m));
    src.emplace_back(real_coord(row - 1, col - 1, 1), static_cast<std::uint32_t>(2 * m + 1));
  }
  Echelon<Rational> e(2 * coords.size());
  for (const auto& v : family.space.basis()) {
    std::vector<std::pair<std::uint32_t, Rational>> raw;
    for (const auto& [from, to] : src) {
      if (const Rational* q = v.find(from)) raw.emplace_back(to, *q);
    }
    e.insert(make_sparse(std::move(raw)));
  }
  return SubspaceBasis::from_echelon(e);
}

namespace {

using M = std::array<std::string_view, 4>;
constexpr M kAll{"xxxx", "xxxx", "xxxx", "xxxx"};
constexpr M kBlockDiag{"xx..", "xx..", "..xx", "..xx"};
constexpr M kOffDiag{"..xx", "..xx", "xx..", "xx.."};
constexpr M kRows12{"xxxx", "xxxx", "....", "...."};
constexpr M kRows34{"....", "....", "xxxx", "xxxx"};
constexpr M kCols12{"xx..", "xx..", "xx..", "xx.."};
constexpr M kCols34{"..xx", "..xx", "..xx", "..xx"};
// 1 + 3 split of the color factor.
constexpr M kSplitDiag{"x...", ".xxx", ".xxx", ".xxx"};
constexpr M kSplitOff{".xxx", "x...", "x...", "x..."};

FormTerm term(const M& left, int i, int j, const M& right) {
  return {FactorSpan::mask(left), i, j, FactorSpan::mask(right)};
}

}  // namespace

ParametricForm dirac_form_anti_gamma() {
  return {"anti-gamma",
          {term(kOffDiag, 1, 1, kAll), term(kRows12, 1, 2, kCols12), term(kRows34, 1, 2, kCols34)},
          true};
}

ParametricForm dirac_form_anti_gamma_star() {
  return {"anti-gamma-star",
          {term(kBlockDiag, 1, 1, kSplitOff), term(kOffDiag, 1, 1, kSplitDiag),
           term({"x...", "x...", ".xxx", ".xxx"}, 1, 2, {"xx..", "..xx", "..xx", "..xx"}),
           term({".xxx", ".xxx", "x...", "x..."}, 1, 2, {"..xx", "xx..", "xx..", "xx.."})},
          true};
}

ParametricForm dirac_form_beta_nontrivial() {
  return {"beta-nontrivial",
          {term(kBlockDiag, 1, 1, kAll), term(kRows12, 1, 2, kCols12), term(kRows34, 1, 2, kCols34)},
          true};
}

ParametricForm dirac_form_beta_case2() {
  return {"beta-case2",
          {term(kBlockDiag, 1, 1, kSplitDiag), term(kOffDiag, 1, 1, kSplitOff),
           term({"x...", "x...", ".xxx", ".xxx"}, 1, 2, {"xx..", "..xx", "..xx", "..xx"}),
           term({".xxx", ".xxx", "x...", "x..."}, 1, 2, {"..xx", "xx..", "xx..", "xx.."})},
          true};
}

ParametricForm dirac_form_beta_final() {
  return {"beta-final",
          {term(kAll, 1, 1, kSplitDiag), term({"x...", "x...", "x...", "x..."}, 1, 2, {"xxxx", "....", "....", "...."}),
           term({".xxx", ".xxx", ".xxx", ".xxx"}, 1, 2, {"....", "xxxx", "xxxx", "xxxx"})},
          true};
}

ParametricForm dirac_form_gamma_final() {
  return {"gamma-star-final",
          {term(kOffDiag, 1, 1, kSplitDiag),
           term({"x...", "x...", "....", "...."}, 1, 2, {"xx..", "....", "....", "...."}),
           term({"....", "....", ".xxx", ".xxx"}, 1, 2, {"....", "..xx", "..xx", "..xx"}),
           term({"....", "....", "x...", "x..."}, 1, 2, {"..xx", "....", "....", "...."}),
           term({".xxx", ".xxx", "....", "...."}, 1, 2, {"....", "xx..", "xx..", "xx.."})},
          true};
}

}  // namespace pst
