#include "pst/triple.hpp"

#include <stdexcept>

#include "pst/error.hpp"

namespace pst {

std::size_t j_partner(std::size_t pos) {
  const int r = static_cast<int>(pos % 4) + 1;
  const int i = static_cast<int>((pos / 4) % 2) + 1;
  const int k = static_cast<int>(pos / 8) + 1;
  return basis_position(r, 3 - i, k);
}

std::vector<GaussianRational> apply_J(const std::vector<GaussianRational>& v) {
  if (v.size() != kHilbertDim) throw ShapeError("apply_J expects a 32-component vector");
  std::vector<GaussianRational> out(kHilbertDim);
  for (std::size_t a = 0; a < kHilbertDim; ++a) out[a] = v[j_partner(a)].conj();
  return out;
}

Op j_conjugate(const Op& x) {
  Op out;
  for (std::size_t a = 0; a < kHilbertDim; ++a) {
    for (std::size_t b = 0; b < kHilbertDim; ++b) {
      const auto& z = x(j_partner(a), j_partner(b));
      if (!z.is_zero()) out(a, b) = z.conj();
    }
  }
  return out;
}

Op opposite(const Op& x) {
  Op out;
  for (std::size_t a = 0; a < kHilbertDim; ++a) {
    for (std::size_t b = 0; b < kHilbertDim; ++b) out(a, b) = x(j_partner(b), j_partner(a));
  }
  return out;
}

Op gamma() {
  return embed(Mat::diag({1, 1, -1, -1}), 1, 1, Mat::identity(4)) +
         embed(Mat::identity(4), 2, 2, Mat::diag({-1, -1, 1, 1}));
}

Op gamma_star() {
  return embed(Mat::diag({1, 1, -1, -1}), 1, 1, Mat::diag({1, -1, -1, -1})) +
         embed(Mat::diag({-1, 1, 1, 1}), 2, 2, Mat::diag({1, 1, -1, -1}));
}

Op grading(GradingTag g) { return g == GradingTag::Gamma ? gamma() : gamma_star(); }

std::string to_string(GradingTag g) { return g == GradingTag::Gamma ? "gamma" : "gamma-star"; }

int TripleConfig::beta_j_sign() const {
  const int a = (p * (p - 1) / 2) % 2 == 0 ? 1 : -1;
  const int b = (p % 2 == 0) ? 1 : epsilon;
  return a * b;
}

std::string to_string(CaseTag c) {
  switch (c) {
    case CaseTag::Unreduced: return "unreduced";
    case CaseTag::Reduced: return "reduced";
    case CaseTag::StandardModel: return "sm";
  }
  return "?";
}

CaseTag parse_case(const std::string& name) {
  if (name == "unreduced") return CaseTag::Unreduced;
  if (name == "reduced") return CaseTag::Reduced;
  if (name == "sm" || name == "standard-model") return CaseTag::StandardModel;
  throw std::invalid_argument("unknown algebra case '" + name + "'");
}

std::vector<std::size_t> block_sizes(CaseTag c) {
  switch (c) {
    case CaseTag::Unreduced: return {2, 2, 4};
    case CaseTag::Reduced: return {2, 2, 1, 3};
    case CaseTag::StandardModel: return {1, 2, 3};
  }
  return {};
}

std::vector<std::size_t> quaternion_blocks(CaseTag c) {
  switch (c) {
    case CaseTag::Unreduced:
    case CaseTag::Reduced: return {0, 1};
    case CaseTag::StandardModel: return {1};
  }
  return {};
}

AlgebraElement unit_element(CaseTag c) {
  AlgebraElement a;
  for (auto n : block_sizes(c)) a.blocks.push_back(Mat::identity(n));
  return a;
}

namespace {

const Mat& one4() {
  static const Mat m = Mat::identity(4);
  return m;
}

void check_shapes(CaseTag c, const AlgebraElement& a) {
  const auto sizes = block_sizes(c);
  if (a.blocks.size() != sizes.size()) {
    throw ShapeError("algebra element for case " + to_string(c) + " needs " + std::to_string(sizes.size()) +
                     " blocks, got " + std::to_string(a.blocks.size()));
  }
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (a.blocks[k].rows() != sizes[k] || a.blocks[k].cols() != sizes[k]) {
      throw ShapeError("block " + std::to_string(k) + " of a " + to_string(c) + " element must be " +
                       std::to_string(sizes[k]) + "x" + std::to_string(sizes[k]));
    }
  }
}

bool is_quaternion(const Mat& q) {
  return q(1, 0) == -q(0, 1).conj() && q(1, 1) == q(0, 0).conj();
}

std::vector<Mat> quaternion_basis() {
  const auto i = GaussianRational::i();
  return {Mat::identity(2), Mat{{i, 0}, {0, -i}}, Mat{{0, 1}, {-1, 0}}, Mat{{0, i}, {i, 0}}};
}

/// Real basis of M_n(C): e_ab and i e_ab.
std::vector<Mat> complex_matrix_basis(std::size_t n) {
  std::vector<Mat> out;
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = 1; b <= n; ++b) {
      out.push_back(Mat::unit(n, a, b));
      out.push_back(Mat::unit(n, a, b) * GaussianRational::i());
    }
  }
  return out;
}

std::vector<Mat> matrix_units(std::size_t n) {
  std::vector<Mat> out;
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = 1; b <= n; ++b) out.push_back(Mat::unit(n, a, b));
  }
  return out;
}

AlgebraElement zero_element(CaseTag c) {
  AlgebraElement a;
  for (auto n : block_sizes(c)) a.blocks.push_back(Mat::zeros(n, n));
  return a;
}

/// One generator per basis matrix placed in block `block`, all else zero.
void add_block_generators(CaseTag c, std::size_t block, const std::vector<Mat>& basis, bool checked,
                          std::vector<Op>& out) {
  for (const auto& m : basis) {
    AlgebraElement a = zero_element(c);
    a.blocks[block] = m;
    out.push_back(checked ? rep(c, a) : rep_complexified(c, a));
  }
}

}  // namespace

Op rep_complexified(CaseTag c, const AlgebraElement& a) {
  check_shapes(c, a);
  const auto& b = a.blocks;
  switch (c) {
    case CaseTag::Unreduced:
      return embed(Mat::block_diag({b[0], b[1]}), 1, 1, one4()) + embed(b[2], 2, 2, one4());
    case CaseTag::Reduced:
      return embed(Mat::block_diag({b[0], b[1]}), 1, 1, one4()) +
             embed(Mat::block_diag({b[2], b[3]}), 2, 2, one4());
    case CaseTag::StandardModel:
      return embed(Mat::block_diag({b[0], conjugate(b[0]), b[1]}), 1, 1, one4()) +
             embed(Mat::block_diag({b[0], b[2]}), 2, 2, one4());
  }
  throw std::logic_error("unhandled case");
}

Op rep(CaseTag c, const AlgebraElement& a) {
  check_shapes(c, a);
  for (auto k : quaternion_blocks(c)) {
    if (!is_quaternion(a.blocks[k])) {
      throw ShapeError("block " + std::to_string(k) + " of a " + to_string(c) + " element is not a quaternion");
    }
  }
  return rep_complexified(c, a);
}

AlgebraCase algebra_case(CaseTag c) {
  AlgebraCase ac{c, {}, {}, {}};
  const auto one = Mat::identity(1);
  const auto i1 = one * GaussianRational::i();
  switch (c) {
    case CaseTag::Unreduced:
      add_block_generators(c, 0, quaternion_basis(), true, ac.real_generators);
      add_block_generators(c, 1, quaternion_basis(), true, ac.real_generators);
      add_block_generators(c, 2, complex_matrix_basis(4), true, ac.real_generators);
      add_block_generators(c, 0, matrix_units(2), false, ac.complexified_generators);
      add_block_generators(c, 1, matrix_units(2), false, ac.complexified_generators);
      add_block_generators(c, 2, matrix_units(4), false, ac.complexified_generators);
      ac.block_structure = "e11: rows {1,2} q1, {3,4} q2; e22: rows {1..4} m";
      break;
    case CaseTag::Reduced:
      add_block_generators(c, 0, quaternion_basis(), true, ac.real_generators);
      add_block_generators(c, 1, quaternion_basis(), true, ac.real_generators);
      add_block_generators(c, 2, {one, i1}, true, ac.real_generators);
      add_block_generators(c, 3, complex_matrix_basis(3), true, ac.real_generators);
      add_block_generators(c, 0, matrix_units(2), false, ac.complexified_generators);
      add_block_generators(c, 1, matrix_units(2), false, ac.complexified_generators);
      add_block_generators(c, 2, {one}, false, ac.complexified_generators);
      add_block_generators(c, 3, matrix_units(3), false, ac.complexified_generators);
      ac.block_structure = "e11: rows {1,2} q1, {3,4} q2; e22: row {1} lambda, rows {2,3,4} n";
      break;
    case CaseTag::StandardModel: {
      add_block_generators(c, 0, {one, i1}, true, ac.real_generators);
      add_block_generators(c, 1, quaternion_basis(), true, ac.real_generators);
      add_block_generators(c, 2, complex_matrix_basis(3), true, ac.real_generators);
      // lambda -> (lambda, conj(lambda), lambda) complexifies to two independent projections.
      ac.complexified_generators.push_back(embed(Mat::unit(4, 1, 1), 1, 1, one4()) +
                                           embed(Mat::unit(4, 1, 1), 2, 2, one4()));
      ac.complexified_generators.push_back(embed(Mat::unit(4, 2, 2), 1, 1, one4()));
      add_block_generators(c, 1, matrix_units(2), false, ac.complexified_generators);
      add_block_generators(c, 2, matrix_units(3), false, ac.complexified_generators);
      ac.block_structure = "e11: row {1} lambda, row {2} conj(lambda), rows {3,4} q; e22: row {1} lambda, rows {2,3,4} m";
      break;
    }
  }
  return ac;
}

std::string ParticleLabel::name() const {
  std::string base;
  switch (species) {
    case Species::Neutrino: base = "nu"; break;
    case Species::Electron: base = "e"; break;
    case Species::Up: base = "u"; break;
    case Species::Down: base = "d"; break;
  }
  base += chirality == Chirality::Right ? "_R" : "_L";
  if (color > 0) base += "^" + std::to_string(color);
  return sector == Sector::Particle ? base : "anti-" + base;
}

ParticleLabel label(int flat_index) {
  if (flat_index < 1 || flat_index > 32) {
    throw std::out_of_range("basis index " + std::to_string(flat_index) + " outside 1..32");
  }
  const int r = (flat_index - 1) % 4 + 1;
  const int i = ((flat_index - 1) / 4) % 2 + 1;
  const int k = (flat_index - 1) / 8 + 1;
  // F* holds v^dagger, so an antiparticle slot (k, r) carries the particle at (r, k).
  const int row = i == 1 ? k : r;
  const int col = i == 1 ? r : k;
  ParticleLabel out{};
  const bool up_type = row == 1 || row == 3;
  out.color = col - 1;
  if (col == 1) {
    out.species = up_type ? Species::Neutrino : Species::Electron;
  } else {
    out.species = up_type ? Species::Up : Species::Down;
  }
  out.chirality = row <= 2 ? Chirality::Right : Chirality::Left;
  out.sector = i == 1 ? Sector::Particle : Sector::Antiparticle;
  return out;
}

}  // namespace pst
