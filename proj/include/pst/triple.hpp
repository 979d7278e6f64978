#pragma once

#include <string>
#include <vector>

#include "pst/op.hpp"

namespace pst {

// ---------------------------------------------------------------------------
// Real structure and gradings
// ---------------------------------------------------------------------------

/// Basis position paired with `pos` by J: (k, i, r) <-> (r, 3-i, k), 0-based.
std::size_t j_partner(std::size_t pos);

/// J[v; w] = [w^dagger; v^dagger] on the 32-component vector of H.
std::vector<GaussianRational> apply_J(const std::vector<GaussianRational>& v);

/// J x J^{-1}; complex antilinear in x.
Op j_conjugate(const Op& x);

/// x° = J x* J^{-1}.
Op opposite(const Op& x);

/// Left-right chirality grading.
Op gamma();

/// Grading in which left-handed leptons share parity with right-handed quarks.
Op gamma_star();

enum class GradingTag { Gamma, GammaStar };

Op grading(GradingTag g);
std::string to_string(GradingTag g);

/// KO-dimension 6, signature (0, 2) configuration of the triple.
struct TripleConfig {
  int ko_dimension = 6;
  int p = 0;
  int q = 2;
  int epsilon = 1;  ///< D J = epsilon J D

  /// Sign s in beta gamma = s gamma beta.
  int beta_gamma_sign() const { return p % 2 == 0 ? 1 : -1; }
  /// Sign s in beta J = s J beta.
  int beta_j_sign() const;
};

// ---------------------------------------------------------------------------
// Algebra cases
// ---------------------------------------------------------------------------

enum class CaseTag { Unreduced, Reduced, StandardModel };

std::string to_string(CaseTag c);
/// Accepts "unreduced", "reduced", "sm" / "standard-model"; throws std::invalid_argument.
CaseTag parse_case(const std::string& name);

/// Algebra element as its direct-summand blocks:
///   unreduced: {q1 (2x2), q2 (2x2), m (4x4)}
///   reduced:   {q1 (2x2), q2 (2x2), lambda (1x1), n (3x3)}
///   standard model: {lambda (1x1), q (2x2), m (3x3)}
/// Quaternion blocks must have the form [[a, b], [-conj(b), conj(a)]].
struct AlgebraElement {
  std::vector<Mat> blocks;
};

/// Block sizes of the direct-summand decomposition for a case.
std::vector<std::size_t> block_sizes(CaseTag c);
/// Indices of the blocks that hold quaternions.
std::vector<std::size_t> quaternion_blocks(CaseTag c);

AlgebraElement unit_element(CaseTag c);

struct AlgebraCase {
  CaseTag tag;
  std::vector<Op> real_generators;
  std::vector<Op> complexified_generators;
  std::string block_structure;
};

AlgebraCase algebra_case(CaseTag c);

/// Representation pi on H; throws ShapeError on block mismatch.
Op rep(CaseTag c, const AlgebraElement& a);

/// Representation without the quaternion-form check, for complexified elements.
Op rep_complexified(CaseTag c, const AlgebraElement& a);

// ---------------------------------------------------------------------------
// Particle content
// ---------------------------------------------------------------------------

enum class Species { Neutrino, Electron, Up, Down };
enum class Chirality { Right, Left };
enum class Sector { Particle, Antiparticle };

struct ParticleLabel {
  Species species;
  int color;  ///< 0 for leptons, 1..3 for quarks
  Chirality chirality;
  Sector sector;

  std::string name() const;
  friend bool operator==(const ParticleLabel&, const ParticleLabel&) = default;
};

/// Label of the 1-based flat basis index.
ParticleLabel label(int flat_index);

}  // namespace pst
