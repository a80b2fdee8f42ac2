#pragma once

#include <map>
#include <vector>

#include "s1calc/spectral.hpp"

namespace s1calc {

// phi = (phi^0, ..., phi^N) : (C, delta) -> (D, d), phi^r of degree shift - 2r.
// A morphism of odd shift satisfies sum (phi^i delta^j + d^j phi^i) = 0, so the
// connecting map C_+ -> C_0 of a splitting is a morphism of shift 1.
class S1Morphism {
 public:
  S1Morphism() = default;
  // Throws InputError on shape or truncation mismatch.
  S1Morphism(S1Complex source, S1Complex target, std::vector<SparseMatrix> components, int shift = 0);

  const S1Complex& source() const { return source_; }
  const S1Complex& target() const { return target_; }
  int shift() const { return shift_; }
  int truncation() const { return source_.truncation(); }
  const std::vector<SparseMatrix>& components() const { return components_; }
  // phi^r; zero for r > N.
  const SparseMatrix& component(int r) const;

  friend bool operator==(const S1Morphism&, const S1Morphism&) = default;

 private:
  S1Complex source_;
  S1Complex target_;
  std::vector<SparseMatrix> components_;
  int shift_ = 0;
  SparseMatrix zero_;
};

S1Morphism identity_morphism(const S1Complex& c);
S1Morphism zero_morphism(const S1Complex& source, const S1Complex& target);

struct MorphismReport {
  std::vector<RelationCheck> relations;
  std::vector<DegreeViolation> degree_violations;
  bool valid() const;
};

MorphismReport verify_morphism(const S1Morphism& phi);

// h = (h^0, ..., h^N) with h^r of degree -2r-1, certifying
// phi^k - psi^k = sum_{i+j=k} (h^i delta^j + d^j h^i). Degree-0 morphisms only.
struct S1Homotopy {
  S1Morphism from;
  S1Morphism to;
  std::vector<SparseMatrix> components;
};

MorphismReport verify_homotopy(const S1Homotopy& h);

// (phi o psi)^k = sum_{i+j=k} phi^i psi^j; requires target(psi) == source(phi).
S1Morphism compose(const S1Morphism& phi, const S1Morphism& psi);

// phi^{S1} : F^k C^+ -> F^k D^+ in the index conventions of FilteredPlusComplex.
SparseMatrix plus_map(const S1Morphism& phi, int k);

// Phi^k : Z_k/B_0 -> H(D)/I_{k-1} for a morphism into a complex with d^r = 0
// for r >= 1, where I_{k-1} is spanned by coboundaries and the classes
// Phi^j(Z_j), j < k. This realizes ker Delta^k -> coker Phi^{k-1}.
struct PhiKMap {
  struct Block {
    int source_degree = 0;
    Subquotient domain;    // Z_k / B_0 in C
    Subquotient codomain;  // cocycles of D / I_{k-1}
    SparseMatrix matrix;
  };
  int k = 0;
  int shift = 0;
  std::map<int, Block> blocks;

  std::size_t rank(int source_degree) const;
};

// Requires 0 <= k <= N.
PhiKMap phi_k(const S1Morphism& phi, int k);
// The classes Phi^k(alpha_0) for one witness, as cocycles of D.
SparseVector phi_k_value(const S1Morphism& phi, const WitnessedCycle& z_witness);

struct FunctorialityReport {
  struct Level {
    int k = 0;
    bool z_preserved = true;
    bool b_preserved = true;
    bool delta_commutes = true;  // only checked for 1 <= k, 2k <= N
  };
  std::vector<Level> levels;
  bool valid() const;
};

// phi^0(Z_k) <= Z_k(D), phi^0(B_k) <= B_k(D), and phi^0 Delta^k = Delta^k phi^0.
FunctorialityReport verify_functoriality(const S1Morphism& phi);

// The map induced by phi^{S1} on H(F^N C^+) -> H(F^N D^+) in each total degree.
std::map<int, SparseMatrix> induced_plus_cohomology_map(const S1Morphism& phi, int level);

// Filtration check for the matrix picture of phi^{S1} on cohomology: the image
// of H(F^j C^+) lands in the image of H(F^j D^+) inside H(F^N D^+), for every j.
struct ReconstructionReport {
  std::vector<bool> filtration_preserved;  // indexed by j
  bool valid() const;
};

ReconstructionReport reconstruction_diagnostic(const S1Morphism& phi);

}  // namespace s1calc
