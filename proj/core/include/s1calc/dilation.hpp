#pragma once

#include <map>
#include <optional>
#include <vector>

#include "s1calc/morphism.hpp"
#include "s1calc/split.hpp"

namespace s1calc {

// A chain of F^k C^+ given by its u^-i components, with what it certifies.
struct DilationWitness {
  int k = 0;
  std::vector<SparseVector> chain;  // chain[i] is the u^-i component (ambient C coordinates)
  SparseVector unit_image;          // u^0 part of the C_0-component of delta^{S1}(chain)
  Rational projection;              // pi_0 of unit_image (1 for both routes after scaling)
};

// e exact in F^k C^+. The witness chain is a primitive of e.
std::optional<DilationWitness> has_k_dilation(const SplitS1Complex& s, int k);
// A delta_+^{S1}-closed chain of F^k C_+^+ whose connecting image projects to [e].
std::optional<DilationWitness> has_k_semidilation(const SplitS1Complex& s, int k);

struct DilationReport {
  int truncation = 0;
  std::optional<int> order;  // nullopt: greater than the truncation
  std::optional<DilationWitness> witness;
};

// Smallest k <= n passing the test (n <= N); also checks that every larger
// k <= n passes, throwing InvariantViolation otherwise.
DilationReport order_of_dilation(const SplitS1Complex& s, int n);
DilationReport order_of_semidilation(const SplitS1Complex& s, int n);

enum class DilationKind { Dilation, Semidilation };

// Independent route through u-torsion: a closed x in F^n C_+^+ whose connecting
// class is [e] (resp. projects to [e]) and with u^{k+1} x exact in F^n C_+^+.
DilationReport order_via_torsion(const SplitS1Complex& s, int n, DilationKind kind);

// Delta^k_+ (the structural map of (C_+, delta_+)); needs 1 <= k, 2k <= N.
DeltaKMap delta_plus_k(const SplitS1Complex& s, int k);
// The connecting morphism delta_{+,0} : C_+ -> C_0, of shift 1.
S1Morphism connecting_morphism(const SplitS1Complex& s);
// Delta^k_{+,0} = Phi^k of the connecting morphism; needs 0 <= k <= N.
PhiKMap delta_plus0_k(const SplitS1Complex& s, int k);
// Delta^k_partial: Phi^k of R o delta_{+,0} for a cochain map R : C_0 -> D,
// given in the local coordinates of C_0. D must have trivial higher structure.
PhiKMap delta_partial_k(const SplitS1Complex& s, const S1Complex& d, const SparseMatrix& r, int k);

// Long exact sequence of 0 -> F^n C_0^+ -> F^n C^+ -> F^n C_+^+ -> 0.
struct LesNode {
  enum class Space { Zero, Full, Plus };
  Space space;
  int degree = 0;  // total degree
  std::size_t dimension = 0;
  std::size_t incoming_rank = 0;
  std::size_t outgoing_rank = 0;
  bool composite_zero = true;
  bool exact() const { return composite_zero && dimension - outgoing_rank == incoming_rank; }
};

struct LesReport {
  int level = 0;
  std::vector<LesNode> nodes;  // in sequence order
  bool exact() const;
};

// Nodes for total degrees lo..hi; level n <= N.
LesReport tautological_les(const SplitS1Complex& s, int n, int lo, int hi);

}  // namespace s1calc
