#pragma once

#include <map>
#include <optional>
#include <vector>

#include "s1calc/s1complex.hpp"

namespace s1calc {

// A chain A = sum_{i=0}^{k} u^-i alpha_{k-i} in F^k C^+ together with the
// exactly re-checked identity delta^{S1}(A) = boundary (sitting at u^0).
// boundary == 0 certifies alpha[0] in Z_k; otherwise it certifies boundary in B_k.
class WitnessedCycle {
 public:
  // Throws InvariantViolation if the identity fails.
  WitnessedCycle(const S1Complex& c, std::vector<SparseVector> alpha, SparseVector boundary);

  int k() const { return static_cast<int>(alpha_.size()) - 1; }
  const std::vector<SparseVector>& alpha() const { return alpha_; }
  const SparseVector& leading() const { return alpha_.front(); }
  const SparseVector& boundary() const { return boundary_; }
  // chain()[i] is the u^-i component, i.e. alpha[k - i].
  std::vector<SparseVector> chain() const;

 private:
  std::vector<SparseVector> alpha_;
  SparseVector boundary_;
};

// Z_k or B_k, graded, with a witness for each basis vector.
struct FiltrationSpace {
  int k = 0;
  Index ambient = 0;
  bool exact = false;  // B_k: basis vectors are the witnesses' boundaries
  std::map<int, std::vector<WitnessedCycle>> witnesses;

  // Basis of the degree-d part (ambient columns); empty matrix if none.
  SparseMatrix in_degree(int d) const;
  std::size_t dimension(int d) const;
  SparseMatrix all() const;
};

// Z_k: leading terms of delta^{S1}-closed chains of F^k C^+. Requires k <= N.
FiltrationSpace z_space(const S1Complex& c, int k);
// B_k: elements of C exact in F^k C^+. Requires k <= N.
FiltrationSpace b_space(const S1Complex& c, int k);

// Completes a homogeneous alpha0 to a closed chain of F^k C^+, if possible.
std::optional<WitnessedCycle> find_z_witness(const S1Complex& c, int k, const SparseVector& alpha0);
// A primitive in F^k C^+ of a homogeneous alpha, if one exists.
std::optional<WitnessedCycle> find_b_witness(const S1Complex& c, int k, const SparseVector& alpha);

// Delta^{k}(alpha_0) = sum_{i=1}^{k} delta^i(alpha_{k-i}) for a witness of Z_{k-1}.
SparseVector delta_k_value(const S1Complex& c, const WitnessedCycle& z_witness);

// Delta^k : Z_{k-1}/B_0 -> Z_0/B_{k-1}, degree 1 - 2k.
struct DeltaKMap {
  struct Block {
    int source_degree = 0;
    Subquotient domain;
    Subquotient codomain;
    SparseMatrix matrix;  // codomain coordinates of the images of domain basis vectors
  };
  int k = 0;
  std::map<int, Block> blocks;  // keyed by source degree

  std::size_t rank(int source_degree) const;
  std::size_t kernel_dimension(int source_degree) const;
  std::size_t cokernel_dimension(int source_degree) const;
};

// Requires 1 <= k and 2k <= N (UnsupportedTruncation otherwise).
DeltaKMap delta_k(const S1Complex& c, int k);

// Page E_{k+1} of the u-adic (Leray) spectral sequence of F^N C^+:
// column i is u^-i Z_{min(i,k)} / B_{min(k, N-i)}, for i = 0..N. The i = 0
// column uses the same formula.
struct LerayPage {
  struct Entry {
    int column = 0;
    int degree = 0;  // degree in C; the total degree is degree - 2 * column
    Subquotient space;
  };
  struct Differential {
    int from_column = 0;
    int to_column = 0;
    int from_degree = 0;  // C-degree of the source entry
    SparseMatrix matrix;
  };
  int truncation = 0;
  int k = 0;
  std::vector<Entry> entries;
  bool has_differential = false;  // computed when 2(k+1) <= N
  std::vector<Differential> differentials;

  std::size_t dimension(int column, int degree) const;
  std::size_t total_dimension(int total_degree) const;
  const Differential* differential_from(int column, int degree) const;
  const Differential* differential_into(int column, int degree) const;
};

// Requires n <= N and k <= n.
LerayPage leray_page(const S1Complex& c, int n, int k);

}  // namespace s1calc
