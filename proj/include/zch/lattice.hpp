// Exact bilinear-form algebra on integer lattices: pairing, definiteness,
// signature, orthogonal complements, (-2)-reflections, isotropic search.
#ifndef ZCH_LATTICE_HPP
#define ZCH_LATTICE_HPP

#include <optional>
#include <vector>

#include "zch/numeric.hpp"

namespace zch {

// Symmetric integer Gram matrix on a fixed basis.
class IntersectionForm {
 public:
  explicit IntersectionForm(IntMat gram);

  Eigen::Index rank() const { return gram_.rows(); }
  const IntMat& gram() const { return gram_; }

 private:
  IntMat gram_;
};

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

Rat pair(const RatVec& v, const RatVec& w, const IntersectionForm& form);
Int pair(const IntVec& v, const IntVec& w, const IntersectionForm& form);
Rat pair(const RatVec& v, const IntVec& w, const IntersectionForm& form);

// Determinant by fraction-free Bareiss elimination.
Int exact_determinant(const IntMat& m);

// Negative-definiteness of the principal submatrix on `subset`, decided by
// alternating signs of leading principal minors. Empty subset counts as
// negative definite; semidefinite submatrices do not.
bool is_negative_definite(const IntersectionForm& form,
                          const std::vector<Eigen::Index>& subset);
bool is_negative_definite(const IntMat& gram);

// Inertia of the form, by symmetric elimination over exact rationals.
Signature signature(const IntersectionForm& form);
Signature signature(const IntMat& gram);

// Primitive basis of {w : pair(w, v) = 0 for all input v}. The result spans
// the full kernel sublattice, not a finite-index subgroup.
std::vector<IntVec> orthogonal_complement(const std::vector<IntVec>& vectors,
                                          const IntersectionForm& form);

// Kernel of an integer matrix over Z, as columns of a basis matrix.
IntMat integer_kernel(const IntMat& m);

// Elementary divisors d1 | d2 | ... of an integer matrix (Smith normal form
// diagonal, non-negative, zeros trailing).
std::vector<Int> smith_normal_form_diagonal(IntMat m);

// Picard-Lefschetz reflection d -> d + (d.root) root; requires root^2 = -2.
IntVec reflection(const IntVec& d, const IntVec& root,
                  const IntersectionForm& form);

// First nonzero primitive v with v^2 = 0 in the max-norm box of the given
// bound, scanning coordinates lexicographically with each coordinate taking
// values in the fixed order 0, 1, -1, 2, -2, ...
std::optional<IntVec> find_isotropic_primitive(const IntersectionForm& form,
                                               long bound = 4);

bool is_primitive(const IntVec& v);

// Gram matrix of the form restricted to a list of classes.
IntMat restricted_gram(const IntersectionForm& form,
                       const std::vector<IntVec>& vectors);

}  // namespace zch

#endif  // ZCH_LATTICE_HPP
