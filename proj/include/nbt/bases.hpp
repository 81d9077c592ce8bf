#pragma once
#include <memory>
#include <mutex>
#include <vector>

#include "nbt/ff.hpp"
#include "nbt/matrix.hpp"

namespace nbt {

/// An ordered n-tuple of elements of F_{q^n}, candidate basis over F_q.
/// Two derived matrices are cached on first use and shared across copies:
///   * the regular matrix A with A(i, j) = elems[j]^(q^i), over F_{q^n};
///   * the trace matrix  T with T(i, j) = Tr(elems[i] * elems[j]), over F_q.
struct BasisSet {
    const TowerSpec* tower = nullptr;
    std::vector<ExtElement> elems;

    BasisSet() = default;
    BasisSet(const TowerSpec& t, std::vector<ExtElement> es);

    const Mat<ExtElement>& regular_matrix() const;
    const Mat<FieldElement>& trace_matrix() const;

  private:
    struct Caches {
        std::mutex mu;
        std::unique_ptr<Mat<ExtElement>> a;
        std::unique_ptr<Mat<FieldElement>> t;
    };
    std::shared_ptr<Caches> caches_;
};

/// A basis together with its unique trace-dual: Tr(basis[i] * dual[j]) is 1
/// when i = j and 0 otherwise.
struct DualPair {
    BasisSet basis;
    BasisSet dual;
};

/// The power basis 1, a, a^2, ..., a^(n-1).
BasisSet power_basis(const TowerSpec& t, const ExtElement& a);
/// The conjugate tuple a, a^q, a^(q^2), ..., a^(q^(n-1)).
BasisSet conjugate_set(const TowerSpec& t, const ExtElement& a);

/// Basis test.  Decides by det(A) != 0 and cross-checks the verdict against
/// det(T) != 0 and against the F_q-rank of the coordinate matrix; the three
/// must agree.
bool is_basis(const BasisSet& s);

/// det(T), an element of F_q; zero exactly when s is not a basis.
FieldElement discriminant(const BasisSet& s);

/// Discriminant of the power basis of a, computed three ways and required to
/// agree: det(T); the squared Vandermonde product over the conjugates of a;
/// and (when a generates the field) the signed norm of f'(a) for f the
/// minimal polynomial of a.
FieldElement power_discriminant(const ExtElement& a);

/// The unique dual basis, by inverting the trace matrix (NotABasis when
/// singular).  The duality relations are re-verified before returning.
DualPair dual_basis(const BasisSet& s);

/// Dual of the power basis of a root a of the monic irreducible f, through
/// the quotient coefficients: f(x) = (x - a)(b_{n-1} x^{n-1} + ... + b_0)
/// gives the dual elements b_i / f'(a).  Cross-checked against dual_basis.
BasisSet power_dual_basis(const UPoly<FieldElement>& f, const ExtElement& a);

/// The index permutation i -> i*k mod n induced on Frobenius rows by raising
/// the ground field from F_q to F_{q^k}, gcd(k, n) = 1.
std::vector<i64> lift_permutation(i64 n, i64 k);

/// Whether the n-tuple s stays linearly independent over the larger ground
/// field F_{q^k} inside F_{q^(nk)}; requires gcd(k, n) = 1 (NotCoprime).
/// Internally verifies that the lifted regular matrix is the expected row
/// permutation of the embedded one.
bool lift_basis_check(const BasisSet& s, i64 k);

/// Products {a_i * b_u} of a basis of F_{q^r} and a basis of F_{q^s}, formed
/// in F_{q^(rs)} under generator-determined embeddings; entry u*r + i is
/// a_i * b_u.
BasisSet iterated_basis(const BasisSet& a, const BasisSet& b);

/// The iterated construction applied to two dual pairs; requires
/// gcd(r, s) = 1 (NotCoprime).  The full n^2 duality relations are verified.
DualPair iterated_dual_basis(const DualPair& a, const DualPair& b);

/// Number of distinct ordered bases of F_{q^n} over F_q:
/// prod_{i<n} (q^n - q^i).
Int count_bases(i64 n, const FieldSpec& field);

/// Number of distinct ordered self-dual bases of F_{q^n} over F_q: zero when
/// q is odd and n is even; otherwise prod_{i=1}^{n-1} (q^i - e_i) with
/// e_i = 1 for even i and 0 for odd i, doubled when q and n are both odd.
/// The three-case split is pinned by exhaustive counts at small sizes.
Int count_selfdual_bases(i64 n, const FieldSpec& field);

/// For a monic irreducible trinomial/binomial x^n - c x^k - d, the index
/// permutation pi with pi(i) = k - 1 - i mod n when c != 0 and
/// pi(i) = -1 - i mod n when c = 0, linking the power basis to its dual up to
/// a monomial transformation.  Any other polynomial shape raises WrongShape.
std::vector<i64> weak_selfdual_permutation(const UPoly<FieldElement>& f);

}  // namespace nbt
