#ifndef QUADRAFORM_CONSTRUCTIONS_HPP
#define QUADRAFORM_CONSTRUCTIONS_HPP

#include <optional>
#include <vector>

#include "quadraform/assoc.hpp"
#include "quadraform/current.hpp"
#include "quadraform/lie.hpp"

namespace quadraform {

/// Heisenberg algebra h_n on basis (p_1..p_n, q_1..q_n, hbar) with
/// [p_i, q_i] = hbar and hbar central.
LieAlgebra heisenberg(std::size_t n);

/// sl2 in the Chevalley basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlgebra sl2();

struct ExtendedHeisenberg {
  LieAlgebra algebra;    // basis order (D, p_1..p_n, q_1..q_n, hbar)
  BilinearForm metric;   // B(x,y) = omega(phi^{-1} x, y) on V_n, B(D,hbar)=1
  RationalMatrix phi;    // D restricted to V_n, in the (p,q) basis
  RationalMatrix omega;  // standard symplectic form on V_n
};

/// h_n(D) with its canonical invariant metric. phi defaults to
/// diag(1..1,-1..-1) in the (p,q) basis; a supplied phi must be invertible
/// and omega-anti-self-adjoint (InvalidPhi otherwise).
ExtendedHeisenberg heisenberg_extended(std::size_t n,
                                       std::optional<RationalMatrix> phi = std::nullopt);

/// alpha(s,t) = gamma(s,t) Id + xi(s,t) N on h_n(D), N(D) = hbar, N^2 = 0.
/// gamma must be invariant, symmetric and nondegenerate (BadGamma), xi
/// symmetric (BadXi).
AlphaMap heisenberg_current_alpha(std::size_t n, const AssocAlgebra& S, const BilinearForm& gamma,
                                  const BilinearForm& xi);

struct DoubleExtensionData {
  LieAlgebra h;
  BilinearForm B_h;
  RationalMatrix D;
  LieAlgebra result;   // basis order (d, h-basis, c)
  BilinearForm B_ext;  // hyperbolic d/c plane orthogonal to h, B_h inside
  bool c_in_derived;   // whether c lies in [result, result]
};

/// Double extension of (h, B_h) by the B_h-skew derivation D:
/// [x,y] = [x,y]_h + B_h(Dx,y) c, [d,x] = Dx, c central.
DoubleExtensionData double_extension(const LieAlgebra& h, const BilinearForm& B_h,
                                     const RationalMatrix& D);

/// Basis of { D : derivation of h, B_h(Dx,y) + B_h(x,Dy) = 0 }.
std::vector<RationalMatrix> skew_derivations(const LieAlgebra& h, const BilinearForm& B_h);

/// Pair-indexed map S x S -> h used for the f argument below; empty() means
/// identically zero.
struct PairVectorMap {
  std::size_t s_dim = 0;
  std::vector<Vec> values;  // layout a*s_dim+b; empty for the zero map

  const Vec* value(std::size_t a, std::size_t b) const {
    return values.empty() ? nullptr : &values[a * s_dim + b];
  }
};

/// Extends alpha_h on h to alpha on h(D) following the double-extension
/// recipe:
///   alpha(s,t)(x) = alpha_h(s,t)(x) + B_h(f(s,t), x) c,
///   alpha(s,t)(d) = gammap(s,t) d + f(s,t) + zeta(s,t) c,
///   alpha(s,t)(c) = gammap(s,t) c.
/// Preconditions (CompatibilityFailed with the violated identity): gammap
/// invariant, symmetric, nondegenerate; zeta symmetric; f valued in
/// C(h) /\ Ker(D); alpha_h o D = D o alpha_h = gammap(s,t) D. When alpha_h
/// is not supplied, gammap * Id_h is used. The returned alpha is verified to
/// satisfy all the characterization conditions on h(D).
AlphaMap double_extension_alpha(const LieAlgebra& h, const BilinearForm& B_h,
                                const RationalMatrix& D, const AssocAlgebra& S,
                                std::optional<AlphaMap> alpha_h, const BilinearForm& gammap,
                                const PairVectorMap& f, const BilinearForm& zeta);

struct WittSplitData {
  Vec d;                    // B(c,d) = 1, B(d,d) = 0
  std::vector<Vec> h_basis; // RREF basis of (Fc + Fd)^perp
  LieAlgebra h;             // projected bracket in the h_basis coordinates
  BilinearForm B_h;         // restriction of B to h
  RationalMatrix D;         // [d, .] restricted to h, in h_basis coordinates
  RationalMatrix to_witt_basis;  // columns (d, h_basis..., c) in old coordinates
  bool c_in_derived;        // membership in [g,g]; automatic for indecomposable g
};

/// Witt decomposition of (g, B) along a nonzero isotropic central c
/// (BadCenterVector otherwise). Round-trips with double_extension.
WittSplitData witt_split(const LieAlgebra& g, const BilinearForm& B, const Vec& c);

}  // namespace quadraform

#endif
