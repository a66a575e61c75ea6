#pragma once

namespace lieent::cite {

// Registry of the source citations emitted in certificates and validation
// reports. These strings are wire format: golden tests pin them, so edits
// here are output-breaking. Section and proposition numbers refer to the
// reference text on entropy of Lie-group endomorphisms that this library
// implements; they are emitted verbatim so results can be audited against it.

inline constexpr const char* bowen_formula = "prop. 2.4 (Bowen's formula): h_d(phi) = sum over |lambda| > 1 of log|lambda|, d a right invariant distance";
inline constexpr const char* variational = "prop. 2.1: topological entropy is min over d of h_d(phi)";
inline constexpr const char* product_formula = "prop. 2.2: formula for the entropy of products";
inline constexpr const char* factor_bound = "prop. 2.3: entropy of a proper surjective factor is bounded by the entropy of the source";
inline constexpr const char* properness = "sec. 2: a continuous open surjection with compact fibers is proper; prop. 6.2: if pi is a proper map, then phi is a proper map";
inline constexpr const char* li_yorke_def = "def. 2.6: Li-Yorke pair (proximal along m_k, pair-recurrent along n_k)";
inline constexpr const char* li_yorke_exists = "prop. 2.9: positive entropy yields a Li-Yorke pair";
inline constexpr const char* recurrent_set = "prop. 2.10: R(T) = Fix(T_H) intersect Fix(T_U) for the multiplicative Jordan parts";

inline constexpr const char* torus_formula = "sec. 1 and sec. 6: entropy formula for torus endomorphisms (after Sinai), evaluated by Bowen's formula on the lattice lift";
inline constexpr const char* vector_trivial = "sec. 1: the entropy of a linear isomorphism of a finite dimensional vector space always vanishes";
inline constexpr const char* abelian_reduction = "sec. 3: phi = [[T, *], [0, S]] leaves Z^p invariant; h(phi) = h(phi restricted to the toral component)";
inline constexpr const char* coupling_ignored = "sec. 3: the coupling block of phi = [[T, *], [0, S]] does not affect entropy";
inline constexpr const char* toral_component_def = "sec. 1: T(G) is the toral component of the identity component of the center of G";
inline constexpr const char* nilpotent_reduction = "thm. 4.3: h(phi) = h(phi|T(G)) for a surjective endomorphism of a connected nilpotent Lie group; prop. 4.1: G/T(G) is simply connected";
inline constexpr const char* semisimple_zero = "thm. 5.3: h(phi) = h(phi|T(G)) = 0 for a connected semi-simple Lie group";
inline constexpr const char* semisimple_power = "prop. 5.1: phi^k = C_g for some k >= 1 and some g";
inline constexpr const char* adjoint_jordan = "lemma 5.2: g = ehu maps to the multiplicative Jordan decomposition of Ad(g); R(C_g) = G_h intersect G_u";
inline constexpr const char* bowen_strict = "sec. 1: Bowen's formula gives just an upper bound for non-abelian groups";
inline constexpr const char* reductive_split = "prop. 6.3: Z(G)_0 x G' covers G with phi~ = phi|Z(G)_0 x phi|G'; prop. 6.5: h(phi) = h(phi|T(G)) when pi is proper";
inline constexpr const char* pi_proper_warning = "prop. 6.5 is proven only when the projection pi: Z(G)_0 x G' -> G is proper";
inline constexpr const char* compact_reductive = "sec. 6 final theorem: every compact Lie group is a reductive Lie group, and pi is automatically proper";
inline constexpr const char* power_rule = "thm. 5.3 proof: h(phi^k) = k h(phi)";
inline constexpr const char* conjectural_general = "sec. 7 final display: h(phi) = h(phi|T(R')) + h(phi~ restricted to T(R/R'))";
inline constexpr const char* conjectural_gap = "sec. 7 (conjectural): requires prop. 2.5 for locally compact principal bundles, which is not proven there";
inline constexpr const char* cyclotomic_note = "exact integer mode: a lattice map has entropy exactly zero iff its characteristic polynomial is a product of cyclotomic factors";
inline constexpr const char* plumbing = "not from the reference text: implementation detail";

}  // namespace lieent::cite
