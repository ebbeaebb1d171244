#pragma once

#include <vector>

#include "refl/kops/kops.hpp"
#include "refl/kops/realization.hpp"
#include "refl/repr/evaluation.hpp"
#include "refl/verify/report.hpp"

// Residual checkers. Every function is instantiated for ExactField and NumericField.
namespace refl {

template <class Field>
using ScalarOf = typename Field::Scalar;

// Relations of U_q(sl2) on rep, Casimir forms, value and centrality, and the
// evaluated Serre relations (gradation from p, spectral parameter x).
template <class Field>
std::vector<CheckReport> check_representation(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                              const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                                              const CheckContext& ctx);

// R(x) = q^{1/2} (pi (x) 1) L(x) and the barred analogue.
template <class Field>
std::vector<CheckReport> check_R_reduction(const Field& f, const ParamSet<ScalarOf<Field>>& p,
                                           const Spectral<ScalarOf<Field>>& x, const CheckContext& ctx);

// sigma (x) sigma and iota (x) iota images of L, Lbar, R, Rbar, and compatibility of
// sigma / iota with the evaluation map.
template <class Field>
std::vector<CheckReport> check_symmetries(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                          const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                                          const CheckContext& ctx);

enum class YbeKind { RRR, RbRbRb, LLR, LbLbRb };

template <class Field>
CheckReport check_ybe(const Field& f, YbeKind kind, const Irrep<ScalarOf<Field>>& rep,
                      const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                      const Spectral<ScalarOf<Field>>& y, const Spectral<ScalarOf<Field>>& z, const CheckContext& ctx);

// Matrix reflection equation with the general scalar K-matrix.
template <class Field>
CheckReport check_reflection_matrix(const Field& f, const ParamSet<ScalarOf<Field>>& p,
                                    const Spectral<ScalarOf<Field>>& x, const Spectral<ScalarOf<Field>>& y,
                                    const CheckContext& ctx);

// Operator reflection equation for a K-operator variant; K2 is the scalar K-matrix
// with the same parameters.
template <class Field>
CheckReport check_reflection_operator(const Field& f, Variant v, const Irrep<ScalarOf<Field>>& rep,
                                      const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                                      const Spectral<ScalarOf<Field>>& y, const CheckContext& ctx);

// n = 2: q times the operator-level residual equals the matrix-level residual
// with K = pi(K-operator).
template <class Field>
CheckReport check_reflection_oracle(const Field& f, Variant v, const ParamSet<ScalarOf<Field>>& p,
                                    const Spectral<ScalarOf<Field>>& x, const Spectral<ScalarOf<Field>>& y,
                                    const CheckContext& ctx);

// ev_{x^{-1}}(a) K(x) = K(x) ev_x(a) for the variant's generator set.
template <class Field>
std::vector<CheckReport> check_intertwining(const Field& f, Variant v, const Irrep<ScalarOf<Field>>& rep,
                                            const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                                            const CheckContext& ctx);

// Lemmas used for the upper K-operator (k_- is ignored).
template <class Field>
std::vector<CheckReport> check_aux_lemmas(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                          const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                                          const CheckContext& ctx);

// Factored vs unfactored vs conjugated forms, k = 0 degenerations, sigma / iota
// relations between variants, Casimir commutation.
template <class Field>
std::vector<CheckReport> check_k_forms(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                       const ParamSet<ScalarOf<Field>>& p, const Spectral<ScalarOf<Field>>& x,
                                       const CheckContext& ctx);

// pi(K_upper) = kappa K-matrix (k_- = 0) and pi(K_lower) = kappa K-matrix (k_+ = 0).
template <class Field>
std::vector<CheckReport> check_fundamental_K(const Field& f, const ParamSet<ScalarOf<Field>>& p,
                                             const Spectral<ScalarOf<Field>>& x, const CheckContext& ctx);

// Triangular q-Onsager relations and the two cubic q-Dolan-Grady relations under ev_x.
template <class Field>
std::vector<CheckReport> check_coideal_algebras(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                                const ParamSet<ScalarOf<Field>>& p,
                                                const Spectral<ScalarOf<Field>>& x, const CheckContext& ctx);

// Coproduct formulas for T0, T1, P1 under ev_x (x) ev_y.
template <class Field>
std::vector<CheckReport> check_coideal_coproduct(const Field& f, const Irrep<ScalarOf<Field>>& rep1,
                                                 const Irrep<ScalarOf<Field>>& rep2,
                                                 const ParamSet<ScalarOf<Field>>& p,
                                                 const Spectral<ScalarOf<Field>>& x,
                                                 const Spectral<ScalarOf<Field>>& y, const CheckContext& ctx);

// Intertwining of the candidate x^{s0 H} g(ev_x(W1)) with W1 and W0. The W0
// residual is a finding whenever k_+ k_- != 0.
template <class Field>
std::vector<CheckReport> check_onsager_candidate(const Field& f, const Irrep<ScalarOf<Field>>& rep,
                                                 const ParamSet<ScalarOf<Field>>& p,
                                                 const Spectral<ScalarOf<Field>>& x, const CheckContext& ctx);

// Appendix identity `id` in 1..13: 1 is the q-Hadamard expansion, 2..13 the
// conjugation formulas by exp(a E q^{bH}) / exp(a F q^{bH}).
template <class Field>
CheckReport check_appendix(const Field& f, int id, const Irrep<ScalarOf<Field>>& rep, const ScalarOf<Field>& a,
                           HalfInt b, HalfInt c, const CheckContext& ctx);

std::string to_string(YbeKind k);

}  // namespace refl
