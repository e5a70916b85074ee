#ifndef JOINTS_TURAN_ALGEBRA_HPP
#define JOINTS_TURAN_ALGEBRA_HPP

#include <gmpxx.h>

#include "cliques.hpp"
#include "graph.hpp"

namespace joints {

// All thresholds and residuals are exact rationals; no verification path
// ever touches floating point.

enum class ThresholdKind {
    theorem1,            // n^(r-1) / (4r)^(r+6)
    ourb0,               // n^(r-1) / r^(r+5)
    lemma2_js,           // alpha * r * (n/r)^(r-1)
    turan_js_formula,    // (n/r)^(r-2)
    complete_js_formula  // C(n-2, r-2)
};

enum class Lemma2Variant { stated_r3, proof_r4 };

mpz_class binomial(long n, long k);

// t_r(n): edge count of the Turan graph.
mpz_class turan_edge_count(int n, int r);

// s-clique count of the complete multipartite graph with these parts:
// the elementary symmetric polynomial e_s of the sizes.
mpz_class multipartite_clique_count(const PartSizes& parts, int s);

mpz_class js_complete_formula(int n, int r);  // C(n-2, r-2), 2 <= r <= n
mpz_class js_turan_formula(int n, int r);     // (n/r)^(r-2), r >= 2 and r | n

mpq_class threshold(ThresholdKind kind, int n, int r, const mpq_class* alpha = nullptr);

mpq_class tur2_lower_bound(int n, int r);  // ((r-1)/2r) n^2 - r/8
mpq_class turr_lower_bound(int n, int r);  // (n/r)^r - (r^2/16)(n/r)^(r-2)

// LHS - RHS of the Moon-Moser inequality for the pair (s, t); >= 0 always.
mpq_class moon_moser_residual(const CliqueVector& kv, int n, int s, int t);

struct Lemma1Bound {
    bool hypothesis_ok = false;  // k_{r+1} < (alpha r^2/(r+1)) (n/r)^(r+1)
    mpq_class k2_bound;          // (r k_r / 2n^(r-2)) * prod_{s=2}^{r-1} ((r-s)/(rs)+alpha)^-1
};
Lemma1Bound lemma1_bound(const CliqueVector& kv, int n, int r, const mpq_class& alpha);

// ((r-1)/2r - r^3 alpha/2 - r^q/(16 n^2)) n^2 with q = 3 (as stated) or 4
// (as derived in the proof).
mpq_class lemma2_edge_bound(int n, int r, const mpq_class& alpha, Lemma2Variant variant);

mpq_class pow_rational(const mpq_class& base, int exponent);

}  // namespace joints

#endif
