#include "turan_algebra.hpp"

#include <stdexcept>
#include <string>

#include "generators.hpp"

namespace joints {

namespace {

mpq_class make_q(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

mpq_class pow_rational(const mpq_class& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::invalid_argument("pow_rational: zero to negative power");
        return pow_rational(1 / base, -exponent);
    }
    mpq_class result = 1;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

mpz_class binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

mpz_class turan_edge_count(int n, int r) {
    require(r >= 1, "turan_edge_count: r must be positive");
    require(n >= 0, "turan_edge_count: negative order");
    mpz_class result = binomial(n, 2);
    for (int size : turan_part_sizes(n, r).sizes) result -= binomial(size, 2);
    return result;
}

mpz_class multipartite_clique_count(const PartSizes& parts, int s) {
    require(s >= 0, "multipartite_clique_count: negative order");
    if (s > parts.parts()) return 0;
    if (s == parts.parts()) {
        // One vertex from every part: e_s degenerates to the product.
        mpz_class product = 1;
        for (int size : parts.sizes) product *= size;
        return product;
    }
    // e_s of the sizes, one part at a time.
    std::vector<mpz_class> e(static_cast<std::size_t>(s) + 1, 0);
    e[0] = 1;
    for (int size : parts.sizes)
        for (int j = s; j >= 1; --j)
            e[static_cast<std::size_t>(j)] += size * e[static_cast<std::size_t>(j) - 1];
    return e[static_cast<std::size_t>(s)];
}

mpz_class js_complete_formula(int n, int r) {
    require(r >= 2 && r <= n, "js_complete_formula: need 2 <= r <= n");
    return binomial(n - 2, r - 2);
}

mpz_class js_turan_formula(int n, int r) {
    require(r >= 2, "js_turan_formula: need r >= 2");
    require(n % r == 0, "js_turan_formula: r must divide n (use joint_size on the generated graph otherwise)");
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(n / r), static_cast<unsigned long>(r - 2));
    return result;
}

mpq_class threshold(ThresholdKind kind, int n, int r, const mpq_class* alpha) {
    require(r >= 2, "threshold: need r >= 2");
    require(n >= 0, "threshold: negative order");
    const mpq_class n_over_r = make_q(n, r);
    switch (kind) {
        case ThresholdKind::theorem1: {
            mpz_class num, den;
            mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r - 1));
            mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(4 * r), static_cast<unsigned long>(r + 6));
            return make_q(num, den);
        }
        case ThresholdKind::ourb0: {
            mpz_class num, den;
            mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r - 1));
            mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(r + 5));
            return make_q(num, den);
        }
        case ThresholdKind::lemma2_js: {
            require(alpha != nullptr && *alpha > 0, "threshold: lemma2_js requires alpha > 0");
            return *alpha * r * pow_rational(n_over_r, r - 1);
        }
        case ThresholdKind::turan_js_formula:
            return pow_rational(n_over_r, r - 2);
        case ThresholdKind::complete_js_formula:
            return mpq_class(js_complete_formula(n, r));
    }
    throw std::logic_error("threshold: unknown kind");
}

mpq_class tur2_lower_bound(int n, int r) {
    require(r >= 2 && r <= n, "tur2_lower_bound: need 2 <= r <= n");
    return make_q(r - 1, 2 * r) * n * n - make_q(r, 8);
}

mpq_class turr_lower_bound(int n, int r) {
    require(r >= 2 && r <= n, "turr_lower_bound: need 2 <= r <= n");
    // (n/r)^r - (r^2/16)(n/r)^(r-2) = (16 n^2 - r^4) n^(r-2) / (16 r^r),
    // assembled with integer powers to keep the range sweep fast.
    mpz_class n_pow, r_pow;
    mpz_ui_pow_ui(n_pow.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r - 2));
    mpz_ui_pow_ui(r_pow.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(r));
    const mpz_class r2 = mpz_class(r) * r;
    return make_q((16 * mpz_class(n) * n - r2 * r2) * n_pow, 16 * r_pow);
}

mpq_class moon_moser_residual(const CliqueVector& kv, int n, int s, int t) {
    require(1 <= s && s < t && t < n, "moon_moser_residual: need 1 <= s < t < n");
    if (kv.k(t) < 1) throw std::invalid_argument("moon_moser_residual: graph has no t-clique");
    auto side = [&](int j) -> mpq_class {
        return make_q((j + 1) * kv.k(j + 1), j * kv.k(j)) - make_q(n, j);
    };
    return mpq_class(side(t) - side(s));
}

Lemma1Bound lemma1_bound(const CliqueVector& kv, int n, int r, const mpq_class& alpha) {
    require(r >= 3, "lemma1_bound: need r >= 3 (at r = 2 the claim degenerates to k_2 > k_2)");
    require(alpha >= 0, "lemma1_bound: need alpha >= 0");
    if (kv.k(r) < 1) throw std::invalid_argument("lemma1_bound: graph has no r-clique");
    Lemma1Bound out;
    const mpq_class cap = alpha * make_q(r * r, r + 1) * pow_rational(make_q(n, r), r + 1);
    out.hypothesis_ok = mpq_class(kv.k(r + 1)) < cap;
    mpq_class product_inv = 1;  // empty product at r = 3 boundary handled by the loop
    for (int s = 2; s <= r - 1; ++s) product_inv /= make_q(r - s, r * s) + alpha;
    mpz_class n_pow;
    mpz_ui_pow_ui(n_pow.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r - 2));
    out.k2_bound = make_q(r * kv.k(r), 2 * n_pow) * product_inv;
    return out;
}

mpq_class lemma2_edge_bound(int n, int r, const mpq_class& alpha, Lemma2Variant variant) {
    require(n >= 1, "lemma2_edge_bound: need n >= 1");
    require(r >= 2, "lemma2_edge_bound: need r >= 2");
    require(alpha > 0, "lemma2_edge_bound: need alpha > 0");
    const int q = variant == Lemma2Variant::stated_r3 ? 3 : 4;
    mpq_class r_pow = 1;
    for (int i = 0; i < q; ++i) r_pow *= r;
    const mpq_class coefficient =
        make_q(r - 1, 2 * r) - mpq_class(r) * r * r * alpha / 2 - r_pow / (16 * mpq_class(n) * n);
    return coefficient * n * n;
}

}  // namespace joints
