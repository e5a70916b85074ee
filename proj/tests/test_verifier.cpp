#include <doctest.h>

#include "generators.hpp"
#include "verifier.hpp"

using namespace joints;

TEST_CASE("property names round-trip") {
    for (Property p : {Property::moon_moser, Property::lemma1, Property::lemma2, Property::theorem1,
                       Property::ourb0, Property::bol76, Property::zykov})
        CHECK(property_from_name(property_name(p)) == p);
    CHECK(property_from_name("moon_moser") == Property::moon_moser);
    CHECK_FALSE(property_from_name("lemma3").has_value());
}

TEST_CASE("proof_alpha") {
    CHECK(proof_alpha(2) == mpq_class(1, 8388608));  // 4^8 * 2^7
    CHECK(proof_alpha(3) == mpq_class(1, mpz_class("573308928")));  // 4^9 * 3^7
}

TEST_CASE("check_moon_moser") {
    Graph k4e = complete_graph(4);
    k4e.remove_edge(2, 3);
    const auto reports = check_moon_moser(k4e);
    REQUIRE_FALSE(reports.empty());
    bool found_s1_t2 = false;
    for (const auto& r : reports) {
        CHECK(r.verdict == Verdict::holds);
        CHECK(*r.residual >= 0);
        if (r.instance == "s=1 t=2") {
            found_s1_t2 = true;
            CHECK(*r.residual == mpq_class(1, 10));
        }
    }
    CHECK(found_s1_t2);

    // bipartite tightness
    const auto bip = check_moon_moser(turan(6, 2));
    REQUIRE(bip.size() == 1);
    CHECK(bip[0].instance == "s=1 t=2");
    CHECK(*bip[0].residual == 0);
}

TEST_CASE("check_lemma1") {
    const CheckReport a = check_lemma1(turan(9, 3), 3, mpq_class(1, 1000));
    CHECK(a.verdict == Verdict::holds);
    CHECK(*a.residual == mpq_class(81, 503));  // 27 - 13500/503

    const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const CheckReport b = check_lemma1(c5, 3, mpq_class(1));
    CHECK(b.verdict == Verdict::vacuous);
    CHECK_FALSE(b.hypothesis_holds);

    CHECK_THROWS_AS(check_lemma1(c5, 2, mpq_class(1)), std::invalid_argument);
}

TEST_CASE("check_lemma2") {
    const CheckReport a = check_lemma2(complete_graph(6), 3, mpq_class(1, 100),
                                       Lemma2Variant::proof_r4);
    CHECK(a.verdict == Verdict::holds);
    CHECK(a.branch == "js");
    CHECK(*a.residual == mpq_class(147, 25));  // 6 - 3/25
    CHECK(*a.witness_count == 6);

    const CheckReport b = check_lemma2(turan(9, 3), 3, mpq_class(1, 100), Lemma2Variant::proof_r4);
    CHECK(b.verdict == Verdict::holds);
    CHECK(b.branch == "edges");
    CHECK(*b.residual == mpq_class(6399, 400));  // 27 - 4401/400

    const CheckReport c = check_lemma2(Graph(5), 2, mpq_class(1, 2), Lemma2Variant::proof_r4);
    CHECK(c.verdict == Verdict::vacuous);

    CHECK_THROWS_AS(check_lemma2(Graph(5), 2, mpq_class(0), Lemma2Variant::proof_r4),
                    std::invalid_argument);

    // the r^4 tail lowers the bound by r^3(r-1)/16, raising the residual
    const CheckReport s3 = check_lemma2(turan(9, 3), 3, mpq_class(1, 100), Lemma2Variant::stated_r3);
    CHECK(s3.branch == "edges");
    CHECK(*b.residual - *s3.residual == mpq_class(27, 8));
}

TEST_CASE("check_theorem1") {
    const CheckReport extremal = check_theorem1(turan(257, 2), 2, 2);
    CHECK(extremal.verdict == Verdict::extremal_case);
    CHECK(extremal.exploratory == false);

    const CheckReport plus = check_theorem1(turan_plus_edge(257, 2), 2, 2);
    CHECK(plus.verdict == Verdict::holds);
    CHECK(*plus.witness_count == 128);
    CHECK(*plus.residual == mpq_class(mpz_class(2147483391), mpz_class(16777216)));

    const CheckReport small = check_theorem1(turan_plus_edge(9, 3), 3, 3);
    CHECK(small.verdict == Verdict::holds);
    CHECK(small.exploratory == true);
    CHECK(*small.witness_count == 9);

    const CheckReport vac = check_theorem1(Graph(10), 2, 2);
    CHECK(vac.verdict == Verdict::vacuous);

    CHECK_THROWS_AS(check_theorem1(Graph(5), 2, 3), std::invalid_argument);
}

TEST_CASE("check_ourb0") {
    const CheckReport plus = check_ourb0(turan_plus_edge(257, 2), 2);
    CHECK(plus.verdict == Verdict::holds);
    CHECK(*plus.residual == mpq_class(16127, 128));  // 128 - 257/128

    CHECK(check_ourb0(turan(257, 2), 2).verdict == Verdict::extremal_case);
    CHECK(check_ourb0(Graph(20), 2).verdict == Verdict::vacuous);
}

TEST_CASE("check_bol76") {
    const CheckReport a = check_bol76(complete_graph(6), 3, 2);
    CHECK(a.verdict == Verdict::holds);
    CHECK(*a.residual == 12);  // k_3 = 20 vs 8

    const CheckReport tight = check_bol76(turan(6, 3), 3, 2);
    CHECK(tight.verdict == Verdict::holds);
    CHECK(*tight.residual == 0);

    CHECK(check_bol76(Graph(6), 3, 2).verdict == Verdict::vacuous);
    CHECK_THROWS_AS(check_bol76(Graph(4), 5, 2), std::invalid_argument);
}

TEST_CASE("check_zykov") {
    const CheckReport a = check_zykov(complete_multipartite(PartSizes{{5, 4, 1}}));
    CHECK(a.verdict == Verdict::holds);
    CHECK(*a.residual == 16);  // 36 - 20

    const CheckReport tight = check_zykov(turan(10, 3));
    CHECK(tight.verdict == Verdict::holds);
    CHECK(*tight.residual == 0);

    const Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(check_zykov(c5).verdict == Verdict::vacuous);

    // known-parts override: spanning subgraph of a 3-partite graph
    Graph sub = turan(9, 3);
    sub.remove_edge(0, 3);
    const CheckReport known = check_zykov(sub, 3);
    CHECK(known.verdict == Verdict::holds);
    CHECK(*known.residual > 0);
}

TEST_CASE("exhaustive sweeps find no violations") {
    SweepOptions mm;
    mm.properties = {Property::moon_moser};
    const SweepSummary five = sweep_exhaustive(5, mm);
    CHECK(five.violations.empty());
    CHECK(five.instances > 0);

    SweepOptions all;
    all.properties = {Property::moon_moser, Property::lemma1, Property::lemma2, Property::theorem1,
                      Property::ourb0, Property::bol76, Property::zykov};
    const SweepSummary four = sweep_exhaustive(4, all);
    CHECK(four.violations.empty());

    CHECK_THROWS_AS(sweep_exhaustive(8, mm), std::invalid_argument);
}

TEST_CASE("sweep results are independent of thread count") {
    SweepOptions base;
    base.properties = {Property::moon_moser, Property::bol76};
    const SweepSummary one = sweep_exhaustive(5, base);
    SweepOptions threaded = base;
    threaded.threads = 4;
    const SweepSummary four = sweep_exhaustive(5, threaded);
    CHECK(one.instances == four.instances);
    CHECK(one.violations == four.violations);
    CHECK(one.properties == four.properties);
}

TEST_CASE("random sweeps are reproducible") {
    RandomSweepConfig config;
    config.n = 20;
    config.spec = RandomSpec{7, GnpModel{mpq_class(1, 2)}};
    config.trials = 25;
    SweepOptions options;
    options.properties = {Property::moon_moser, Property::ourb0};
    const SweepSummary a = sweep_random(config, options);
    const SweepSummary b = sweep_random(config, options);
    CHECK(a.instances == b.instances);
    CHECK(a.violations == b.violations);
    CHECK(a.violations.empty());

    SweepOptions threaded = options;
    threaded.threads = 4;
    const SweepSummary c = sweep_random(config, threaded);
    CHECK(c.instances == a.instances);
    CHECK(c.violations == a.violations);

    CHECK_THROWS_AS(sweep_random(RandomSweepConfig{20, config.spec, 0}, options),
                    std::invalid_argument);
}

TEST_CASE("theorem1 in range over random gnm graphs") {
    RandomSweepConfig config;
    config.n = 257;
    config.spec = RandomSpec{13, GnmModel{16512}};
    config.trials = 10;
    SweepOptions options;
    options.properties = {Property::theorem1};
    options.r = 2;
    options.s = 2;
    const SweepSummary summary = sweep_random(config, options);
    CHECK(summary.instances == 10);
    CHECK(summary.violations.empty());
}

TEST_CASE("run_checks_on_graph descriptors reconstruct the instance") {
    SweepOptions options;
    options.properties = {Property::moon_moser};
    const GraphCheckOutcome outcome =
        run_checks_on_graph(complete_graph(4), "n=4 mask=63", options);
    CHECK(outcome.instances > 0);
    CHECK(outcome.violations.empty());
}
