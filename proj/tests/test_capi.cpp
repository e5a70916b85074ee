#include <doctest.h>

#include <joints/joints.h>

#include <cstring>
#include <string>

namespace {

struct GraphHandle {
    joints_graph* g = nullptr;
    ~GraphHandle() { joints_graph_free(g); }
};

struct Text {
    char* s = nullptr;
    ~Text() { joints_string_free(s); }
    std::string str() const { return s ? std::string(s) : std::string(); }
};

bool mentions(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("parse and write graph6 through the C API") {
    GraphHandle g;
    REQUIRE(joints_graph_parse_graph6("Bw", &g.g) == JOINTS_OK);
    CHECK(joints_graph_order(g.g) == 3);
    CHECK(joints_graph_edge_count(g.g) == 3);

    Text out;
    REQUIRE(joints_graph_write_graph6(g.g, &out.s) == JOINTS_OK);
    CHECK(out.str() == "Bw");
}

TEST_CASE("parse errors set status and last_error") {
    joints_graph* g = nullptr;
    CHECK(joints_graph_parse_graph6("B", &g) == JOINTS_ERR_PARSE);
    CHECK(g == nullptr);
    CHECK(mentions(joints_last_error(), "offset 1"));

    CHECK(joints_graph_parse_graph6(nullptr, &g) == JOINTS_ERR_INVALID_ARGUMENT);
    CHECK(joints_graph_parse("2\n0 5\n", &g) == JOINTS_ERR_PARSE);
    CHECK(mentions(joints_last_error(), "line 2"));
}

TEST_CASE("auto parse accepts edge lists") {
    GraphHandle g;
    REQUIRE(joints_graph_parse("3\n0 1\n1 2\n0 2\n", &g.g) == JOINTS_OK);
    Text out;
    REQUIRE(joints_graph_write_graph6(g.g, &out.s) == JOINTS_OK);
    CHECK(out.str() == "Bw");
}

TEST_CASE("generators") {
    GraphHandle t;
    REQUIRE(joints_gen_turan(9, 3, &t.g) == JOINTS_OK);
    CHECK(joints_graph_edge_count(t.g) == 27);

    GraphHandle plus;
    REQUIRE(joints_gen_turan_plus_edge(9, 3, &plus.g) == JOINTS_OK);
    CHECK(joints_graph_edge_count(plus.g) == 28);

    const unsigned sizes[] = {5, 4, 1};
    GraphHandle m;
    REQUIRE(joints_gen_multipartite(sizes, 3, &m.g) == JOINTS_OK);
    CHECK(joints_graph_edge_count(m.g) == 29);

    GraphHandle gnm;
    REQUIRE(joints_gen_gnm(257, 16512, 11, &gnm.g) == JOINTS_OK);
    CHECK(joints_graph_edge_count(gnm.g) == 16512);

    GraphHandle gnp;
    REQUIRE(joints_gen_gnp(10, "1/2", 42, &gnp.g) == JOINTS_OK);
    CHECK(joints_graph_order(gnp.g) == 10);

    joints_graph* bad = nullptr;
    CHECK(joints_gen_gnp(10, "3/2", 1, &bad) == JOINTS_ERR_INVALID_ARGUMENT);
    CHECK(joints_gen_turan_plus_edge(3, 3, &bad) == JOINTS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("counting") {
    GraphHandle t;
    REQUIRE(joints_gen_turan(9, 3, &t.g) == JOINTS_OK);

    Text count;
    REQUIRE(joints_count_cliques(t.g, 3, 1, &count.s) == JOINTS_OK);
    CHECK(count.str() == "27");

    Text threaded;
    REQUIRE(joints_count_cliques(t.g, 3, 4, &threaded.s) == JOINTS_OK);
    CHECK(threaded.str() == "27");

    Text vec;
    REQUIRE(joints_clique_vector(t.g, &vec.s) == JOINTS_OK);
    CHECK(vec.str() == "1,9,27,27");
}

TEST_CASE("joint size report") {
    GraphHandle plus;
    REQUIRE(joints_gen_turan_plus_edge(9, 3, &plus.g) == JOINTS_OK);

    Text report;
    REQUIRE(joints_joint_size(plus.g, 4, 1, &report.s) == JOINTS_OK);
    CHECK(mentions(report.str(), "9"));
    CHECK(mentions(report.str(), "0 1"));

    Text bad;
    CHECK(joints_joint_size(plus.g, 2, 1, &bad.s) == JOINTS_ERR_INVALID_ARGUMENT);
    CHECK(mentions(joints_last_error(), "js_2"));
}

TEST_CASE("checks") {
    GraphHandle k6;
    REQUIRE(joints_graph_parse_graph6("E~~w", &k6.g) == JOINTS_OK);  // K_6
    CHECK(joints_graph_edge_count(k6.g) == 15);

    Text report;
    REQUIRE(joints_check(k6.g, "lemma2", 3, 0, "1/100", "proof_r4", &report.s) == JOINTS_OK);
    CHECK(mentions(report.str(), "verdict: holds"));
    CHECK(mentions(report.str(), "branch: js"));

    Text mm;
    REQUIRE(joints_check(k6.g, "moon-moser", 0, 0, nullptr, nullptr, &mm.s) == JOINTS_OK);
    CHECK(mentions(mm.str(), "verdict: holds"));

    Text bad;
    CHECK(joints_check(k6.g, "lemma9", 0, 0, nullptr, nullptr, &bad.s) ==
          JOINTS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sweeps") {
    Text summary;
    REQUIRE(joints_sweep_exhaustive(4, "moon-moser,bol76", 0, 0, nullptr, nullptr, 2, &summary.s) ==
            JOINTS_OK);
    CHECK(mentions(summary.str(), "type: sweep"));
    CHECK(mentions(summary.str(), "violations: 0"));

    // identical calls give byte-identical text (wall time excluded from output)
    Text again;
    REQUIRE(joints_sweep_exhaustive(4, "moon-moser,bol76", 0, 0, nullptr, nullptr, 1, &again.s) ==
            JOINTS_OK);
    CHECK(summary.str() == again.str());

    Text random_summary;
    REQUIRE(joints_sweep_random(20, "gnp", "1/2", 0, 5, 7, "moon-moser", 0, 0, nullptr, nullptr, 1,
                                &random_summary.s) == JOINTS_OK);
    CHECK(mentions(random_summary.str(), "violations: 0"));

    Text bad;
    CHECK(joints_sweep_exhaustive(9, "moon-moser", 0, 0, nullptr, nullptr, 1, &bad.s) ==
          JOINTS_ERR_INVALID_ARGUMENT);
    CHECK(joints_sweep_random(10, "gnx", nullptr, 0, 5, 7, "moon-moser", 0, 0, nullptr, nullptr, 1,
                              &bad.s) == JOINTS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("probe") {
    Text result;
    REQUIRE(joints_probe(12, 3, 3, 500, 5, 1, 1, &result.s) == JOINTS_OK);
    CHECK(mentions(result.str(), "type: probe"));
    CHECK(mentions(result.str(), "best-js:"));

    Text identical;
    REQUIRE(joints_probe(12, 3, 3, 500, 5, 1, 1, &identical.s) == JOINTS_OK);
    CHECK(result.str() == identical.str());

    Text bad;
    CHECK(joints_probe(3, 3, 3, 10, 1, 1, 1, &bad.s) == JOINTS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null arguments are rejected, not crashed on") {
    CHECK(joints_graph_parse_graph6("Bw", nullptr) == JOINTS_ERR_INVALID_ARGUMENT);
    CHECK(joints_graph_write_graph6(nullptr, nullptr) == JOINTS_ERR_INVALID_ARGUMENT);
    CHECK(joints_count_cliques(nullptr, 3, 1, nullptr) == JOINTS_ERR_INVALID_ARGUMENT);
    joints_string_free(nullptr);
    joints_graph_free(nullptr);
}
