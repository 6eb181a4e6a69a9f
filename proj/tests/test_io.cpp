#include <doctest.h>

#include "visconn/io.hpp"

using namespace visconn;

namespace {

Point pt(int x, int y) { return {Scalar(x), Scalar(y)}; }

}  // namespace

TEST_CASE("scalar formatting") {
    CHECK(format_scalar(Scalar(5)) == "5");
    CHECK(format_scalar(Scalar(-3)) == "-3");
    CHECK(format_scalar(Scalar(1) / 2) == "1/2");
    CHECK(parse_scalar("3/6") == Scalar(1) / 2);
    CHECK(format_scalar(parse_scalar("3/6")) == "1/2");
    CHECK(parse_scalar("-7/2") == Scalar(-7) / 2);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
}

TEST_CASE("point file round trip") {
    LabelledPoints lp;
    lp.points = PointSet{pt(0, 0), pt(1, 2), {Scalar(1) / 2, Scalar(-3)}};
    std::string text = serialize_point_file(lp);
    LabelledPoints back = parse_point_file(text);
    CHECK(serialize_point_file(back) == text);
    REQUIRE(back.points.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(back.points[k] == lp.points[k]);
    CHECK_FALSE(back.has_labels());
}

TEST_CASE("point file labels and comments") {
    std::string text =
        "# sample instance\n"
        "0 0 A\n"
        "\n"
        "2 0 B\n"
        "1/2 3/4 C\n";
    LabelledPoints lp = parse_point_file(text);
    REQUIRE(lp.points.size() == 3);
    CHECK(lp.has_labels());
    CHECK(lp.labels == std::vector<int>{0, 1, 2});
    CHECK(lp.of_label(0).size() == 1);
    CHECK(lp.of_label(2)[0] == Point{Scalar(1) / 2, Scalar(3) / 4});
    std::string round = serialize_point_file(lp);
    LabelledPoints back = parse_point_file(round);
    CHECK(back.labels == lp.labels);

    CHECK_THROWS_AS(parse_point_file("0 0 A\n1 1\n"), ParseError);  // mixed labelling
    CHECK_THROWS_AS(parse_point_file("0 0 X\n"), ParseError);       // bad label
    CHECK_THROWS_AS(parse_point_file("0\n"), ParseError);           // short line
    CHECK_THROWS_AS(parse_point_file("0 0\n0 0\n"), Error);         // duplicate point
}

TEST_CASE("unlabelled points expose label 0") {
    LabelledPoints lp = parse_point_file("0 0\n1 1\n");
    CHECK_FALSE(lp.has_labels());
    CHECK(lp.of_label(0).size() == 2);
}

TEST_CASE("edge list round trip") {
    Graph g(4);
    g.add_edge(2, 0);
    g.add_edge(1, 3);
    std::string text = serialize_edge_list(g);
    CHECK(text == "4 2\n0 2\n1 3\n");  // canonical: i < j, ascending
    Graph back = parse_edge_list(text);
    CHECK(back.n() == 4);
    CHECK(back.edges() == g.edges());
    CHECK_THROWS_AS(parse_edge_list("3 1\n"), ParseError);       // missing edge line
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 7\n"), Error);       // index out of range
    CHECK_THROWS_AS(parse_edge_list("nope\n"), ParseError);
}

TEST_CASE("report serialization is sorted key=value lines") {
    Report r = check_instance(PointSet{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1)});
    r.descriptor = "wheel";
    std::string text = serialize_report(r);
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    CHECK(std::is_sorted(lines.begin(), lines.end()));
    auto has = [&](const std::string& line) {
        return std::find(lines.begin(), lines.end(), line) != lines.end();
    };
    CHECK(has("instance=wheel"));
    CHECK(has("n=5"));
    CHECK(has("ell=3"));
    CHECK(has("delta=3"));
    CHECK(has("kappa=3"));
    CHECK(has("lambda=3"));
    CHECK(has("diameter=2"));
    CHECK(has("claim.b=pass"));
    CHECK(has("claim.g=pass"));
    CHECK(has("claim.g.details=holds=1"));
}

TEST_CASE("svg output contains every element") {
    GeomGraph g{PointSet{pt(0, 0), pt(4, 0), pt(2, 3)},
                {make_edge(0, 1), make_edge(1, 2)},
                {0, 1, 0}};
    std::string svg = svg_graph(g);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("width=\"800\"") != std::string::npos);
    int circles = 0, segments = 0;
    for (std::size_t p = svg.find("<circle"); p != std::string::npos;
         p = svg.find("<circle", p + 1)) {
        ++circles;
    }
    for (std::size_t p = svg.find("<line"); p != std::string::npos; p = svg.find("<line", p + 1)) {
        ++segments;
    }
    CHECK(circles == 3);
    CHECK(segments == 2);

    std::string sp = svg_points(PointSet{pt(0, 0), pt(1, 1)});
    CHECK(sp.find("<circle") != std::string::npos);
    CHECK(sp.find("</svg>") != std::string::npos);
}
