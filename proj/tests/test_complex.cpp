#include <doctest.h>

#include <sstream>
#include <vector>

#include "cechcube/complex.hpp"
#include "cechcube/errors.hpp"
#include "cechcube/graph.hpp"

using namespace cechcube;

namespace {

SimplicialComplex tetra_boundary() {
    return SimplicialComplex::from_maximal(
        4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

bool is_subcomplex(const SimplicialComplex& small, const SimplicialComplex& big) {
    for (const auto& f : small.maximal_faces()) {
        if (!big.contains(f)) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("complexes");

TEST_CASE("antichain reduction") {
    AntichainStats stats;
    auto k = SimplicialComplex::from_maximal(3, {{0, 1}, {1}, {1, 0}, {2}}, &stats);
    CHECK(k.maximal_faces() == std::vector<Simplex>{{0, 1}, {2}});
    CHECK(stats.input == 4);
    CHECK(stats.duplicates == 1);
    CHECK(stats.nested == 1);
    CHECK(stats.pruned() == 2);

    CHECK_THROWS_AS(SimplicialComplex::from_maximal(3, {{}}), DomainError);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal(2, {{0, 2}}), DomainError);
}

TEST_CASE("void complex") {
    SimplicialComplex v(5);
    CHECK(v.is_void());
    CHECK(v.dimension() == -1);
    CHECK(v.vertex_count() == 5);
    CHECK(v.vertices().empty());
    CHECK(v.f_vector().empty());
    CHECK(v.total_face_count() == 0);
    CHECK(v.euler_characteristic() == 0);
}

TEST_CASE("faces, f-vector, membership") {
    auto k = SimplicialComplex::from_maximal(3, {{0, 1, 2}});
    CHECK(k.dimension() == 2);
    CHECK(k.f_vector() == std::vector<std::size_t>{3, 3, 1});
    CHECK(k.total_face_count() == 7);
    CHECK(k.faces(1) == std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(k.contains({1, 0}));  // membership accepts unsorted input
    CHECK(k.contains({2}));
    CHECK_FALSE(k.contains({0, 1, 2, 2, 3}));
    CHECK(k.contains_vertex(1));

    auto s = tetra_boundary();
    CHECK(s.f_vector() == std::vector<std::size_t>{4, 6, 4});
    CHECK(s.euler_characteristic() == 2);
    CHECK_FALSE(s.contains({0, 1, 2, 3}));
    CHECK_THROWS_AS(s.total_face_count(10), SizeError);
}

TEST_CASE("star, link, deletion, skeleton") {
    auto s = tetra_boundary();
    CHECK(star(s, 0).maximal_faces() ==
          std::vector<Simplex>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    CHECK(link(s, 0).maximal_faces() == std::vector<Simplex>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(deletion(s, 0).maximal_faces() == std::vector<Simplex>{{1, 2, 3}});
    CHECK(skeleton(s, 1).f_vector() == std::vector<std::size_t>{4, 6});
    CHECK(skeleton(s, 0).maximal_faces() == std::vector<Simplex>{{0}, {1}, {2}, {3}});
    CHECK(skeleton(s, 5) == s);
    CHECK_THROWS_AS(star(s, 9), DomainError);
    CHECK_THROWS_AS(link(s, 9), DomainError);
}

TEST_CASE("join and union") {
    auto edge = SimplicialComplex::from_maximal(2, {{0, 1}});
    auto point = SimplicialComplex::from_maximal(1, {{0}});
    auto cone = join(edge, point);
    CHECK(cone.vertex_count() == 3);
    CHECK(cone.maximal_faces() == std::vector<Simplex>{{0, 1, 2}});

    auto a = SimplicialComplex::from_maximal(4, {{0, 1}, {1, 3}});
    auto b = SimplicialComplex::from_maximal(4, {{0, 2}, {2, 3}});
    auto cycle4 = union_of(4, {a, b});
    CHECK(cycle4.maximal_faces() ==
          std::vector<Simplex>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(cycle4.euler_characteristic() == 0);
}

TEST_CASE("nerve of a cover") {
    Cover c;
    c.vertex_count = 4;
    c.parts = {SimplicialComplex::from_maximal(4, {{0, 1}}),
               SimplicialComplex::from_maximal(4, {{1, 2}}),
               SimplicialComplex::from_maximal(4, {{2, 3}}),
               SimplicialComplex::from_maximal(4, {{0, 3}})};
    auto nerve = nerve_of_cover(c);
    CHECK(nerve.maximal_faces() ==
          std::vector<Simplex>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    Cover bad = c;
    bad.parts.push_back(SimplicialComplex(4));
    CHECK_THROWS_AS(nerve_of_cover(bad), DomainError);
    CHECK_THROWS_AS(nerve_of_cover(Cover{}), DomainError);
}

TEST_CASE("ball nerve complexes of graphs") {
    Graph q2 = Graph::hypercube(2);
    Graph q3 = Graph::hypercube(3);

    auto singletons = cech_complex(q2, 0);
    CHECK(singletons.maximal_faces() == std::vector<Simplex>{{0}, {1}, {2}, {3}});

    // scale 1: the graph itself as a 1-complex
    auto graph_complex = cech_complex(q3, 1);
    CHECK(graph_complex.dimension() == 1);
    CHECK(graph_complex.f_vector() == std::vector<std::size_t>{8, 12});
    CHECK(graph_complex.euler_characteristic() == -4);

    // scale 2 on the square: one ball per vertex, each omitting the antipode
    CechStats stats;
    auto k22 = cech_complex(q2, 2, &stats);
    CHECK(stats.generators == 4);
    CHECK(k22.f_vector() == std::vector<std::size_t>{4, 6, 4});

    CHECK(cech_complex(q3, 2).euler_characteristic() == 8);

    // odd scales come from edge ball pairs
    CechStats s3;
    auto k33 = cech_complex(q3, 3, &s3);
    CHECK(s3.generators == q3.edge_count());
    CHECK(k33.maximal_faces().size() == 12);
    for (const auto& f : k33.maximal_faces()) CHECK(f.size() == 6);

    // the tower is nested scale by scale
    for (std::uint32_t r = 0; r < 5; ++r) {
        CHECK(is_subcomplex(cech_complex(q3, r), cech_complex(q3, r + 1)));
    }

    // constant from the full-simplex scale on
    auto top = cech_complex(q3, 5);
    CHECK(top.maximal_faces() == std::vector<Simplex>{{0, 1, 2, 3, 4, 5, 6, 7}});
    CHECK(cech_complex(q3, 4).maximal_faces().size() > 1);
}

TEST_CASE("text roundtrip is byte stable") {
    auto k = cech_complex(Graph::hypercube(2), 2);
    std::ostringstream first;
    k.write(first);
    std::istringstream in(first.str());
    auto back = SimplicialComplex::read(in);
    CHECK(back == k);
    std::ostringstream second;
    back.write(second);
    CHECK(second.str() == first.str());

    std::istringstream bad("# vertices 2\n0 zz\n");
    CHECK_THROWS_AS(SimplicialComplex::read(bad), DomainError);
}

TEST_CASE("half cube boundary union") {
    auto [bd2, cover2] = boundary_subcomplex(2);
    CHECK(bd2.maximal_faces() ==
          std::vector<Simplex>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    REQUIRE(cover2.parts.size() == 4);
    // parts ordered (coordinate 1, value 0), (1, 1), (2, 0), (2, 1)
    CHECK(cover2.parts[0].maximal_faces() == std::vector<Simplex>{{0, 2}});
    CHECK(cover2.parts[1].maximal_faces() == std::vector<Simplex>{{1, 3}});
    CHECK(cover2.parts[2].maximal_faces() == std::vector<Simplex>{{0, 1}});
    CHECK(cover2.parts[3].maximal_faces() == std::vector<Simplex>{{2, 3}});

    auto [bd3, cover3] = boundary_subcomplex(3);
    CHECK(cover3.parts.size() == 6);
    for (const auto& part : cover3.parts) {
        CHECK(is_subcomplex(part, bd3));
    }
    CHECK_THROWS_AS(boundary_subcomplex(1), SizeError);
    CHECK_THROWS_AS(boundary_subcomplex(6), SizeError);
}

TEST_SUITE_END();
