#include <doctest.h>

#include "metaplectic/center.hpp"

using namespace metaplectic;

TEST_CASE("levi types") {
    CHECK(levi_type(LeviShape{{3}, 0}) == LeviType::Odd);
    CHECK(levi_type(LeviShape{{2}, 0}) == LeviType::Even);
    CHECK(levi_type(LeviShape{{1, 2}, 0}) == LeviType::Odd);
    CHECK(levi_type(LeviShape{{2, 2}, 0}) == LeviType::Even);
    CHECK(levi_type(LeviShape{{2}, 1}) == LeviType::Odd);
    CHECK(levi_type(LeviShape{{}, 4}) == LeviType::Even);
}

TEST_CASE("shape parsing") {
    LeviShape t = parse_shape("1,2;1");
    CHECK(t.parts == std::vector<long>{1, 2});
    CHECK(t.tail == 1);
    CHECK(t.n() == 4);
    CHECK(shape_str(t) == "1,2;1");
    CHECK(parse_shape("2;0").parts == std::vector<long>{2});
    CHECK(parse_shape(";3").tail == 3);
    CHECK_THROWS(parse_shape(";0"));
}

TEST_CASE("central element realization") {
    PadicContext c5(5);
    CentralElement c{LeviShape{{1}, 1}, {Rat(2)}, Rat(3), 1};
    GSpElement g = c.to_gsp();
    CHECK(g.lambda() == 9);
    CHECK(make_gsp(g.mat(), c5).lambda() == 9);
    // x(g_1) = a_1 b for the shape (1;1)
    CHECK(x_on_center(c, c5) == square_class(Rat(6), c5));
    // even type: x is trivial
    CentralElement e{LeviShape{{2}, 0}, {Rat(7)}, Rat(2), 1};
    CHECK(x_on_center(e, c5).is_trivial());
}

TEST_CASE("x_on_center agrees with the matrix route") {
    PadicContext c3(3);
    std::mt19937_64 rng(21);
    std::vector<LeviShape> shapes{{{1}, 1}, {{2}, 0}, {{1, 1}, 0}, {{3}, 0}, {{1, 2}, 1}, {{}, 3}};
    for (const auto& t : shapes)
        for (int trial = 0; trial < 6; ++trial) {
            CentralElement c{t, {}, Rat(0), 1};
            for (std::size_t k = 0; k < t.parts.size(); ++k)
                c.a.push_back(Rat(1 + static_cast<long>(rng() % 30),
                                  1 + static_cast<long>(rng() % 9)) *
                              ((rng() % 2) ? 1 : -1));
            c.b = Rat(1 + static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 9));
            CHECK(x_on_center(c, c3) == x_of(g_one(c.to_gsp()), c3));
        }
}

TEST_CASE("center image") {
    PadicContext c3(3), c5(5);
    auto img = center_image(LeviShape{{1}, 0}, c3);
    REQUIRE(img.size() == 4);
    CHECK(img[0].rep() == Rat(1));
    CHECK(img[1].rep() == Rat(2));
    CHECK(img[2].rep() == Rat(3));
    CHECK(img[3].rep() == Rat(6));
    CHECK(center_image(LeviShape{{2}, 0}, c3).size() == 1);
    CHECK(center_image(LeviShape{{2}, 1}, c5).size() == 4); // odd tail sweeps b
}

TEST_CASE("z_t representatives") {
    PadicContext c3(3);
    CHECK(z_t_reps(LeviShape{{2}, 0}, c3).size() == 1);
    auto reps = z_t_reps(LeviShape{{1}, 0}, c3);
    CHECK(reps.size() == 4);
    CHECK(z_t_reps(LeviShape{{1}, 0}, PadicContext(2)).size() == 8);
    // odd n full group: representatives are (b I_2n, 1)
    auto scalar = z_t_reps(LeviShape{{}, 3}, c3);
    for (const auto& z : scalar) {
        CHECK(z.a.empty());
        for (long i = 0; i < 6; ++i) CHECK(z.to_gsp().mat()(i, i) == z.b);
    }
}

TEST_CASE("center multiplication") {
    PadicContext c3(3);
    LeviShape t{{1}, 0};
    CentralElement id = central_identity(t);
    CentralElement c{t, {Rat(2)}, Rat(1), 1};
    CHECK(center_mul(c, id, c3).eps == 1);
    // both x-values trivial: trivial section
    CentralElement sq{t, {Rat(4)}, Rat(1), 1};
    CHECK(center_mul(sq, sq, c3).eps == 1);
    // x = u against x = p at p = 3: sign (2,3) = -1
    CentralElement cu{t, {Rat(2)}, Rat(1), 1};
    CentralElement cp{t, {Rat(3)}, Rat(1), 1};
    CHECK(center_mul(cu, cp, c3).eps == -1);
    CHECK_THROWS_AS(center_mul(c, CentralElement{LeviShape{{2}, 0}, {Rat(1)}, Rat(1), 1}, c3),
                    ShapeMismatch);
}
