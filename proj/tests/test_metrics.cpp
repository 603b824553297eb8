#include <doctest.h>

#include "sps/metrics.hpp"

using namespace sps;

TEST_CASE("support_of") {
    SUBCASE("zero image has empty support") {
        CHECK(support_of(Image::zero(4), 0.05).empty());
    }
    SUBCASE("single spike is a singleton") {
        Image img = Image::zero(4);
        img.data[7] = -3.0;
        CHECK(support_of(img, 0.5) == std::vector<int>{7});
    }
    SUBCASE("threshold arithmetic") {
        Image img = Image::zero(4);
        img.data[1] = 10.0;
        img.data[2] = 1.0;
        CHECK(support_of(img, 0.5) == std::vector<int>{1});
        CHECK(support_of(img, 0.05) == std::vector<int>{1, 2});
    }
}

TEST_CASE("jaccard") {
    CHECK(jaccard({1, 2, 3}, {1, 2, 3}) == 1.0);
    CHECK(jaccard({1, 2}, {3, 4}) == 0.0);
    CHECK(jaccard({1, 2, 3}, {2, 3, 4}) == 0.5);
    CHECK(jaccard({}, {}) == 1.0);
    SUBCASE("symmetric; 1 iff equal") {
        CHECK(jaccard({1, 5}, {1, 5, 9}) == jaccard({1, 5, 9}, {1, 5}));
        CHECK(jaccard({1, 5}, {1, 5, 9}) < 1.0);
    }
}

TEST_CASE("relative_l2") {
    Image ref(2, Eigen::Vector4d(1, 2, 3, 4));
    CHECK(relative_l2(ref, ref) == 0.0);
    CHECK(relative_l2(Image::zero(2), ref) == 1.0);
    Image doubled(2, 2.0 * ref.data);
    CHECK(relative_l2(doubled, ref) == doctest::Approx(1.0));
    CHECK_THROWS_AS(relative_l2(ref, Image::zero(2)), std::invalid_argument);

    SUBCASE("triangle-derived bound") {
        Image a(2, Eigen::Vector4d(1, 0, 2, -1));
        Image b(2, Eigen::Vector4d(0, 1, 2, 0));
        const double bound =
            ((a.data - b.data).norm() + (b.data - ref.data).norm()) / ref.data.norm();
        CHECK(relative_l2(a, ref) <= bound + 1e-12);
    }
}

TEST_CASE("evaluate") {
    GroundTruth truth;
    truth.x1_true = Image::zero(4);
    truth.x1_true.data[3] = 8.0;
    truth.x1_true.data[9] = -6.0;
    truth.support_true = {3, 9};
    truth.x2_true = Image(4, Eigen::VectorXd::Constant(16, 0.5));

    SUBCASE("exact result scores perfectly") {
        SolveResult res;
        res.x1 = truth.x1_true;
        res.x2 = truth.x2_true;
        res.trace = {{0, 1.0, 0.0}, {17, 0.5, 0.25}};
        EvalReport rep = evaluate(res, truth, 0.05);
        CHECK(rep.jaccard == 1.0);
        CHECK(rep.rel_l2_smooth == 0.0);
        CHECK(rep.rel_l2_total == 0.0);
        CHECK(rep.iterations == 17);
        CHECK(rep.wall_seconds == 0.25);
    }
    SUBCASE("all-zero result scores zero/one") {
        SolveResult res;
        res.x1 = Image::zero(4);
        res.x2 = Image::zero(4);
        EvalReport rep = evaluate(res, truth, 0.05);
        CHECK(rep.jaccard == 0.0);
        CHECK(rep.rel_l2_smooth == 1.0);
        CHECK(rep.rel_l2_total == 1.0);
    }
    SUBCASE("size mismatch throws") {
        SolveResult res;
        res.x1 = Image::zero(8);
        res.x2 = Image::zero(8);
        CHECK_THROWS_AS(evaluate(res, truth, 0.05), std::invalid_argument);
    }
}
