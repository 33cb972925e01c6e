#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "scfn/apps.hpp"

using namespace scfn;

namespace {

// Pixels whose center lies inside the disk inscribed in the frame.
std::vector<std::size_t> inscribed(const GrayImage& img, double margin) {
    std::vector<std::size_t> out;
    const double cx = (img.width - 1) / 2.0, cy = (img.height - 1) / 2.0;
    const double r = std::min(img.width, img.height) / 2.0 - margin;
    for (std::uint32_t y = 0; y < img.height; ++y)
        for (std::uint32_t x = 0; x < img.width; ++x)
            if (std::hypot(x - cx, y - cy) <= r) out.push_back(std::size_t(y) * img.width + x);
    return out;
}

}  // namespace

TEST_CASE("pgm round trip") {
    GrayImage img(5, 3);
    for (std::size_t k = 0; k < img.pixels.size(); ++k) img.pixels[k] = static_cast<std::uint8_t>(k * 17);
    const auto path = (std::filesystem::temp_directory_path() / "scfn_apps_test.pgm").string();
    write_pgm(img, path);
    CHECK(read_pgm(path) == img);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_pgm(path), IoError);
}

TEST_CASE("test images") {
    const auto cb = checkerboard(8, 4, 2);
    CHECK(cb.at(0, 0) != cb.at(2, 0));
    CHECK(cb.at(0, 0) == cb.at(1, 1));
    CHECK(cb.at(0, 0) == cb.at(2, 2));
    const auto m = marker_pattern(64);
    CHECK(m.width == 64);
    CHECK(m.height == 64);
    CHECK(m.at(0, 0) != m.at(32, 32));
}

TEST_CASE("image metrics") {
    GrayImage a(4, 4, 10), b(4, 4, 10);
    CHECK(mean_abs_diff(a, b) == 0.0);
    CHECK(std::isinf(psnr(a, b)));
    b.at(0, 0) = 26;
    CHECK(mean_abs_diff(a, b) == 1.0);
    CHECK(psnr(a, b) == doctest::Approx(10 * std::log10(255.0 * 255.0 / 16.0)));
}

TEST_CASE("rotation") {
    const auto exact = SinCosProvider::exact();
    const auto img = checkerboard(64, 64, 16);
    CHECK(rotate_image(img, 0.0, exact) == img);
    CHECK(rotation_outside_count(64, 64, 0.0, exact) == 0);

    const GrayImage white(48, 40, 255);
    for (double a : {0.3, 0.7, 1.0}) {
        const auto r = rotate_image(white, a, exact);
        std::size_t zeros = 0;
        for (auto p : r.pixels) zeros += p == 0;
        CHECK(zeros == rotation_outside_count(48, 40, a, exact));
    }

    const auto board = checkerboard(128, 128, 16);
    RotateOptions back;
    back.inverse = true;
    const auto again = rotate_image(rotate_image(board, 0.5, exact), 0.5, exact, back);
    double acc = 0;
    const auto disk = inscribed(board, 1);
    for (std::size_t k : disk) acc += std::abs(int(again.pixels[k]) - int(board.pixels[k]));
    CHECK(acc / disk.size() <= 2.0);

    CHECK_THROWS(rotate_image(GrayImage{}, 0.5, exact));
}

TEST_CASE("identical sin and cos give identical images") {
    const auto a = SinCosProvider::sc(Variant::transc_star, 1024);
    const auto b = SinCosProvider::sc(Variant::transc_star, 1024);
    const auto img = marker_pattern(80);
    for (double alpha : {0.1, 0.5, 0.9}) {
        REQUIRE(a(alpha).s == b(alpha).s);
        REQUIRE(a(alpha).c == b(alpha).c);
        CHECK(rotate_image(img, alpha, a) == rotate_image(img, alpha, b));
    }
}

TEST_CASE("sc provider reads the circuit at the rounded level") {
    const auto p = SinCosProvider::sc(Variant::transc_star, 256);
    CHECK(!p.is_exact());
    CHECK(p.N() == 256);
    CHECK(p(0.0).s == 0.0L);
    CHECK(p(0.0).c == 1.0L);
    CHECK(std::abs(double(p(0.5).s) - std::sin(0.5)) <= 0.03);
    CHECK(p(0.5).s == p(128.4 / 256).s);
    CHECK_THROWS_AS(p(1.01), DomainError);
    CHECK_THROWS_AS(p(-0.01), DomainError);
}

TEST_CASE("angle error") {
    const auto exact = SinCosProvider::exact();
    for (const auto& row : angle_error_sweep(exact)) CHECK(row.e_deg == 0.0);
    CHECK(mean_angle_error(exact) == 0.0);
    const auto rows = angle_error_sweep(SinCosProvider::sc(Variant::transc_star, 1024), 100);
    REQUIRE(rows.size() == 100);
    CHECK(rows.front().alpha == doctest::Approx(0.01));
    CHECK(rows.back().alpha == 1.0);
    for (const auto& r : rows) CHECK(r.e_deg >= 0.0);
    CHECK(rotation_csv(rows).rfind("alpha,e_deg\n", 0) == 0);
}

TEST_CASE("forward kinematics") {
    const auto exact = SinCosProvider::exact();
    const Point z = forward_kinematics(1.0, 0.5, 0.0, 0.0, exact);
    CHECK(z.x == 1.5);
    CHECK(z.y == 0.0);
    for (double a1 : {0.0, 0.2, 0.45})
        for (double a2 : {0.0, 0.3, 0.55}) {
            const Point p = forward_kinematics(2.0, 1.0, a1, a2, exact);
            CHECK(p.x == doctest::Approx(2 * std::cos(a1) + std::cos(a1 + a2)).epsilon(1e-14));
            CHECK(p.y == doctest::Approx(2 * std::sin(a1) + std::sin(a1 + a2)).epsilon(1e-14));
            const Point q = forward_kinematics(2.0, 1.0, a1, a2, SinCosProvider::sc(Variant::transc_star, 1024));
            CHECK(std::hypot(q.x - p.x, q.y - p.y) <= 3 * 0.03);
        }
    CHECK_THROWS_AS(forward_kinematics(1, 1, 0.7, 0.5, exact), DomainError);
    CHECK_THROWS_AS(forward_kinematics(1, 1, -0.1, 0.5, exact), DomainError);
}

TEST_CASE("position error sweep") {
    const auto same = perr_sweep(1, 1, 10, SinCosProvider::exact());
    CHECK(same.mean == 0.0);
    CHECK(same.rows.size() == 66);
    const auto sc = SinCosProvider::sc(Variant::transc_star, 512);
    const auto r1 = perr_sweep(1, 1, 10, sc);
    const auto r2 = perr_sweep(2, 2, 10, sc);
    CHECK(r2.mean == 2 * r1.mean);
    CHECK(r1.mean > 0.0);
    CHECK(perr_sweep(1, 1, 10, Variant::transc_star, 512).mean == r1.mean);
    CHECK(arm_csv(r1).rfind("alpha1,alpha2,x_ref,y_ref,x_sc,y_sc,perr\n", 0) == 0);
}
