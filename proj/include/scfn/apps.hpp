#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scfn/circuits.hpp"

namespace scfn {

struct GrayImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> pixels;  // row-major

    GrayImage() = default;
    GrayImage(std::uint32_t w, std::uint32_t h, std::uint8_t fill = 0);
    std::uint8_t at(std::uint32_t x, std::uint32_t y) const { return pixels[std::size_t(y) * width + x]; }
    std::uint8_t& at(std::uint32_t x, std::uint32_t y) { return pixels[std::size_t(y) * width + x]; }
    bool empty() const { return pixels.empty(); }
    bool operator==(const GrayImage&) const = default;
};

GrayImage read_pgm(const std::string& path);
void write_pgm(const GrayImage& img, const std::string& path);

GrayImage checkerboard(std::uint32_t width, std::uint32_t height, std::uint32_t cell);
// Three nested-square finder marks in the top-left, top-right and bottom-left corners.
GrayImage marker_pattern(std::uint32_t size);

double mean_abs_diff(const GrayImage& a, const GrayImage& b);
double psnr(const GrayImage& a, const GrayImage& b);

// Extended precision keeps the exact provider's atan2 round trip exact.
struct SinCos {
    long double s = 0;
    long double c = 1;
};

class SinCosProvider {
public:
    static SinCosProvider exact();
    static SinCosProvider sc(Variant v, std::uint32_t N, unsigned trial = 0);

    // alpha in [0, 1] rad; sc mode reads the table at X = round(alpha * N).
    SinCos operator()(double alpha) const;
    bool is_exact() const { return N_ == 0; }
    Variant variant() const { return variant_; }
    std::uint32_t N() const { return N_; }
    std::string describe() const;

private:
    Variant variant_ = Variant::transc_star;
    std::uint32_t N_ = 0;
    std::vector<double> sin_;
    std::vector<double> cos_;
};

struct RotateOptions {
    bool bilinear = false;
    bool inverse = false;  // rotate by -alpha using the transposed matrix
};

GrayImage rotate_image(const GrayImage& img, double alpha, const SinCosProvider& provider, const RotateOptions& opt = {});
// Output pixels whose source position falls outside the frame.
std::size_t rotation_outside_count(std::uint32_t width, std::uint32_t height, double alpha,
                                   const SinCosProvider& provider, const RotateOptions& opt = {});

double angle_error(double alpha, const SinCosProvider& provider);

struct AngleErrorRow {
    double alpha = 0;
    double e_deg = 0;
};

// alpha = k / steps for k = 1..steps.
std::vector<AngleErrorRow> angle_error_sweep(const SinCosProvider& provider, unsigned steps = 100);
double mean_angle_error(const SinCosProvider& provider, unsigned steps = 100);

struct Point {
    double x = 0;
    double y = 0;
};

Point forward_kinematics(double L1, double L2, double alpha1, double alpha2, const SinCosProvider& provider);

struct ArmRow {
    double alpha1 = 0;
    double alpha2 = 0;
    Point ref;
    Point sc;
    double perr = 0;
};

struct PerrReport {
    std::vector<ArmRow> rows;
    double mean = 0;
};

// Grid alpha1 = i / steps, alpha2 = j / steps with i + j <= steps.
PerrReport perr_sweep(double L1, double L2, unsigned grid_steps, const SinCosProvider& sc,
                      const SinCosProvider& ref = SinCosProvider::exact());
PerrReport perr_sweep(double L1, double L2, unsigned grid_steps, Variant v, std::uint32_t N);

std::string arm_csv(const PerrReport& report, bool header = true);
std::string rotation_csv(const std::vector<AngleErrorRow>& rows, bool header = true);

}  // namespace scfn
