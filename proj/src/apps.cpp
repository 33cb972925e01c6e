#include "scfn/apps.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "scfn/eval.hpp"

namespace scfn {

GrayImage::GrayImage(std::uint32_t w, std::uint32_t h, std::uint8_t fill)
    : width(w), height(h), pixels(std::size_t(w) * h, fill) {}

namespace {

// Skips whitespace and '#' comments between PGM header tokens.
std::uint32_t pgm_token(std::istream& in, const std::string& path) {
    while (true) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    std::uint32_t v = 0;
    if (!(in >> v)) throw IoError("malformed PGM header in '" + path + "'");
    return v;
}

}  // namespace

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open image '" + path + "'");
    std::string magic(2, '\0');
    in.read(magic.data(), 2);
    if (magic != "P5") throw IoError("'" + path + "' is not a binary PGM (P5)");
    const std::uint32_t w = pgm_token(in, path);
    const std::uint32_t h = pgm_token(in, path);
    const std::uint32_t maxval = pgm_token(in, path);
    if (maxval != 255) throw IoError("'" + path + "': only maxval 255 is supported");
    if (w == 0 || h == 0) throw IoError("'" + path + "': empty image");
    in.get();
    GrayImage img(w, h);
    in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size())) throw IoError("'" + path + "': truncated pixel data");
    return img;
}

void write_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write image '" + path + "'");
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
    if (!out) throw IoError("write failed for '" + path + "'");
}

GrayImage checkerboard(std::uint32_t width, std::uint32_t height, std::uint32_t cell) {
    if (cell == 0) throw std::invalid_argument("checkerboard: cell must be positive");
    GrayImage img(width, height);
    for (std::uint32_t y = 0; y < height; ++y)
        for (std::uint32_t x = 0; x < width; ++x) img.at(x, y) = ((x / cell + y / cell) % 2) ? 255 : 0;
    return img;
}

GrayImage marker_pattern(std::uint32_t size) {
    if (size < 21) throw std::invalid_argument("marker_pattern: size must be at least 21");
    GrayImage img(size, size, 255);
    const std::uint32_t mod = size / 21;
    const std::uint32_t mark = 7 * mod;
    auto draw = [&](std::uint32_t ox, std::uint32_t oy) {
        for (std::uint32_t y = 0; y < mark; ++y)
            for (std::uint32_t x = 0; x < mark; ++x) {
                const std::uint32_t ring = std::min({x, y, mark - 1 - x, mark - 1 - y}) / mod;
                img.at(ox + x, oy + y) = (ring == 1) ? 255 : 0;
            }
    };
    draw(0, 0);
    draw(size - mark, 0);
    draw(0, size - mark);
    return img;
}

double mean_abs_diff(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height) throw std::invalid_argument("image sizes differ");
    if (a.empty()) return 0;
    double acc = 0;
    for (std::size_t k = 0; k < a.pixels.size(); ++k) acc += std::abs(int(a.pixels[k]) - int(b.pixels[k]));
    return acc / static_cast<double>(a.pixels.size());
}

double psnr(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height) throw std::invalid_argument("image sizes differ");
    double acc = 0;
    for (std::size_t k = 0; k < a.pixels.size(); ++k) {
        const double d = double(a.pixels[k]) - double(b.pixels[k]);
        acc += d * d;
    }
    if (acc == 0) return std::numeric_limits<double>::infinity();
    const double mse = acc / static_cast<double>(a.pixels.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

SinCosProvider SinCosProvider::exact() { return SinCosProvider{}; }

SinCosProvider SinCosProvider::sc(Variant v, std::uint32_t N, unsigned trial) {
    SinCosProvider p;
    p.variant_ = v;
    p.N_ = N;
    const HornerSpec sin_spec = with_trial(builtin_spec(Function::sin, v, N), trial);
    const HornerSpec cos_spec = with_trial(builtin_spec(Function::cos, v, N), trial);
    p.sin_.resize(N + 1);
    p.cos_.resize(N + 1);
    const auto sin_c = coefficient_streams(sin_spec);
    const auto cos_c = coefficient_streams(cos_spec);
    for (std::uint32_t X = 0; X <= N; ++X) {
        p.sin_[X] = decode_value(eval_circuit_streams(sin_spec, input_stream(sin_spec, X), sin_c).output);
        p.cos_[X] = decode_value(eval_circuit_streams(cos_spec, input_stream(cos_spec, X), cos_c).output);
    }
    return p;
}

SinCos SinCosProvider::operator()(double alpha) const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("angle " + std::to_string(alpha) + " outside [0, 1] rad");
    if (is_exact()) {
        const long double a = alpha;
        return {std::sin(a), std::cos(a)};
    }
    const auto X = static_cast<std::size_t>(std::lround(alpha * N_));
    return {sin_[X], cos_[X]};
}

std::string SinCosProvider::describe() const {
    if (is_exact()) return "exact";
    return "sc(" + std::string(name(variant_)) + "," + std::to_string(N_) + ")";
}

namespace {

struct Sampler {
    double s, c, cx, cy;
    bool inverse;

    // Source position for output pixel (x, y).
    void source(std::uint32_t x, std::uint32_t y, double& sx, double& sy) const {
        const double dx = x - cx;
        const double dy = y - cy;
        if (inverse) {
            sx = c * dx - s * dy + cx;
            sy = s * dx + c * dy + cy;
        } else {
            sx = c * dx + s * dy + cx;
            sy = -s * dx + c * dy + cy;
        }
    }
};

Sampler make_sampler(std::uint32_t w, std::uint32_t h, double alpha, const SinCosProvider& provider,
                     const RotateOptions& opt) {
    const SinCos sc = provider(alpha);
    return {double(sc.s), double(sc.c), (w - 1) / 2.0, (h - 1) / 2.0, opt.inverse};
}

bool inside(double sx, double sy, std::uint32_t w, std::uint32_t h, bool bilinear) {
    if (bilinear) return sx >= 0 && sy >= 0 && sx <= w - 1.0 && sy <= h - 1.0;
    const long ix = std::lround(sx);
    const long iy = std::lround(sy);
    return ix >= 0 && iy >= 0 && ix < long(w) && iy < long(h);
}

}  // namespace

GrayImage rotate_image(const GrayImage& img, double alpha, const SinCosProvider& provider, const RotateOptions& opt) {
    if (img.empty()) throw std::invalid_argument("rotate_image: empty image");
    const Sampler sm = make_sampler(img.width, img.height, alpha, provider, opt);
    GrayImage out(img.width, img.height);
    for (std::uint32_t y = 0; y < img.height; ++y)
        for (std::uint32_t x = 0; x < img.width; ++x) {
            double sx, sy;
            sm.source(x, y, sx, sy);
            if (!inside(sx, sy, img.width, img.height, opt.bilinear)) continue;
            if (!opt.bilinear) {
                out.at(x, y) = img.at(std::uint32_t(std::lround(sx)), std::uint32_t(std::lround(sy)));
                continue;
            }
            const auto x0 = std::min(std::uint32_t(sx), img.width - 1);
            const auto y0 = std::min(std::uint32_t(sy), img.height - 1);
            const auto x1 = std::min(x0 + 1, img.width - 1);
            const auto y1 = std::min(y0 + 1, img.height - 1);
            const double fx = sx - x0;
            const double fy = sy - y0;
            const double top = img.at(x0, y0) * (1 - fx) + img.at(x1, y0) * fx;
            const double bot = img.at(x0, y1) * (1 - fx) + img.at(x1, y1) * fx;
            out.at(x, y) = static_cast<std::uint8_t>(std::lround(top * (1 - fy) + bot * fy));
        }
    return out;
}

std::size_t rotation_outside_count(std::uint32_t width, std::uint32_t height, double alpha,
                                   const SinCosProvider& provider, const RotateOptions& opt) {
    const Sampler sm = make_sampler(width, height, alpha, provider, opt);
    std::size_t n = 0;
    for (std::uint32_t y = 0; y < height; ++y)
        for (std::uint32_t x = 0; x < width; ++x) {
            double sx, sy;
            sm.source(x, y, sx, sy);
            if (!inside(sx, sy, width, height, opt.bilinear)) ++n;
        }
    return n;
}

double angle_error(double alpha, const SinCosProvider& provider) {
    const SinCos sc = provider(alpha);
    const double est = static_cast<double>(std::atan2(sc.s, sc.c));
    return std::abs(alpha - est) * 180.0 / std::numbers::pi;
}

std::vector<AngleErrorRow> angle_error_sweep(const SinCosProvider& provider, unsigned steps) {
    if (steps == 0) throw std::invalid_argument("angle_error_sweep: steps must be positive");
    std::vector<AngleErrorRow> rows;
    rows.reserve(steps);
    for (unsigned k = 1; k <= steps; ++k) {
        const double a = static_cast<double>(k) / steps;
        rows.push_back({a, angle_error(a, provider)});
    }
    return rows;
}

double mean_angle_error(const SinCosProvider& provider, unsigned steps) {
    double acc = 0;
    for (const auto& r : angle_error_sweep(provider, steps)) acc += r.e_deg;
    return acc / steps;
}

Point forward_kinematics(double L1, double L2, double alpha1, double alpha2, const SinCosProvider& provider) {
    const double sum = alpha1 + alpha2;
    if (!(alpha1 >= 0.0 && alpha1 <= 1.0) || !(sum >= 0.0 && sum <= 1.0))
        throw DomainError("joint angles (" + std::to_string(alpha1) + ", " + std::to_string(alpha2) +
                          ") outside the supported domain");
    const SinCos a = provider(alpha1);
    const SinCos b = provider(sum);
    return {double(L1 * a.c + L2 * b.c), double(L1 * a.s + L2 * b.s)};
}

PerrReport perr_sweep(double L1, double L2, unsigned grid_steps, const SinCosProvider& sc, const SinCosProvider& ref) {
    if (grid_steps == 0) throw std::invalid_argument("perr_sweep: grid must be positive");
    PerrReport rep;
    double acc = 0;
    for (unsigned i = 0; i <= grid_steps; ++i)
        for (unsigned j = 0; i + j <= grid_steps; ++j) {
            ArmRow r;
            r.alpha1 = static_cast<double>(i) / grid_steps;
            r.alpha2 = static_cast<double>(j) / grid_steps;
            r.ref = forward_kinematics(L1, L2, r.alpha1, r.alpha2, ref);
            r.sc = forward_kinematics(L1, L2, r.alpha1, r.alpha2, sc);
            r.perr = std::hypot(r.sc.x - r.ref.x, r.sc.y - r.ref.y);
            acc += r.perr;
            rep.rows.push_back(r);
        }
    rep.mean = acc / static_cast<double>(rep.rows.size());
    return rep;
}

PerrReport perr_sweep(double L1, double L2, unsigned grid_steps, Variant v, std::uint32_t N) {
    return perr_sweep(L1, L2, grid_steps, SinCosProvider::sc(v, N));
}

std::string arm_csv(const PerrReport& report, bool header) {
    std::ostringstream os;
    if (header) os << "alpha1,alpha2,x_ref,y_ref,x_sc,y_sc,perr\n";
    for (const auto& r : report.rows)
        os << format_g9(r.alpha1) << ',' << format_g9(r.alpha2) << ',' << format_g9(r.ref.x) << ','
           << format_g9(r.ref.y) << ',' << format_g9(r.sc.x) << ',' << format_g9(r.sc.y) << ',' << format_g9(r.perr)
           << '\n';
    return os.str();
}

std::string rotation_csv(const std::vector<AngleErrorRow>& rows, bool header) {
    std::ostringstream os;
    if (header) os << "alpha,e_deg\n";
    for (const auto& r : rows) os << format_g9(r.alpha) << ',' << format_g9(r.e_deg) << '\n';
    return os.str();
}

}  // namespace scfn
