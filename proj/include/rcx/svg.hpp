#pragma once

#include <algorithm>
#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace rcx {

/// Minimal SVG writer for curves and eigenvalue scatters: a polyline plus
/// circles in one auto-scaled viewBox (y flipped so the complex plane reads
/// the usual way).
class SvgPlot {
  public:
    void polyline(std::vector<std::complex<double>> pts, std::string stroke = "#1f77b4") {
        for (const auto& p : pts) grow(p);
        polys_.push_back({std::move(pts), std::move(stroke)});
    }
    void circle(std::complex<double> center, double r, std::string fill = "#d62728") {
        grow(center);
        circles_.push_back({center, r, std::move(fill)});
    }

    void write(std::ostream& out, int width = 640, int height = 640) const {
        double spanx = std::max(maxx_ - minx_, 1e-12), spany = std::max(maxy_ - miny_, 1e-12);
        double pad = 0.05 * std::max(spanx, spany);
        double x0 = minx_ - pad, y0 = miny_ - pad;
        double sx = width / (spanx + 2 * pad), sy = height / (spany + 2 * pad);
        double s = std::min(sx, sy);
        auto X = [&](double x) { return (x - x0) * s; };
        auto Y = [&](double y) { return height - (y - y0) * s; };

        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
            << height << "\">\n";
        for (const auto& p : polys_) {
            out << "  <polyline fill=\"none\" stroke=\"" << p.stroke
                << "\" stroke-width=\"1\" points=\"";
            for (const auto& z : p.pts) out << X(z.real()) << "," << Y(z.imag()) << " ";
            out << "\"/>\n";
        }
        for (const auto& c : circles_)
            out << "  <circle cx=\"" << X(c.center.real()) << "\" cy=\"" << Y(c.center.imag())
                << "\" r=\"" << c.r << "\" fill=\"" << c.fill << "\" fill-opacity=\"0.7\"/>\n";
        out << "</svg>\n";
    }

  private:
    struct Poly {
        std::vector<std::complex<double>> pts;
        std::string stroke;
    };
    struct Circle {
        std::complex<double> center;
        double r;
        std::string fill;
    };

    void grow(std::complex<double> p) {
        minx_ = std::min(minx_, p.real());
        maxx_ = std::max(maxx_, p.real());
        miny_ = std::min(miny_, p.imag());
        maxy_ = std::max(maxy_, p.imag());
    }

    std::vector<Poly> polys_;
    std::vector<Circle> circles_;
    double minx_ = 0, maxx_ = 0, miny_ = 0, maxy_ = 0;
};

}  // namespace rcx
