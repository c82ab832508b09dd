#ifndef WSFLOW_HALFTONE_HPP
#define WSFLOW_HALFTONE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wsflow/measures.hpp"
#include "wsflow/particles.hpp"

namespace wsflow {

/// Image-derived probability measure: pixel centers in [0, aspect] x [0,1]
/// (y up), mass proportional to darkness (maxval - gray).
struct PixelMeasure {
    int width = 0;
    int height = 0;
    std::vector<double> weights;    // row-major, normalized to sum 1
    std::vector<double> positions;  // flat 2D pixel centers

    double aspect() const;

    /// Strided subsample (every stride-th pixel per axis), renormalized.
    DiscreteMeasure to_measure(int stride = 1) const;
};

/// Parses a P5 (binary) or P2 (ASCII) PGM with maxval <= 65535.  All-white
/// images carry no mass and are rejected.
PixelMeasure parse_pgm(std::istream& in);
PixelMeasure load_pgm(const std::string& path);

/// Writes a binary (P5) PGM; one- or two-byte samples depending on maxval.
void write_pgm(std::ostream& out, int width, int height, int maxval,
               const std::vector<int>& samples);

struct HalftoneConfig {
    std::size_t dots = 64;
    int stride = 1;
    int steps = 500;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double tau0 = 0.0;     // 0 keeps the simulator default 1/(10 M)
    double tau_max = 0.0;  // 0 keeps the simulator default 10/M
};

struct HalftoneResult {
    DiscreteMeasure dots;
    std::vector<EnergyTraceRow> energy;
};

/// Negative-distance-kernel stippling: particle descent of the discrepancy
/// against the (possibly strided) pixel measure, started from a tiny cube at
/// the image center.
HalftoneResult run_halftone(const PixelMeasure& image, const HalftoneConfig& cfg);

/// One filled circle per dot on a canvas of the image's aspect ratio, y axis
/// flipped back to image convention.
std::string export_svg(const DiscreteMeasure& dots, double dot_radius,
                       double canvas_width, double canvas_height);

} // namespace wsflow

#endif
