#include "wsflow/halftone.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wsflow {
namespace {

// next whitespace/comment-delimited token of a PGM header
int next_header_int(std::istream& in) {
    for (;;) {
        int ch = in.peek();
        if (ch == '#') {
            std::string line;
            std::getline(in, line);
            continue;
        }
        if (std::isspace(ch)) {
            in.get();
            continue;
        }
        break;
    }
    int value = 0;
    if (!(in >> value)) throw std::runtime_error("pgm: malformed header");
    return value;
}

} // namespace

double PixelMeasure::aspect() const {
    return static_cast<double>(width) / static_cast<double>(height);
}

DiscreteMeasure PixelMeasure::to_measure(int stride) const {
    if (stride < 1) throw std::invalid_argument("PixelMeasure: stride must be >= 1");
    std::vector<double> coords;
    std::vector<double> mass;
    double total = 0.0;
    for (int row = 0; row < height; row += stride) {
        for (int col = 0; col < width; col += stride) {
            const std::size_t p = static_cast<std::size_t>(row) * width + col;
            coords.push_back(positions[2 * p]);
            coords.push_back(positions[2 * p + 1]);
            mass.push_back(weights[p]);
            total += weights[p];
        }
    }
    if (total <= 0.0) throw std::runtime_error("PixelMeasure: strided subsample has no mass");
    for (double& w : mass) w /= total;
    return DiscreteMeasure(2, std::move(coords), std::move(mass));
}

PixelMeasure parse_pgm(std::istream& in) {
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5')) {
        throw std::runtime_error("pgm: not a P2/P5 file");
    }
    const bool binary = magic[1] == '5';
    const int width = next_header_int(in);
    const int height = next_header_int(in);
    const int maxval = next_header_int(in);
    if (width < 1 || height < 1 || maxval < 1 || maxval > 65535) {
        throw std::runtime_error("pgm: invalid dimensions or maxval");
    }

    const std::size_t count = static_cast<std::size_t>(width) * height;
    std::vector<int> gray(count);
    if (binary) {
        in.get();  // single whitespace after maxval
        const int bytes = maxval > 255 ? 2 : 1;
        std::vector<unsigned char> raw(count * bytes);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
            throw std::runtime_error("pgm: short pixel payload");
        }
        for (std::size_t p = 0; p < count; ++p) {
            gray[p] = bytes == 1 ? raw[p] : (raw[2 * p] << 8) | raw[2 * p + 1];
        }
    } else {
        for (std::size_t p = 0; p < count; ++p) {
            if (!(in >> gray[p])) throw std::runtime_error("pgm: short pixel payload");
        }
    }

    PixelMeasure image;
    image.width = width;
    image.height = height;
    image.weights.resize(count);
    image.positions.resize(2 * count);

    double total = 0.0;
    const double inv_h = 1.0 / static_cast<double>(height);
    for (int row = 0; row < height; ++row) {
        for (int col = 0; col < width; ++col) {
            const std::size_t p = static_cast<std::size_t>(row) * width + col;
            if (gray[p] < 0 || gray[p] > maxval) throw std::runtime_error("pgm: sample out of range");
            const double mass = static_cast<double>(maxval - gray[p]);
            image.weights[p] = mass;
            total += mass;
            // domain [0, aspect] x [0, 1], y up (row 0 at the top)
            image.positions[2 * p] = (static_cast<double>(col) + 0.5) * inv_h;
            image.positions[2 * p + 1] = 1.0 - (static_cast<double>(row) + 0.5) * inv_h;
        }
    }
    if (total <= 0.0) throw std::runtime_error("pgm: all-white image carries no mass");
    for (double& w : image.weights) w /= total;
    return image;
}

PixelMeasure load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("pgm: cannot open " + path);
    return parse_pgm(in);
}

void write_pgm(std::ostream& out, int width, int height, int maxval,
               const std::vector<int>& samples) {
    if (samples.size() != static_cast<std::size_t>(width) * height) {
        throw std::invalid_argument("write_pgm: sample count mismatch");
    }
    out << "P5\n" << width << " " << height << "\n" << maxval << "\n";
    const int bytes = maxval > 255 ? 2 : 1;
    for (int s : samples) {
        if (bytes == 2) out.put(static_cast<char>((s >> 8) & 0xFF));
        out.put(static_cast<char>(s & 0xFF));
    }
}

HalftoneResult run_halftone(const PixelMeasure& image, const HalftoneConfig& cfg) {
    SimConfig sim(cfg.dots, 2, 1.0, image.to_measure(cfg.stride));
    sim.seed = cfg.seed;
    sim.steps = cfg.steps;
    sim.threads = cfg.threads;
    sim.init_center = {0.5 * image.aspect(), 0.5};
    if (cfg.tau0 > 0.0) sim.tau0 = cfg.tau0;
    if (cfg.tau_max > 0.0) sim.tau_max = cfg.tau_max;

    const int snapshot_every = std::max(1, cfg.steps / 50);
    RunLog log = run(sim, snapshot_every);
    return {DiscreteMeasure::uniform_cloud(2, log.final_state.positions),
            std::move(log.energy)};
}

std::string export_svg(const DiscreteMeasure& dots, double dot_radius,
                       double canvas_width, double canvas_height) {
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas_width
        << "\" height=\"" << canvas_height << "\" viewBox=\"0 0 " << canvas_width << " "
        << canvas_height << "\">\n";
    const double aspect = canvas_width / canvas_height;
    for (std::size_t i = 0; i < dots.size(); ++i) {
        const auto p = dots.point(i);
        const double cx = p[0] / aspect * canvas_width;
        const double cy = (1.0 - p[1]) * canvas_height;  // flip back to image convention
        svg << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << dot_radius
            << "\" fill=\"black\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace wsflow
