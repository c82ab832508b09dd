#include "wsflow/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace wsflow {

std::string format_double(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x);
    return buffer;
}

void write_cloud_csv(std::ostream& out, const DiscreteMeasure& m) {
    for (int c = 0; c < m.dim(); ++c) out << "x" << (c + 1) << ",";
    out << "w\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto p = m.point(i);
        for (int c = 0; c < m.dim(); ++c) out << format_double(p[c]) << ",";
        out << format_double(m.weight(i)) << "\n";
    }
}

void write_quantile_csv(std::ostream& out, const QuantileGrid& q) {
    out << "s,q\n";
    for (std::size_t k = 0; k < q.size(); ++k) {
        out << format_double(q.node(k)) << "," << format_double(q[k]) << "\n";
    }
}

DiscreteMeasure read_cloud_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("cloud csv: missing header");
    int dim = 0;
    {
        std::stringstream header(line);
        std::string field;
        while (std::getline(header, field, ',')) {
            if (field == "w") break;
            ++dim;
        }
    }
    if (dim < 1) throw std::runtime_error("cloud csv: no coordinate columns");

    std::vector<double> coords;
    std::vector<double> weights;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string field;
        for (int c = 0; c < dim; ++c) {
            if (!std::getline(row, field, ',')) throw std::runtime_error("cloud csv: short row");
            coords.push_back(std::stod(field));
        }
        if (!std::getline(row, field, ',')) throw std::runtime_error("cloud csv: missing weight");
        weights.push_back(std::stod(field));
    }
    return DiscreteMeasure(dim, std::move(coords), std::move(weights));
}

} // namespace wsflow
