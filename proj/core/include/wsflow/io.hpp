#ifndef WSFLOW_IO_HPP
#define WSFLOW_IO_HPP

#include <iosfwd>
#include <string>

#include "wsflow/measures.hpp"

namespace wsflow {

/// 17 significant digits so round-tripped doubles are bit-exact.
std::string format_double(double x);

/// Point cloud as `x1,...,xd,w` rows with header.
void write_cloud_csv(std::ostream& out, const DiscreteMeasure& m);

/// Quantile grid as `s,q` rows with header.
void write_quantile_csv(std::ostream& out, const QuantileGrid& q);

/// Reads a cloud written by write_cloud_csv (header mandatory).
DiscreteMeasure read_cloud_csv(std::istream& in);

} // namespace wsflow

#endif
