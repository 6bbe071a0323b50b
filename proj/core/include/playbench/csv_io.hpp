#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "playbench/kmeans.hpp"
#include "playbench/trace.hpp"

namespace playbench {

/// step,epoch,sample,x1..xA,desired,n1[,n2,n3],output,error,w1..wN[,b1..b3]
std::string csv_header(const TraceLayout& layout);

/// Header line plus one line per record, '\n' terminated. Reals use the
/// shortest representation that round-trips.
std::string write_trace_csv(const TraceLayout& layout, std::span<const IterationRecord> records);

struct CsvTrace {
  TraceLayout layout;
  std::vector<IterationRecord> records;
};

/// Inverse of write_trace_csv; the layout is recovered from the header.
/// Throws Error(invalid_input) on any malformed line.
CsvTrace parse_trace_csv(std::string_view text);

/// point,x,y,cluster,distance,color
std::string write_kmeans_csv(const KMeansResult& result);

/// Shortest round-trip decimal form of a double.
std::string format_real(double value);

}  // namespace playbench
