#ifndef HOPMC_IO_HPP
#define HOPMC_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hopmc/edge_sets.hpp"
#include "hopmc/estimators.hpp"
#include "hopmc/graph.hpp"
#include "hopmc/oracle.hpp"
#include "hopmc/region.hpp"

namespace hopmc {

// Graph text format:
//   # comment lines and blank lines anywhere
//   n m
//   a b r        (m edge lines; edge id = order of appearance)
//   K k1 k2 ...  (terminal line, anywhere after the header)
// Errors carry "<name>:<line>: ..." context.
Network read_network(std::istream& in, const std::string& name);
Network read_network_file(const std::string& path);
void write_network(std::ostream& out, const Network& net);

// Region spec JSON: {"thresholds": [...], "phi_values": [...]}.
RegionSpec read_regions(std::istream& in, const std::string& name);
RegionSpec read_regions_file(const std::string& path);
void write_regions(std::ostream& out, const RegionSpec& spec);

// Families JSON: {"regions": [{"pathsets": [[edge,...],...],
// "cutsets": [[edge,...],...]}, ...]} with one entry per region.
std::vector<RegionFamily> read_families(std::istream& in, const std::string& name);
std::vector<RegionFamily> read_families_file(const std::string& path);
void write_families(std::ostream& out, const std::vector<RegionFamily>& families);

enum class ReportFormat { text, json };

// Estimation report; with both methods present it appends the variance
// ratio, time ratio and relative efficiency. JSON carries format_version 1.
void write_reports(std::ostream& out, const EstimateReport* crude,
                   const EstimateReport* conditioned, ReportFormat format);

// Exact-oracle report (region probabilities, optional z, single-sample
// variances and their difference).
void write_exact_report(std::ostream& out, const ExactResult& result,
                        const RegionSpec& spec, ReportFormat format);

}  // namespace hopmc

#endif
