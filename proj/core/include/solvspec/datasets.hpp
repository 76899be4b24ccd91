// datasets.hpp — bundled experimental reference tables: solvation-relaxation
// fits for chromophore/protein/solvent systems, two-state coupling energy
// scales, and characteristic environment timescales.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "solvspec/fitting.hpp"

namespace solvspec::fitting {

struct SolvationRecord {
    std::string chromophore;
    std::string protein;  // "none" for a free chromophore
    std::string solvent;
    std::optional<double> reorganization_energy_cm1;  // absent when not reported
    std::vector<FitComponent> components;             // (A_j, tau_j), tau ascending
    std::string source;
    // The experiment lacked femtosecond resolution: fast components exist but
    // were not resolved, so the listed weights cover only the slow window.
    bool unresolved_fast_window = false;

    void validate() const;  // sum A_j in [0.98, 1.02], A_j >= 0, tau_j > 0
};

struct DeltaScale {
    std::string process;
    double delta_min_mev = 0.0;
    double delta_max_mev = 0.0;
    std::string reference;
};

struct TimescaleEntry {
    std::string process;
    double timescale_min_ps = 0.0;
    double timescale_max_ps = 0.0;
    std::string reference;
};

struct ReferenceData {
    std::vector<SolvationRecord> solvation;
    std::vector<DeltaScale> delta_scales;
    std::vector<TimescaleEntry> timescales;
};

// Parses the solvation-record schema
//   chromophore,protein,solvent,E_R_cm1,A1,tau1_ps,A2,tau2_ps,A3,tau3_ps,source
// with a header row and empty cells for absent values.  Malformed rows raise
// ParseError naming the line and field.
std::vector<SolvationRecord> parse_solvation_csv(std::istream& in);
std::vector<SolvationRecord> load_solvation_file(const std::string& path);

// Bundled tables (embedded copies of the reference datasets).
std::string_view solvation_table_csv();
std::string_view delta_scale_table_csv();
std::string_view timescale_table_csv();

// Parses every bundled table; all rows validate their invariants.
ReferenceData load_reference_datasets();

} // namespace solvspec::fitting
