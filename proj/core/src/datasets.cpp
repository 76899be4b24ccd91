#include "solvspec/datasets.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace solvspec::fitting {

namespace {

// Dynamic Stokes shift fits: reorganization energy and multi-exponential
// decay components for chromophores in different protein/solvent
// environments, as reported by the cited time-resolved measurements.
// SC = Subtilisin Carlsberg, HSA = human serum albumin, SNase =
// Staphylococcus nuclease, GlnRS = glutaminyl-tRNA synthetase.
constexpr std::string_view kSolvationCsv =
    "chromophore,protein,solvent,E_R_cm1,A1,tau1_ps,A2,tau2_ps,A3,tau3_ps,source\n"
    "Trp,none,water,,0.65,0.16,0.35,1.1,,,Zhong02PNAS\n"
    "Trp,none,water,2193,0.55,0.34,0.45,1.6,,,Lu04CPL\n"
    "Trp,SC,buffer,1440,0.6,0.8,0.4,38,,,Pal02PNASa\n"
    "Trp,Monellin,buffer,960,0.46,1.3,0.54,16,,,Peon02PNAS\n"
    "Trp,SNase-WT,buffer,850,0.46,5,0.54,153,,,Qiu06PNAS\n"
    "Trp,SNase-K110A,buffer,876,0.77,3,0.23,96,,,Qiu06PNAS\n"
    "Trp,HSA,water pH 7,1156,0.39,5,0.61,133,,,Qiu06JPCB\n"
    "Trp,HSA,water pH 9,1015,0.3,1.6,0.7,46,,,Qiu06JPCB\n"
    "Dansyl,SC,water,1180,0.94,1.5,0.06,40,,,Pal02PNASa\n"
    "DCM,HSA,Tris buffer,515,,,0.25,600,0.75,10000,Pal01JPCB\n"
    "Prodan,none,buffer,2313,0.47,0.13,0.53,0.77,,,Kamal04PNAS\n"
    "Prodan,HSA,buffer,916,0.19,0.78,0.56,2.6,0.25,32,Kamal04PNAS\n"
    "Acrylodan,HSA,buffer,1680,0.23,0.71,0.41,3.7,0.36,57,Kamal04PNAS\n"
    "Acrylodan,HSA,0.2M Gdn.HCl,,0.16,0.28,0.36,5.4,0.48,61,Kamal04PNAS\n"
    "Acrylodan,HSA,0.6M Gdn.HCl,,0.2,0.12,0.55,2,0.25,13.5,Kamal04PNAS\n"
    "MPTS,none,buffer,2097,0.8,0.02,0.2,0.34,,,Jimenez02JPCB\n"
    "MPTS,Ab6C8,buffer,1910,0.85,0.033,0.1,2,0.05,67,Jimenez02JPCB\n"
    "bis-ANS,GlnRS (native),water,750,,,0.45,170,0.55,2400,Sen03JPCB\n"
    "bis-ANS,GlnRS (molten),urea,500,,,0.63,60,0.37,960,Sen03JPCB\n"
    "4-AP,GlnRS (native),water,1330,,,0.85,40,0.15,580,Sen03JPCB\n"
    "4-AP,GlnRS (molten),urea,700,,,0.77,50,0.23,900,Sen03JPCB\n"
    "Zn-porphyrin,Cytochrome-c,water,170,,,0.4,250,0.6,1500,Lampa04JPCB\n";

// Tunneling/transfer matrix elements for two-state processes in biomolecules,
// next to the solvation rates of the environment components they compete
// with.  LHI/LHII are bacterial light-harvesting complexes, PRC the
// photosynthetic reaction centre.
constexpr std::string_view kDeltaCsv =
    "process,delta_min_mev,delta_max_mev,reference\n"
    "Forster coupling between chromophores in FRET spectroscopy,0.2,2,\n"
    "Interring Forster coupling between chromophores in LHI and LHII,0.3,0.3,Hu97JPCB\n"
    "Intraring Forster coupling between two chlorophyll molecules in LHI,50,100,Hu97JPCB\n"
    "Forster coupling between infrared amide modes in proteins,0.1,1,Cho05JCP\n"
    "Electron transfer in photosynthetic reaction centre,1,10,Zhang98PNAS\n"
    "Electron transfer in PRC radical cation,10,100,Reimers96CP\n"
    "Electron transfer in proteins,0.0001,0.01,Kawatsu02JPCB\n"
    "Proton transfer,0.05,0.05,Borgis96JPC\n"
    "Level crossing for non-radiative decay,40,40,Ben-Nun98FD\n"
    "Solvation rate due to bulk water,10,10,Lang99JCP\n"
    "Solvation rate due to bound water,0.1,1,Peon02PNAS\n"
    "Solvation rate due to protein,0.004,0.04,Sen03JPCB\n";

// Characteristic timescales of processes in proteins and solutions.
constexpr std::string_view kTimescaleCsv =
    "process,timescale_min_ps,timescale_max_ps,reference\n"
    "Radiative lifetime,10000,10000,vanHolde98\n"
    "Internal conversion,0.01,0.01,vanHolde98\n"
    "Bulk water dielectric relaxation,8,8,Afsar78\n"
    "Protein dielectric relaxation (MD),1000,10000,Loffler97 Boresch00JPCB\n"
    "Ultrafast solvation in water,0.01,0.1,Lang99JCP\n"
    "Fast solvation in water,0.1,1,Lang99JCP\n"
    "Solvation due to bound water,5,50,Peon02PNAS\n"
    "Solvation due to protein,1000,10000,Sen03JPCB\n"
    "Covalent bond vibrations,0.01,0.1,vanHolde98\n"
    "Elastic vibrations of globular regions,1,10,vanHolde98\n"
    "Rotation of surface sidechains,10,100,vanHolde98\n"
    "Reorientation of whole protein,4000,15000,Boresch00JPCB\n";

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cell);
            cell.clear();
        } else if (ch != '\r') {
            cell += ch;
        }
    }
    cells.push_back(cell);
    return cells;
}

double parse_number(const std::string& cell, int line, const std::string& field) {
    try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line) + ", field '" + field +
                         "': cannot parse number from '" + cell + "'");
    }
}

} // namespace

void SolvationRecord::validate() const {
    if (components.empty()) {
        throw ValidationError("solvation record has no decay components");
    }
    double weight_sum = 0.0;
    for (const auto& c : components) {
        if (!(c.weight >= 0.0)) throw ValidationError("component weight must be >= 0");
        if (!(c.tau_ps > 0.0)) throw ValidationError("component time must be > 0");
        weight_sum += c.weight;
    }
    if (weight_sum < 0.98 || weight_sum > 1.02) {
        throw ValidationError("component weights of '" + chromophore + "/" + protein +
                              "' sum to " + std::to_string(weight_sum) +
                              ", outside [0.98, 1.02]");
    }
    if (reorganization_energy_cm1 && !(*reorganization_energy_cm1 > 0.0)) {
        throw ValidationError("reported reorganization energy must be positive");
    }
}

std::vector<SolvationRecord> parse_solvation_csv(std::istream& in) {
    std::vector<SolvationRecord> records;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;  // first non-comment row is the header
            continue;
        }
        const auto cells = split_csv_line(line);
        if (cells.size() != 11) {
            throw ParseError("line " + std::to_string(lineno) + ": expected 11 fields, got " +
                             std::to_string(cells.size()));
        }
        SolvationRecord r;
        r.chromophore = cells[0];
        r.protein = cells[1];
        r.solvent = cells[2];
        r.source = cells[10];
        if (r.chromophore.empty()) {
            throw ParseError("line " + std::to_string(lineno) +
                             ", field 'chromophore': must not be empty");
        }
        if (!cells[3].empty()) {
            r.reorganization_energy_cm1 = parse_number(cells[3], lineno, "E_R_cm1");
        }
        static const char* kWeightField[3] = {"A1", "A2", "A3"};
        static const char* kTimeField[3] = {"tau1_ps", "tau2_ps", "tau3_ps"};
        bool missing_leading = false;
        for (int j = 0; j < 3; ++j) {
            const std::string& w = cells[4 + 2 * j];
            const std::string& tau = cells[5 + 2 * j];
            if (w.empty() != tau.empty()) {
                throw ParseError("line " + std::to_string(lineno) + ", field '" +
                                 (w.empty() ? kWeightField[j] : kTimeField[j]) +
                                 "': weight and time must be given together");
            }
            if (w.empty()) {
                if (j == 0) missing_leading = true;
                continue;
            }
            r.components.push_back({parse_number(w, lineno, kWeightField[j]),
                                    parse_number(tau, lineno, kTimeField[j])});
        }
        r.unresolved_fast_window = missing_leading && !r.components.empty();
        try {
            r.validate();
        } catch (const ValidationError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<SolvationRecord> load_solvation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open solvation data file: " + path);
    return parse_solvation_csv(in);
}

std::string_view solvation_table_csv() { return kSolvationCsv; }
std::string_view delta_scale_table_csv() { return kDeltaCsv; }
std::string_view timescale_table_csv() { return kTimescaleCsv; }

namespace {

void set_range(DeltaScale& r, double lo, double hi) {
    r.delta_min_mev = lo;
    r.delta_max_mev = hi;
}
void set_range(TimescaleEntry& r, double lo, double hi) {
    r.timescale_min_ps = lo;
    r.timescale_max_ps = hi;
}

template <typename Row>
std::vector<Row> parse_range_table(std::string_view csv, const char* what) {
    std::vector<Row> rows;
    std::istringstream in{std::string(csv)};
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const auto cells = split_csv_line(line);
        if (cells.size() != 4) {
            throw ParseError(std::string(what) + " line " + std::to_string(lineno) +
                             ": expected 4 fields");
        }
        Row r;
        r.process = cells[0];
        const double lo = parse_number(cells[1], lineno, "min");
        const double hi = parse_number(cells[2], lineno, "max");
        if (!(lo > 0.0) || hi < lo) {
            throw ParseError(std::string(what) + " line " + std::to_string(lineno) +
                             ": invalid range");
        }
        set_range(r, lo, hi);
        r.reference = cells[3];
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

ReferenceData load_reference_datasets() {
    ReferenceData data;
    std::istringstream solvation{std::string(kSolvationCsv)};
    data.solvation = parse_solvation_csv(solvation);
    data.delta_scales = parse_range_table<DeltaScale>(kDeltaCsv, "delta table");
    data.timescales = parse_range_table<TimescaleEntry>(kTimescaleCsv, "timescale table");
    return data;
}

} // namespace solvspec::fitting
