#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperham/search.hpp"

namespace hyperham {

enum class GeneratorKind { Random, Extremal, Complete };

std::string to_string(GeneratorKind g);
GeneratorKind parse_generator(const std::string& s);

struct SweepConfig {
    unsigned k = 3;
    unsigned l = 2;
    std::vector<unsigned> n_list;
    GeneratorKind generator = GeneratorKind::Random;
    std::vector<double> p_grid{0.5};  ///< random generator only
    unsigned trials = 1;
    std::uint64_t seed = 0;
    SearchBudget budget;
    bool timing = true;    ///< false writes NA in the timing columns
    unsigned workers = 1;  ///< cells computed concurrently
};

/// Throws ContractViolation unless every n is divisible by k-l (and by
/// ctmod for the extremal generator), trials >= 1 and (k, l) is valid.
void validate(const SweepConfig& c);

struct SweepRow {
    unsigned k = 0;
    unsigned l = 0;
    unsigned n = 0;
    std::string generator;
    std::optional<double> p;
    unsigned trial = 0;
    std::uint64_t instance_seed = 0;
    std::size_t delta = 0;
    std::optional<std::size_t> delta_plus;
    std::size_t isolated = 0;
    SearchOutcome hamilton = SearchOutcome::None;
    std::string pfm;  ///< feasible | infeasible
    std::optional<std::size_t> sis;  ///< empty when the search ran out of budget
    std::uint64_t ham_nodes = 0;
    std::uint64_t sis_nodes = 0;
    std::optional<double> ham_seconds;
    std::optional<double> sis_seconds;
};

/// stable_hash(seed, n, p_index, trial)
std::uint64_t instance_seed(std::uint64_t seed, unsigned n, std::size_t p_index, unsigned trial);

std::string csv_header();
std::string csv_line(const SweepRow& r);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

/// Runs every (n, p, trial); rows go to `csv` (header first) cell by cell in
/// a fixed order whatever the completion order.
std::vector<SweepRow> run_sweep(const SweepConfig& config, std::ostream* csv = nullptr);

struct SummaryCell {
    unsigned n = 0;
    std::string generator;
    std::optional<double> p;
    std::size_t rows = 0;
    std::size_t found = 0;
    std::size_t none = 0;
    std::size_t undecided = 0;
    std::optional<Rational> fraction;       ///< found / decided
    std::optional<double> mean_dplus_ratio;  ///< over rows with defined delta+
};

/// Groups by (n, generator, p). Throws ContractViolation on empty input.
std::vector<SummaryCell> summarize(const std::vector<SweepRow>& rows);
std::string summary_json(const std::vector<SummaryCell>& cells);
std::string summary_text(const std::vector<SummaryCell>& cells);

/// Fraction Hamiltonian against mean delta+/n, one series per n, with a
/// reference line at x = dcover.
std::string threshold_svg(const std::vector<SummaryCell>& cells, double dcover, const std::string& title);

}  // namespace hyperham
