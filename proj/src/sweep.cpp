#include "hyperham/sweep.hpp"

#include <charconv>
#include <future>
#include <iomanip>
#include <istream>
#include <map>
#include "json.hpp"
#include <ostream>
#include <sstream>
#include <tuple>

#include "hyperham/fractional_matching.hpp"
#include "hyperham/generators.hpp"
#include "hyperham/params.hpp"

namespace hyperham {

std::string to_string(GeneratorKind g) {
    switch (g) {
        case GeneratorKind::Random: return "random";
        case GeneratorKind::Extremal: return "extremal";
        case GeneratorKind::Complete: return "complete";
    }
    return "?";
}

GeneratorKind parse_generator(const std::string& s) {
    if (s == "random") return GeneratorKind::Random;
    if (s == "extremal") return GeneratorKind::Extremal;
    if (s == "complete") return GeneratorKind::Complete;
    throw InvalidQuery("unknown generator '" + s + "'");
}

void validate(const SweepConfig& c) {
    const auto params = threshold_params(c.k, c.l);
    if (c.trials < 1) throw ContractViolation("sweep: trials must be at least 1");
    if (c.n_list.empty()) throw ContractViolation("sweep: empty n list");
    if (c.generator == GeneratorKind::Random && c.p_grid.empty()) throw ContractViolation("sweep: empty p grid");
    for (double p : c.p_grid)
        if (!(p >= 0 && p <= 1)) throw ContractViolation("sweep: p outside [0,1]");
    for (unsigned n : c.n_list) {
        if (n % (c.k - c.l) != 0) throw ContractViolation("sweep: n=" + std::to_string(n) + " not divisible by k-l");
        if (n < c.k) throw ContractViolation("sweep: n=" + std::to_string(n) + " below k");
        if (c.generator == GeneratorKind::Extremal && n % params.ctmod != 0)
            throw ContractViolation("sweep: extremal generator needs ctmod | n");
    }
}

std::uint64_t instance_seed(std::uint64_t seed, unsigned n, std::size_t p_index, unsigned trial) {
    return stable_hash({seed, n, p_index, trial});
}

namespace {

std::string fmt_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

template <class T>
std::string opt_field(const std::optional<T>& v) {
    if (!v) return "NA";
    if constexpr (std::is_floating_point_v<T>) return fmt_double(*v);
    else return std::to_string(*v);
}

SweepRow run_instance(const SweepConfig& c, unsigned n, std::size_t p_index, unsigned trial) {
    SweepRow r;
    r.k = c.k;
    r.l = c.l;
    r.n = n;
    r.generator = to_string(c.generator);
    r.trial = trial;
    r.instance_seed = instance_seed(c.seed, n, p_index, trial);
    Hypergraph h;
    switch (c.generator) {
        case GeneratorKind::Random:
            r.p = c.p_grid[p_index];
            h = random_kgraph(c.k, n, *r.p, r.instance_seed);
            break;
        case GeneratorKind::Extremal: h = extremal_construction(c.k, c.l, n).graph; break;
        case GeneratorKind::Complete: h = complete_kgraph(c.k, n); break;
    }
    const auto params = threshold_params(c.k, c.l);
    r.delta = min_codegree(h);
    r.delta_plus = min_positive_codegree(h);
    r.isolated = isolated_vertices(h).size();

    SearchOptions opt;
    opt.budget = c.budget;
    const auto ham = find_hamilton_lcycle(h, c.l, opt);
    r.hamilton = ham.outcome;
    r.ham_nodes = ham.nodes;
    r.pfm = std::holds_alternative<WeightedFractionalMatching>(find_weighted_pfm(h, params)) ? "feasible"
                                                                                               : "infeasible";
    const auto sis = max_strong_independent_set(h, c.budget);
    if (sis.outcome == SearchOutcome::Found) r.sis = sis.value->size();
    r.sis_nodes = sis.nodes;
    if (c.timing) {
        r.ham_seconds = ham.seconds;
        r.sis_seconds = sis.seconds;
    }
    return r;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, ',')) out.push_back(cur);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

template <class T>
T parse_num(const std::string& s, const char* column) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::runtime_error(std::string("sweep csv: bad value '") + s + "' in column " + column);
    return v;
}

template <class T>
std::optional<T> parse_opt(const std::string& s, const char* column) {
    if (s == "NA") return std::nullopt;
    return parse_num<T>(s, column);
}

SearchOutcome parse_outcome(const std::string& s) {
    if (s == "found") return SearchOutcome::Found;
    if (s == "none") return SearchOutcome::None;
    if (s == "budget") return SearchOutcome::BudgetExhausted;
    throw std::runtime_error("sweep csv: bad hamilton outcome '" + s + "'");
}

}  // namespace

std::string csv_header() {
    return "k,l,n,generator,p,trial,instance_seed,delta,delta_plus,isolated,hamilton,pfm,sis,"
           "ham_nodes,sis_nodes,ham_seconds,sis_seconds";
}

std::string csv_line(const SweepRow& r) {
    std::ostringstream o;
    o << r.k << ',' << r.l << ',' << r.n << ',' << r.generator << ',' << opt_field(r.p) << ',' << r.trial << ','
      << r.instance_seed << ',' << r.delta << ',' << opt_field(r.delta_plus) << ',' << r.isolated << ','
      << to_string(r.hamilton) << ',' << r.pfm << ',' << (r.sis ? std::to_string(*r.sis) : "budget") << ','
      << r.ham_nodes << ',' << r.sis_nodes << ',' << opt_field(r.ham_seconds) << ',' << opt_field(r.sis_seconds);
    return o.str();
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != csv_header()) throw std::runtime_error("sweep csv: missing or unknown header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line);
        if (f.size() != 17) throw std::runtime_error("sweep csv: expected 17 columns, got " + std::to_string(f.size()));
        SweepRow r;
        r.k = parse_num<unsigned>(f[0], "k");
        r.l = parse_num<unsigned>(f[1], "l");
        r.n = parse_num<unsigned>(f[2], "n");
        r.generator = f[3];
        r.p = parse_opt<double>(f[4], "p");
        r.trial = parse_num<unsigned>(f[5], "trial");
        r.instance_seed = parse_num<std::uint64_t>(f[6], "instance_seed");
        r.delta = parse_num<std::size_t>(f[7], "delta");
        r.delta_plus = parse_opt<std::size_t>(f[8], "delta_plus");
        r.isolated = parse_num<std::size_t>(f[9], "isolated");
        r.hamilton = parse_outcome(f[10]);
        r.pfm = f[11];
        if (f[12] != "budget") r.sis = parse_num<std::size_t>(f[12], "sis");
        r.ham_nodes = parse_num<std::uint64_t>(f[13], "ham_nodes");
        r.sis_nodes = parse_num<std::uint64_t>(f[14], "sis_nodes");
        r.ham_seconds = parse_opt<double>(f[15], "ham_seconds");
        r.sis_seconds = parse_opt<double>(f[16], "sis_seconds");
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, std::ostream* csv) {
    validate(config);
    struct Cell {
        unsigned n;
        std::size_t p_index;
    };
    std::vector<Cell> cells;
    const std::size_t np = config.generator == GeneratorKind::Random ? config.p_grid.size() : 1;
    for (unsigned n : config.n_list)
        for (std::size_t pi = 0; pi < np; ++pi) cells.push_back({n, pi});

    auto run_cell = [&config](Cell c) {
        std::vector<SweepRow> rows;
        for (unsigned t = 0; t < config.trials; ++t) rows.push_back(run_instance(config, c.n, c.p_index, t));
        return rows;
    };
    if (csv) *csv << csv_header() << '\n';
    std::vector<SweepRow> all;
    const unsigned workers = std::max(1u, config.workers);
    for (std::size_t lo = 0; lo < cells.size(); lo += workers) {
        std::vector<std::future<std::vector<SweepRow>>> jobs;
        for (std::size_t i = lo; i < std::min(cells.size(), lo + workers); ++i)
            jobs.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, run_cell, cells[i]));
        for (auto& j : jobs) {
            for (auto& r : j.get()) {
                if (csv) *csv << csv_line(r) << '\n';
                all.push_back(std::move(r));
            }
            if (csv) csv->flush();
        }
    }
    if (csv && !*csv) throw std::runtime_error("sweep: failed writing CSV output");
    return all;
}

std::vector<SummaryCell> summarize(const std::vector<SweepRow>& rows) {
    if (rows.empty()) throw ContractViolation("summarize: no rows");
    using Key = std::tuple<unsigned, std::string, double, bool>;
    std::map<Key, SummaryCell> groups;
    std::map<Key, std::pair<double, std::size_t>> ratio;
    for (const auto& r : rows) {
        const Key key{r.n, r.generator, r.p.value_or(0), r.p.has_value()};
        auto& c = groups[key];
        c.n = r.n;
        c.generator = r.generator;
        c.p = r.p;
        ++c.rows;
        switch (r.hamilton) {
            case SearchOutcome::Found: ++c.found; break;
            case SearchOutcome::None: ++c.none; break;
            case SearchOutcome::BudgetExhausted: ++c.undecided; break;
        }
        if (r.delta_plus) {
            ratio[key].first += static_cast<double>(*r.delta_plus) / r.n;
            ++ratio[key].second;
        }
    }
    std::vector<SummaryCell> out;
    for (auto& [key, c] : groups) {
        if (c.found + c.none > 0) c.fraction = Rational(c.found) / Rational(c.found + c.none);
        if (auto it = ratio.find(key); it != ratio.end())
            c.mean_dplus_ratio = it->second.first / static_cast<double>(it->second.second);
        out.push_back(c);
    }
    return out;
}

std::string summary_json(const std::vector<SummaryCell>& cells) {
    auto arr = nlohmann::json::array();
    for (const auto& c : cells) {
        nlohmann::json j;
        j["n"] = c.n;
        j["generator"] = c.generator;
        j["p"] = c.p ? nlohmann::json(*c.p) : nlohmann::json(nullptr);
        j["rows"] = c.rows;
        j["found"] = c.found;
        j["none"] = c.none;
        j["undecided"] = c.undecided;
        j["fraction"] = c.fraction ? nlohmann::json(to_string(*c.fraction)) : nlohmann::json(nullptr);
        j["mean_dplus_over_n"] = c.mean_dplus_ratio ? nlohmann::json(*c.mean_dplus_ratio) : nlohmann::json(nullptr);
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

std::string summary_text(const std::vector<SummaryCell>& cells) {
    std::ostringstream o;
    o << std::left << std::setw(6) << "n" << std::setw(10) << "generator" << std::setw(8) << "p" << std::setw(6)
      << "rows" << std::setw(7) << "found" << std::setw(6) << "none" << std::setw(10) << "undecided"
      << std::setw(10) << "fraction" << "mean_d+/n\n";
    for (const auto& c : cells) {
        o << std::setw(6) << c.n << std::setw(10) << c.generator << std::setw(8) << opt_field(c.p) << std::setw(6)
          << c.rows << std::setw(7) << c.found << std::setw(6) << c.none << std::setw(10) << c.undecided
          << std::setw(10) << (c.fraction ? to_string(*c.fraction) : "NA")
          << (c.mean_dplus_ratio ? fmt_double(*c.mean_dplus_ratio) : "NA") << '\n';
    }
    return o.str();
}

}  // namespace hyperham
