#include <cmath>
#include <cstdio>
#include <sstream>

#include "common.hpp"
#include "ramseylab/gnp.hpp"
#include "ramseylab/parallel.hpp"
#include "ramseylab/ramsey.hpp"
#include "ramseylab/rng.hpp"

using namespace rlcli;

namespace {

struct Cell {
    int n;
    std::string c_label;
    double p;
    int trials;
    int ramsey = 0;
    int budget = 0;
};

// Wilson 95% interval; stable for small trial counts.
std::pair<double, double> wilson(int successes, int n) {
    if (n == 0) return {0.0, 1.0};
    const double z = 1.96;
    double phat = static_cast<double>(successes) / n;
    double denom = 1.0 + z * z / n;
    double center = (phat + z * z / (2.0 * n)) / denom;
    double rad = z * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - rad), std::min(1.0, center + rad)};
}

std::string fixed6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace

int run_mc(const CommonOpts& opts, const std::string& heavy_spec, const std::string& light_spec,
           const std::vector<int>& ns, const std::vector<double>& cgrid, int trials,
           bool endpoints) {
    GraphFamily heavy = parse_family(heavy_spec);
    GraphFamily light = parse_family(light_spec);
    BalancedPair pair = pair_for(heavy, light);
    double alpha = static_cast<double>(pair.alpha.numerator()) /
                   static_cast<double>(pair.alpha.denominator());
    std::vector<GraphFamily> families = {heavy, light};

    std::vector<Cell> cells;
    for (std::size_t ni = 0; ni < ns.size(); ++ni) {
        int n = ns[ni];
        if (endpoints) cells.push_back({n, "0", 0.0, trials});
        for (double c : cgrid) {
            double p = std::min(1.0, c * std::pow(n, -1.0 / alpha));
            std::ostringstream label;
            label << c;
            cells.push_back({n, label.str(), p, trials});
        }
        if (endpoints) cells.push_back({n, "1/p=1", 1.0, trials});
    }

    // One unit per (cell, trial) with a seed derived from the unit indices;
    // the merge is index-ordered, so results never depend on scheduling.
    std::vector<std::pair<int, int>> units;  // (cell, trial) -> outcome slot
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
        for (int t = 0; t < trials; ++t) units.emplace_back(static_cast<int>(ci), t);
    std::vector<int> outcome(units.size(), 0);  // 1 ramsey, 0 not, -1 budget
    parallel_for(static_cast<int>(units.size()), opts.workers, [&](int ui) {
        auto [ci, trial] = units[ui];
        const Cell& cell = cells[ci];
        std::uint64_t seed = derive_seed(opts.seed, ci, static_cast<std::uint64_t>(trial));
        Graph g = sample_gnp(cell.n, cell.p, seed);
        RamseyResult r = ramsey_decide(g, families, opts.budget_nodes);
        outcome[ui] = r.verdict == RamseyResult::Verdict::ramsey
                          ? 1
                          : (r.verdict == RamseyResult::Verdict::budget ? -1 : 0);
    });
    for (std::size_t ui = 0; ui < units.size(); ++ui) {
        Cell& cell = cells[units[ui].first];
        if (outcome[ui] == 1) ++cell.ramsey;
        if (outcome[ui] == -1) ++cell.budget;
    }

    if (opts.format == "csv") {
        std::ostringstream csv;
        csv << "n,c,p,trials,ramsey,fraction,wilson_lo,wilson_hi,status\n";
        for (const Cell& cell : cells) {
            int decided = cell.trials - cell.budget;
            double frac = decided ? static_cast<double>(cell.ramsey) / decided : 0.0;
            auto [lo, hi] = wilson(cell.ramsey, decided);
            csv << cell.n << ',' << cell.c_label << ',' << fixed6(cell.p) << ',' << cell.trials
                << ',' << cell.ramsey << ',' << fixed6(frac) << ',' << fixed6(lo) << ','
                << fixed6(hi) << ',' << (cell.budget ? "budget" : "ok") << '\n';
        }
        write_output(opts, csv.str());
        return 0;
    }

    json out{{"schema", kSchema},
             {"heavy", heavy_spec},
             {"light", light_spec},
             {"alpha", rat_str(pair.alpha)},
             {"trials", trials},
             {"seed", opts.seed},
             {"rows", json::array()}};
    for (const Cell& cell : cells) {
        int decided = cell.trials - cell.budget;
        double frac = decided ? static_cast<double>(cell.ramsey) / decided : 0.0;
        auto [lo, hi] = wilson(cell.ramsey, decided);
        out["rows"].push_back(json{{"n", cell.n},
                                   {"c", cell.c_label},
                                   {"p", fixed6(cell.p)},
                                   {"trials", cell.trials},
                                   {"ramsey", cell.ramsey},
                                   {"fraction", fixed6(frac)},
                                   {"wilson_lo", fixed6(lo)},
                                   {"wilson_hi", fixed6(hi)},
                                   {"status", cell.budget ? "budget" : "ok"}});
    }
    write_output(opts, out.dump(2) + "\n");
    return 0;
}
