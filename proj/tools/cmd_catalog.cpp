#include <sstream>

#include "common.hpp"
#include "ramseylab/catalog.hpp"

using namespace rlcli;

int run_catalog(const CommonOpts& opts, int n, bool connected) {
    std::ostringstream out;
    for (const Graph& g : all_graphs(n)) {
        if (connected && !is_connected(g)) continue;
        out << write_graph6(g) << '\n';
    }
    write_output(opts, out.str());
    return 0;
}
