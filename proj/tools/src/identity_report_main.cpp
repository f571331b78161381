#include <fstream>
#include <iostream>

#include "qjl/errors.hpp"
#include "qjl_cli/report.hpp"

// Writes the quadratic-identity report to argv[1].
int main(int argc, char **argv)
{
    if (argc != 2) {
        std::cerr << "usage: qjl_identity_report <output file>\n";
        return 2;
    }
    try {
        const long N = 20;
        auto c = qjl::cli::quadratic_identity_candidates(N);
        std::ofstream out(argv[1]);
        out << qjl::cli::format_identity_report(c, N);
        return out ? 0 : 1;
    } catch (const qjl::Error &e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
