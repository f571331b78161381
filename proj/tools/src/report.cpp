#include "qjl_cli/report.hpp"

#include <map>
#include <sstream>

#include "qjl/quasi_jacobi.hpp"
#include "qjl_cli/expr.hpp"

namespace qjl::cli {

std::vector<IdentityCandidate> quadratic_identity_candidates(long N)
{
    std::vector<IdentityCandidate> out = {
        {"E4", "printed", "E4", "P^2 - 5*e4", false, {}},
        {"E3^2", "printed", "E3^2", "P^2 - 15*e4*P - 35*e4", false, {}},
        {"E3^2", "weight 6", "E3^2", "P^3 - 15*e4*P - 35*e6", false, {}},
    };
    for (auto &c : out) {
        IdentityReport r = identity_check(parse_poly(c.lhs), parse_poly(c.rhs), N);
        c.equal = r.equal;
        c.detail = r.str();
    }
    return out;
}

bool families_verified(const std::vector<IdentityCandidate> &c)
{
    std::map<std::string, bool> ok;
    for (const auto &x : c) {
        ok[x.family] = ok[x.family] || x.equal;
    }
    for (const auto &[f, v] : ok) {
        if (!v) {
            return false;
        }
    }
    return !ok.empty();
}

std::string format_identity_report(const std::vector<IdentityCandidate> &c, long N)
{
    std::ostringstream os;
    os << "Quadratic identities, exact to q^" << N << ", P = E2 - e2\n\n";
    for (const auto &x : c) {
        os << "[" << x.family << ", " << x.label << "] " << x.lhs << " = " << x.rhs << "\n"
           << "  " << (x.equal ? "holds" : "fails") << ": " << x.detail << "\n";
    }
    os << "\nevery family verified: " << (families_verified(c) ? "yes" : "no") << "\n";
    return os.str();
}

} // namespace qjl::cli
