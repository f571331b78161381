#pragma once

#include <string>
#include <vector>

namespace qjl::cli {

struct IdentityCandidate {
    std::string family;
    std::string label;
    std::string lhs;
    std::string rhs;
    bool equal = false;
    std::string detail;
};

// The two quadratic identity families, each with its printed form and, for
// the second, the weight-homogeneous repair.
std::vector<IdentityCandidate> quadratic_identity_candidates(long N);

// True when every family has at least one candidate that holds.
bool families_verified(const std::vector<IdentityCandidate> &c);

std::string format_identity_report(const std::vector<IdentityCandidate> &c, long N);

} // namespace qjl::cli
