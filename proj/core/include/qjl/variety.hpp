#pragma once

#include <string>
#include <vector>

#include "qjl/graded_ring.hpp"

namespace qjl {

struct Divisor {
    RingElem cls;    // degree-1 class
    long delta = 0;  // the pair divisor is -delta * cls
    std::string label;
};

struct VarietyModel {
    std::string name;
    GradedRing ring;
    RingElem chern; // total Chern class, degree-0 part 1
    std::vector<Divisor> divisors;

    int dim() const { return ring.dim(); }
    RingElem chern_class(int k) const { return ring.degree_part(chern, k); }
    // c_top[X]
    GQ euler_number() const { return ring.integrate(chern_class(dim())); }
    // Throws ModelError on violated invariants.
    void validate() const;
};

VarietyModel model_point();
VarietyModel model_projective(int n);
// Degree-d hypersurface in P^n.
VarietyModel model_hypersurface(int n, int d);
// Complete intersection of the given degrees in P^n.
VarietyModel model_ci(int n, const std::vector<int> &degrees);
VarietyModel model_product(const VarietyModel &a, const VarietyModel &b);
// Blow-up of P^2 at a point: basis {1; H, E; pt}, c = 1 + (3H - E) + 4 pt.
VarietyModel model_f1();

// Model description, either a bare name ("point", "P2", "K3", "F1") or JSON:
//   {"type": "point"}
//   {"type": "projective", "n": 2}
//   {"type": "hypersurface", "n": 3, "d": 4}
//   {"type": "ci", "n": 5, "degrees": [2, 2]}
//   {"type": "product", "factors": [<model>, <model>, ...]}
//   {"type": "explicit", "dim": 2,
//    "basis": [{"name": "1", "degree": 0}, {"name": "H", "degree": 1}, ...],
//    "mult": [["H", "H", {"pt": "1"}], ["H", "E", {}], ...],
//    "chern": {"1": "1", "H": "3", "E": "-1", "pt": "4"},
//    "integrate": {"pt": "1"}}
// Any type may carry "divisors": [{"class": "E" or {"H": "1", ...}, "delta": 1}].
// Products not listed in "mult" with degree sum <= dim are an error, unless one
// factor is the unit; the table is symmetrized.
VarietyModel parse_model(const std::string &text);

} // namespace qjl
