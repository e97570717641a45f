#pragma once

#include <iosfwd>
#include <string>

#include "qse/fock.hpp"
#include "qse/generator.hpp"
#include "qse/interpolation.hpp"

namespace qse {

// 17-significant-digit decimal rendering used by every file format.
std::string format_real(double x);

// Target document {"M": int, "coeffs": [real, ...]}.
TargetState parse_target_json(const std::string& text);
TargetState read_target_file(const std::string& path);
void write_target_json(const TargetState& t, std::ostream& out);

// Matrix CSV: header i,j,re,im, one row per nonzero entry.
void write_matrix_csv(const ComplexMatrix& m, std::ostream& out);
ComplexMatrix read_matrix_csv(std::istream& in, int dim);

// State CSV: header n,re,im, one row per level.
void write_state_csv(const StateVector& s, std::ostream& out);
StateVector read_state_csv(std::istream& in);

// Normal form CSV: header p,q,coefficient, ordered by (p, q).
void write_normal_form_csv(const NormalForm& nf, std::ostream& out);

// Fidelity trace CSV: header t,fidelity.
void write_fidelity_csv(const FidelityTrace& trace, std::ostream& out);

// Interpolation coefficients as exact fractions: header l,numerator,denominator.
void write_coeffs_csv(const InterpolationPolynomial& p, std::ostream& out);

}  // namespace qse
