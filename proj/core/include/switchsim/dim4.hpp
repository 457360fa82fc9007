#pragma once

#include <string>

#include "switchsim/states.hpp"

namespace switchsim {

// Two-qubit Pauli channel constructors over the sixteen-element tensor basis.

PauliChannel make_depolarizing_d4(double s);        // s in [0, 16/15]
PauliChannel make_delta(double p, double q);        // D_p (x) D_q, p,q in [0, 4/3]
PauliChannel make_W(double p, double q);            // p,q >= 0, p+q <= 1

enum class Omega { omega1, omega2, omega3 };

// The named two-qubit ensembles: Omega1 = {|00>, |11>},
// Omega2 = {Phi+, Phi-}, Omega3 = {|00>, Phi-}; equal priors throughout.
Ensemble make_ensemble(Omega tag);
Ensemble make_ensemble(const std::string& tag);  // "omega1" | "omega2" | "omega3"

}  // namespace switchsim
