// Copyright 2026 The Unsharp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unsharp/verify.h"

#include <cmath>
#include <sstream>

#include "unsharp/scheme1.h"
#include "unsharp/scheme2.h"

namespace unsharp {

namespace {

std::string describe(const QubitState &s) {
    std::ostringstream out;
    out << "(" << s.amp_g().real() << (s.amp_g().imag() < 0 ? "" : "+") << s.amp_g().imag() << "i)|g> + ("
        << s.amp_e().real() << (s.amp_e().imag() < 0 ? "" : "+") << s.amp_e().imag() << "i)|e>";
    return out.str();
}

}  // namespace

PhysicalBranches measurement_branches(const PulseProgram &program, const QubitState &target) {
    PhysicalBranches out{};
    if (program.scheme == Scheme::kSchemeI) {
        CompositeState s = qls_map(run_scheme1(program, target));
        double readable = 0;
        for (auto o : {Outcome::kZero, Outcome::kOne}) {
            ReadoutBranch b = readout_branch(s, o);
            out.branch[index_of(o)] = PhysicalBranch{b.probability, b.target_amplitudes};
            readable += norm_sq(b.target_amplitudes);
        }
        out.leakage = std::max(0.0, s.norm_sq() - readable);
        return out;
    }
    TwoIonState s = run_scheme2(program, target);
    for (auto o : {Outcome::kZero, Outcome::kOne}) {
        int a = scheme2_aux_index(o);
        Vec2 t{s.amp[a], s.amp[2 + a]};
        out.branch[index_of(o)] = PhysicalBranch{norm_sq(t), t};
    }
    out.leakage = 0;
    return out;
}

VerificationReport verify_compilation(const PulseProgram &program, const SymmetricPovm &povm) {
    double h = std::sqrt(0.5);
    return verify_compilation(program, povm,
                              {QubitState::ground(), QubitState::excited(), QubitState(h, h), QubitState(h, kI * h)});
}

VerificationReport verify_compilation(const PulseProgram &program, const SymmetricPovm &povm,
                                      const std::vector<QubitState> &inputs) {
    VerificationReport report;
    report.zero_information = povm.delta_p == 0.0;
    for (const auto &in : inputs) {
        PhysicalBranches phys = measurement_branches(program, in);
        report.max_leakage = std::max(report.max_leakage, phys.leakage);
        for (auto o : {Outcome::kZero, Outcome::kOne}) {
            const PhysicalBranch &pb = phys.branch[index_of(o)];
            double abstract_p = outcome_probability(in, povm, o);
            double infidelity = 0;
            bool phys_possible = norm_sq(pb.target) >= kMinOutcomeProbability;
            bool abstract_possible = abstract_p >= kMinOutcomeProbability;
            if (phys_possible && abstract_possible) {
                QubitState phys_state(pb.target[0], pb.target[1]);
                QubitState abstract_state = apply_measurement(in, povm, o).state;
                infidelity = 1.0 - fidelity(phys_state, abstract_state);
            } else if (phys_possible != abstract_possible) {
                infidelity = 1.0;
            }
            double dp = std::abs(pb.probability - abstract_p);
            report.rows.push_back(VerificationRow{describe(in), index_of(o), pb.probability, abstract_p, infidelity});
            report.max_probability_deviation = std::max(report.max_probability_deviation, dp);
            report.max_infidelity = std::max(report.max_infidelity, infidelity);
        }
    }
    report.max_deviation = std::max({report.max_probability_deviation, report.max_infidelity, report.max_leakage});
    return report;
}

std::string format_report(const VerificationReport &report) {
    std::ostringstream out;
    out.precision(17);
    out << "max_deviation=" << report.max_deviation << "\n";
    out << "max_probability_deviation=" << report.max_probability_deviation << "\n";
    out << "max_infidelity=" << report.max_infidelity << "\n";
    out << "max_leakage=" << report.max_leakage << "\n";
    out << "zero_information=" << (report.zero_information ? "true" : "false") << "\n";
    for (const auto &r : report.rows) {
        out << "input " << r.input << " outcome " << r.outcome << ": p_physical=" << r.physical_probability
            << " p_abstract=" << r.abstract_probability << " infidelity=" << r.infidelity << "\n";
    }
    return out.str();
}

}  // namespace unsharp
