// Copyright 2026 The decosim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "decosim/engine.hpp"

#include <cmath>
#include <string>

#include <Eigen/SparseCore>

#include "decosim/errors.hpp"

namespace decosim {

namespace {

constexpr double kTraceDriftLimit = 1e-6;
constexpr double kEigenvalueLimit = -1e-6;

struct GridPlan {
    std::vector<long> steps;      // per segment, >= 1
    double rounding_error = 0.0;  // worst |duration - steps*dt|
};

GridPlan plan_grid(const Schedule& schedule, double dt) {
    if (dt <= 0.0) {
        throw ConfigError("evolve: dt must be positive");
    }
    GridPlan plan;
    plan.steps.reserve(schedule.size());
    for (std::size_t s = 0; s < schedule.size(); ++s) {
        const double duration = schedule[s].duration;
        if (duration <= 0.0) {
            throw ConfigError("evolve: segment " + std::to_string(s) +
                              " has non-positive duration");
        }
        const long steps = std::lround(duration / dt);
        if (steps < 1) {
            throw ConfigError("evolve: segment " + std::to_string(s) +
                              " is shorter than half a step; reduce dt");
        }
        plan.rounding_error =
            std::max(plan.rounding_error, std::abs(duration - static_cast<double>(steps) * dt));
        plan.steps.push_back(steps);
    }
    return plan;
}

void check_problem(const EvolutionProblem& p) {
    const Eigen::Index dim = p.rho0.dim();
    if (dim < 2 || p.rho0.mat.cols() != dim) {
        throw ConfigError("evolve: rho0 is not a square matrix of dimension >= 2");
    }
    if (p.sample_every < 1) {
        throw ConfigError("evolve: sample_every must be >= 1");
    }
    for (const auto& seg : p.schedule) {
        if (seg.hamiltonian.rows() != dim || seg.hamiltonian.cols() != dim) {
            throw ConfigError("evolve: Hamiltonian dimension mismatch");
        }
    }
    for (const auto& l : p.lindblad_ops) {
        if (l.rows() != dim || l.cols() != dim) {
            throw ConfigError("evolve: Lindblad operator dimension mismatch");
        }
    }
}

// tr(rho^2) for Hermitian rho equals the squared Frobenius norm
double purity_of(const ComplexMatrix& rho) { return rho.squaredNorm(); }

class SampleRecorder {
public:
    SampleRecorder(Trajectory& traj, bool check, Eigen::Index dim)
        : traj_(traj), check_(check) {
        solver_ = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(dim);
    }

    void record(double t, const ComplexMatrix& rho) {
        traj_.times.push_back(t);
        traj_.states.push_back(rho);
        // the Frobenius shortcut needs Hermiticity; exempt runs may lose it
        traj_.purity.push_back(check_ ? purity_of(rho) : (rho * rho).trace().real());
        const Complex tr = rho.trace();
        traj_.trace_real.push_back(tr.real());

        const double trace_dev = std::abs(tr - Complex(1.0, 0.0));
        traj_.max_trace_deviation = std::max(traj_.max_trace_deviation, trace_dev);
        if (!check_) return;

        const double herm_dev = hermiticity_deviation(rho);
        traj_.max_hermiticity_deviation = std::max(traj_.max_hermiticity_deviation, herm_dev);
        herm_scratch_ = 0.5 * (rho + ComplexMatrix(rho.adjoint()));
        solver_.compute(herm_scratch_, Eigen::EigenvaluesOnly);
        const double min_eig = solver_.eigenvalues().minCoeff();
        traj_.min_eigenvalue = std::min(traj_.min_eigenvalue, min_eig);

        if (trace_dev > kTraceDriftLimit || min_eig < kEigenvalueLimit) {
            throw NumericalError(
                "evolve: integration quality breached at t = " + std::to_string(t) +
                " (trace deviation " + std::to_string(trace_dev) + ", min eigenvalue " +
                std::to_string(min_eig) + "); use a smaller dt");
        }
    }

private:
    Trajectory& traj_;
    bool check_;
    ComplexMatrix herm_scratch_;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver_;
};

// Per-segment cache for the RK4 right-hand side. For a Hermitian drive the
// commutator and anticommutator fold into B = iH + sum_j L_j^dag L_j:
//   rhs = -B rho - rho B^dag + sum_j 2 L_j rho L_j^dag
// The Lindblad operators of this project are sparse (one entry per basis
// state), so the sandwich terms run over sparse factors.
struct RhsCache {
    std::vector<Eigen::SparseMatrix<Complex>> ls;
    std::vector<Eigen::SparseMatrix<Complex>> ls_dag;
    ComplexMatrix sum_ldl; // sum_j L_j^dag L_j

    ComplexMatrix b;     // iH + sum_ldl, rebuilt per segment
    ComplexMatrix b_dag;
    ComplexMatrix h;     // literal path for non-Hermitian drives
    bool hermitian = true;

    ComplexMatrix sandwich_scratch;

    explicit RhsCache(const EvolutionProblem& p) {
        const Eigen::Index dim = p.rho0.dim();
        sum_ldl = ComplexMatrix::Zero(dim, dim);
        for (const auto& l : p.lindblad_ops) {
            ls.emplace_back(l.sparseView(1.0, 1e-300));
            ls_dag.emplace_back(ComplexMatrix(l.adjoint()).sparseView(1.0, 1e-300));
            sum_ldl.noalias() += l.adjoint() * l;
        }
        sandwich_scratch.resize(dim, dim);
    }

    void set_segment(const ComplexMatrix& hamiltonian) {
        h = hamiltonian;
        hermitian = hermiticity_deviation(hamiltonian) <= 1e-12;
        b = Complex(0.0, 1.0) * hamiltonian + sum_ldl;
        b_dag = b.adjoint();
    }

    void rhs_into(ComplexMatrix& out, const ComplexMatrix& rho) {
        if (hermitian) {
            out.noalias() = -(b * rho);
            out.noalias() -= rho * b_dag;
        } else {
            // Eq. form verbatim: -i(H rho - rho H) even for H != H^dag
            out.noalias() = Complex(0.0, -1.0) * (h * rho);
            out.noalias() += Complex(0.0, 1.0) * (rho * h);
            out.noalias() -= sum_ldl * rho;
            out.noalias() -= rho * sum_ldl;
        }
        for (std::size_t j = 0; j < ls.size(); ++j) {
            sandwich_scratch.noalias() = ls[j] * rho;
            out.noalias() += 2.0 * (sandwich_scratch * ls_dag[j]);
        }
    }
};

} // namespace

std::size_t Trajectory::index_at(double t) const {
    if (times.empty()) {
        throw ConfigError("Trajectory::index_at: empty trajectory");
    }
    std::size_t best = 0;
    double best_dist = std::abs(times[0] - t);
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double d = std::abs(times[i] - t);
        if (d < best_dist) {
            best = i;
            best_dist = d;
        }
    }
    return best;
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& h,
                           const std::vector<ComplexMatrix>& ls,
                           const ComplexMatrix& rho) {
    const Eigen::Index dim = rho.rows();
    if (h.rows() != dim || h.cols() != dim || rho.cols() != dim) {
        throw ConfigError("lindblad_rhs: dimension mismatch");
    }
    const Complex i_unit(0.0, 1.0);
    ComplexMatrix out = -i_unit * (h * rho - rho * h);
    for (const auto& l : ls) {
        if (l.rows() != dim || l.cols() != dim) {
            throw ConfigError("lindblad_rhs: Lindblad operator dimension mismatch");
        }
        const ComplexMatrix ldag = l.adjoint();
        const ComplexMatrix ldl = ldag * l;
        out.noalias() += 2.0 * (l * rho * ldag);
        out.noalias() -= ldl * rho;
        out.noalias() -= rho * ldl;
    }
    return out;
}

Trajectory evolve(const EvolutionProblem& problem) {
    check_problem(problem);
    const GridPlan plan = plan_grid(problem.schedule, problem.dt);
    const Eigen::Index dim = problem.rho0.dim();
    const double dt = problem.dt;

    Trajectory traj;
    traj.n_qubits = problem.rho0.n_qubits;
    traj.invariants_checked = problem.enforce_invariants;
    traj.schedule_rounding_error = plan.rounding_error;

    SampleRecorder recorder(traj, problem.enforce_invariants, dim);
    RhsCache cache(problem);

    ComplexMatrix rho = problem.rho0.mat;
    ComplexMatrix k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), stage(dim, dim);

    long global_step = 0;
    recorder.record(0.0, rho);

    for (std::size_t s = 0; s < problem.schedule.size(); ++s) {
        cache.set_segment(problem.schedule[s].hamiltonian);
        const long steps = plan.steps[s];
        for (long k = 1; k <= steps; ++k) {
            cache.rhs_into(k1, rho);
            stage = rho + (0.5 * dt) * k1;
            cache.rhs_into(k2, stage);
            stage = rho + (0.5 * dt) * k2;
            cache.rhs_into(k3, stage);
            stage = rho + dt * k3;
            cache.rhs_into(k4, stage);
            rho.noalias() += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

            ++global_step;
            if (k % problem.sample_every == 0 || k == steps) {
                recorder.record(static_cast<double>(global_step) * dt, rho);
            }
        }
    }
    return traj;
}

Trajectory evolve_noiseless(const DensityMatrix& rho0, const Schedule& schedule,
                            double dt, int sample_every) {
    if (sample_every < 1) {
        throw ConfigError("evolve_noiseless: sample_every must be >= 1");
    }
    const GridPlan plan = plan_grid(schedule, dt);
    const Eigen::Index dim = rho0.dim();

    Trajectory traj;
    traj.n_qubits = rho0.n_qubits;
    traj.schedule_rounding_error = plan.rounding_error;

    // unitary conjugation preserves the spectrum, so the initial minimum
    // eigenvalue holds for the whole trajectory
    {
        const ComplexMatrix herm = 0.5 * (rho0.mat + ComplexMatrix(rho0.mat.adjoint()));
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
        traj.min_eigenvalue = solver.eigenvalues().minCoeff();
    }

    ComplexMatrix u = identity(dim);
    ComplexMatrix rho = rho0.mat;
    const Complex mi(0.0, -1.0);

    auto record = [&](double t) {
        rho.noalias() = u * rho0.mat * u.adjoint();
        traj.times.push_back(t);
        traj.states.push_back(rho);
        traj.purity.push_back(rho.squaredNorm());
        const Complex tr = rho.trace();
        traj.trace_real.push_back(tr.real());
        traj.max_trace_deviation =
            std::max(traj.max_trace_deviation, std::abs(tr - Complex(1.0, 0.0)));
        traj.max_hermiticity_deviation =
            std::max(traj.max_hermiticity_deviation, hermiticity_deviation(rho));
    };

    long global_step = 0;
    record(0.0);
    for (std::size_t s = 0; s < schedule.size(); ++s) {
        const ComplexMatrix& h = schedule[s].hamiltonian;
        const long steps = plan.steps[s];
        const ComplexMatrix u_block =
            expm(mi * h * (static_cast<double>(sample_every) * dt));
        long k = 0;
        while (k < steps) {
            const long m = std::min<long>(sample_every, steps - k);
            if (m == sample_every) {
                u = u_block * u;
            } else {
                u = expm(mi * h * (static_cast<double>(m) * dt)) * u;
            }
            k += m;
            global_step += m;
            record(static_cast<double>(global_step) * dt);
        }
    }
    return traj;
}

Trajectory evolve_superop(const EvolutionProblem& problem) {
    check_problem(problem);
    if (problem.rho0.n_qubits > 2) {
        throw ConfigError("evolve_superop: only registers up to 2 qubits supported");
    }
    const GridPlan plan = plan_grid(problem.schedule, problem.dt);
    const Eigen::Index dim = problem.rho0.dim();
    const Eigen::Index sdim = dim * dim;
    const Complex i_unit(0.0, 1.0);

    // dissipator part of the Liouvillian, shared by all segments
    ComplexMatrix dissipator = ComplexMatrix::Zero(sdim, sdim);
    const ComplexMatrix eye = identity(dim);
    for (const auto& l : problem.lindblad_ops) {
        const ComplexMatrix ldl = l.adjoint() * l;
        dissipator += 2.0 * kron(l.conjugate(), l);
        dissipator -= kron(eye, ldl);
        dissipator -= kron(ldl.transpose(), eye);
    }

    Trajectory traj;
    traj.n_qubits = problem.rho0.n_qubits;
    traj.invariants_checked = problem.enforce_invariants;
    traj.schedule_rounding_error = plan.rounding_error;

    SampleRecorder recorder(traj, problem.enforce_invariants, dim);

    ComplexVector v = Eigen::Map<const ComplexVector>(problem.rho0.mat.data(), sdim);
    ComplexMatrix rho = problem.rho0.mat;
    recorder.record(0.0, rho);

    long global_step = 0;
    for (std::size_t s = 0; s < problem.schedule.size(); ++s) {
        const ComplexMatrix& h = problem.schedule[s].hamiltonian;
        const ComplexMatrix liouvillian =
            -i_unit * (kron(eye, h) - kron(h.transpose(), eye)) + dissipator;
        const long steps = plan.steps[s];
        const ComplexMatrix p_block =
            expm(liouvillian * (static_cast<double>(problem.sample_every) * problem.dt));
        long k = 0;
        while (k < steps) {
            const long m = std::min<long>(problem.sample_every, steps - k);
            if (m == problem.sample_every) {
                v = p_block * v;
            } else {
                v = expm(liouvillian * (static_cast<double>(m) * problem.dt)) * v;
            }
            k += m;
            global_step += m;
            rho = Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
            recorder.record(static_cast<double>(global_step) * problem.dt, rho);
        }
    }
    return traj;
}

} // namespace decosim
