#pragma once

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

namespace qclone::optical {

// Occupation numbers over polarization x spatial modes. Mode (spatial s,
// polarization p) sits at index 2s + p with p = 0 for V and p = 1 for H.
using Occupation = std::vector<std::uint8_t>;

struct OpticalState {
    int n_spatial = 0;
    int cutoff = 12;  // bound on any single occupation number
    std::map<Occupation, std::complex<double>> amp;

    double norm2() const;
    void normalize();
    void prune(double eps = 1e-15);
};

// Polarization-preserving beam splitter acting on a spatial pair. Creation
// operators transform as a -> sqrt(T) a + sqrt(1-T) b and
// b -> sqrt(T) b - sqrt(1-T) a, identically for V and H.
struct BeamSplitterSpec {
    int mode_a = 0;
    int mode_b = 1;
    double transmittivity = 1.0;
};

// Post-selected output of stimulated emission seeded with N vertically
// polarized photons, conditioned on M photons in the signal mode. Spatial
// mode 0 is the signal, mode 1 the idler; the idler carries the M-N
// anti-clones.
OpticalState pdc_output(int N, int M);

OpticalState with_spatial_modes(const OpticalState& state, int n_spatial);

OpticalState apply_beam_splitter(const OpticalState& state, const BeamSplitterSpec& bs);

// Same SU(2) polarization rotation applied to every spatial mode.
OpticalState rotate_polarization(const OpticalState& state, const Eigen::Matrix2cd& u);

// Condition on a per-spatial photon count (V+H summed). Returns the
// renormalized conditional state and the selection probability; a
// zero-probability pattern yields an empty state with probability 0.
std::pair<OpticalState, double> post_select(const OpticalState& state,
                                            const std::map<int, int>& pattern);

// One-qubit reduced density matrix of the symmetric polarization state
// carried by a spatial mode (basis V, H).
Eigen::Matrix2cd reduced_qubit(const OpticalState& state, int spatial);

// Fidelity of one clone in the given spatial mode against |V>. Every support
// term must hold at least one photon there.
double single_clone_fidelity(const OpticalState& state, int spatial);

struct SchemeResult {
    double F_A = 0.0;
    double F_B = 0.0;
    double success_probability = 0.0;
    bool ok = false;
};

// Stimulated-emission cloning pipeline: pdc_output(N, M_A+M_B), signal split
// into an A mode and a B mode, B mode combined with the idler at
// transmittivity T, post-selection on (M_A, M_B) photons. clone_split_T < 0
// picks the success-probability-maximizing split M_A/M; fidelities do not
// depend on this knob.
SchemeResult two_way_scheme(int N, int M_A, int M_B, double T, double clone_split_T = -1.0);

// Closed forms for the fidelities of the scheme above. Supported problems:
// (1,1,2), (1,2,1), (2,2,1), (2,1,2), (N,N,1) and (N,1,N); the swapped
// variants evaluate the base formula at 1/T.
std::pair<double, double> optical_formula(int N, int M_A, int M_B, double T);

struct ThreeWayResult {
    double F_A = 0.0, F_B = 0.0, F_C = 0.0;  // sorted descending
    double success_probability = 0.0;
    bool ok = false;
};

// 1 -> 1+1+1 pipeline: one clone split off, the remaining pair combined with
// the idler at T1, then split, with the third clone combined with the idler
// remnant at T2; post-selection on one photon per clone mode.
ThreeWayResult three_way_scheme(double T1, double T2);

}  // namespace qclone::optical
