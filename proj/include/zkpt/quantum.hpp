#ifndef ZKPT_QUANTUM_HPP
#define ZKPT_QUANTUM_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>

#include "zkpt/bits.hpp"
#include "zkpt/rng.hpp"

namespace zkpt {

using cd = std::complex<double>;

constexpr double kAmpTol = 1e-12;

// Exact statevector of a 1-3 qubit register. Value type: operations return
// new states. Qubit 0 is the most significant bit of the basis index, so a
// 3-qubit basis state |q0 q1 q2> has index q0*4 + q1*2 + q2.
class PureState {
public:
    PureState(int qubits, const std::array<cd, 8>& amps);

    static PureState single(cd a0, cd a1);

    int qubit_count() const { return qubits_; }
    int dim() const { return 1 << qubits_; }
    cd amp(int i) const { return amps_[static_cast<size_t>(i)]; }
    void set_amp(int i, cd v) { amps_[static_cast<size_t>(i)] = v; }

    double norm_sq() const;

    // Index of the given qubit's bit inside a basis-state index.
    int bit_of(int index, int qubit) const {
        return (index >> (qubits_ - 1 - qubit)) & 1;
    }

    bool operator==(const PureState& other) const = default;

private:
    int qubits_;
    std::array<cd, 8> amps_;
};

// BB84 preparation record: |0>,|+> carry bit 0; |1>,|-> carry bit 1;
// basis 0 is rectangular {|0>,|1>}, basis 1 is diagonal {|+>,|->}.
struct Bb84Tag {
    int value_bit;
    int basis_bit;
    bool operator==(const Bb84Tag&) const = default;
};

// Classical bits from a Bell measurement. d0 is the phase bit (0 for the
// |00>+|11> / |01>+|10> family, 1 for the minus signs), d1 the parity bit
// (0 for |00>/|11> support, 1 for |01>/|10>).
struct BellOutcome {
    int d0;
    int d1;
    bool operator==(const BellOutcome&) const = default;
};

PureState prepare(const Bb84Tag& tag);

// Exact Born-rule probabilities for outcomes 0 and 1 of measuring `qubit`
// in the given basis (0 rect, 1 diag). Outcome bits use the Bb84Tag
// encoding.
std::pair<double, double> outcome_distribution(const PureState& state, int qubit,
                                               int basis_bit);

// Deterministic projection onto a measurement outcome. Returns the outcome
// probability and the collapsed, renormalized state; probability 0 leaves
// the state unusable (throws).
std::pair<double, PureState> project_qubit(const PureState& state, int qubit,
                                           int basis_bit, int outcome);

// Samples an outcome by the Born rule and collapses.
std::pair<int, PureState> measure(const PureState& state, int qubit, int basis_bit,
                                  Rng& rng);

// (|00>+|11>)/sqrt(2).
PureState make_bell();

// Projects qubits (a,b) onto one Bell basis vector; returns probability and
// collapsed state.
std::pair<double, PureState> project_bell(const PureState& state, int qubit_a,
                                          int qubit_b, const BellOutcome& outcome);

std::pair<BellOutcome, PureState> bell_measure(const PureState& state, int qubit_a,
                                               int qubit_b, Rng& rng);

PureState tensor(const PureState& a, const PureState& b);

// Factors one qubit out of a product state. Throws if the qubit is
// entangled with the rest (reduced state not pure within tolerance).
PureState extract_single_qubit(const PureState& state, int qubit);

// Teleports a single-qubit state through a fresh Bell pair. Returns the
// sampled classical bits and the receiver qubit BEFORE correction; applying
// Z^{d0} then X^{d1} to the receiver reproduces the input with fidelity 1.
std::pair<BellOutcome, PureState> teleport(const PureState& input, Rng& rng);

// Same, with the Bell outcome forced (each has probability 1/4).
PureState teleport_forced(const PureState& input, const BellOutcome& outcome);

// Z^{d0} then X^{d1}.
PureState apply_correction(const PureState& receiver, const BellOutcome& outcome);

PureState apply_x(const PureState& state, int qubit);
PureState apply_z(const PureState& state, int qubit);
PureState apply_h(const PureState& state, int qubit);

// Gate word U_C over a single qubit: bit 0 -> X, bit 1 -> H, the word read
// as a left-to-right matrix product. word "10" is H*X, which maps |0> to
// |->. Words must be nonempty.
PureState apply_gate_word(const BitVec& word, const PureState& state);

// Inverse of apply_gate_word (X and H are involutions, so this applies the
// word's gates in reverse order).
PureState invert_gate_word(const BitVec& word, const PureState& state);

// Canonical global-phase-free fingerprint of the four BB84 input/output
// pairs of a gate word. Two words collide (act identically on the BB84 set
// up to phase) iff their signatures compare equal.
std::string gate_word_signature(const BitVec& word);

// Phase canonicalization used by the signature: scales so the first
// amplitude above tolerance is real-positive.
PureState canonical_form(const PureState& state);

// |<a|b>|^2.
double fidelity(const PureState& a, const PureState& b);

} // namespace zkpt

#endif
