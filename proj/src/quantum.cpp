#include "zkpt/quantum.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace zkpt {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

using Mat2 = std::array<cd, 4>; // row-major

constexpr Mat2 kGateX{cd(0), cd(1), cd(1), cd(0)};
constexpr Mat2 kGateZ{cd(1), cd(0), cd(0), cd(-1)};
const Mat2 kGateH{cd(kInvSqrt2), cd(kInvSqrt2), cd(kInvSqrt2), cd(-kInvSqrt2)};

PureState apply_1q(const PureState& state, int qubit, const Mat2& m) {
    if (qubit < 0 || qubit >= state.qubit_count())
        throw std::out_of_range("qubit index out of range");
    std::array<cd, 8> out{};
    int stride = 1 << (state.qubit_count() - 1 - qubit);
    for (int i = 0; i < state.dim(); ++i) {
        if (i & stride) continue;
        cd a0 = state.amp(i);
        cd a1 = state.amp(i | stride);
        out[static_cast<size_t>(i)] = m[0] * a0 + m[1] * a1;
        out[static_cast<size_t>(i | stride)] = m[2] * a0 + m[3] * a1;
    }
    return PureState(state.qubit_count(), out);
}

void check_word(const BitVec& word) {
    if (word.empty()) throw std::invalid_argument("gate word must be nonempty");
}

// Amplitudes of the four Bell basis vectors indexed by (d0, d1).
void bell_vector(const BellOutcome& o, cd& c00, cd& c01, cd& c10, cd& c11) {
    double sign = o.d0 ? -1.0 : 1.0;
    if (o.d1 == 0) {
        c00 = kInvSqrt2;
        c11 = sign * kInvSqrt2;
        c01 = c10 = 0.0;
    } else {
        c01 = kInvSqrt2;
        c10 = sign * kInvSqrt2;
        c00 = c11 = 0.0;
    }
}

} // namespace

PureState::PureState(int qubits, const std::array<cd, 8>& amps)
    : qubits_(qubits), amps_(amps) {
    if (qubits < 1 || qubits > 3)
        throw std::invalid_argument("register must hold 1-3 qubits");
    for (int i = dim(); i < 8; ++i) amps_[static_cast<size_t>(i)] = 0.0;
}

PureState PureState::single(cd a0, cd a1) {
    return PureState(1, {a0, a1});
}

double PureState::norm_sq() const {
    double s = 0.0;
    for (int i = 0; i < dim(); ++i) s += std::norm(amps_[static_cast<size_t>(i)]);
    return s;
}

PureState prepare(const Bb84Tag& tag) {
    if (tag.basis_bit == 0)
        return tag.value_bit ? PureState::single(0, 1) : PureState::single(1, 0);
    return tag.value_bit ? PureState::single(kInvSqrt2, -kInvSqrt2)
                         : PureState::single(kInvSqrt2, kInvSqrt2);
}

std::pair<double, double> outcome_distribution(const PureState& state, int qubit,
                                               int basis_bit) {
    const PureState& s = basis_bit ? apply_h(state, qubit) : state;
    double p0 = 0.0;
    for (int i = 0; i < s.dim(); ++i)
        if (s.bit_of(i, qubit) == 0) p0 += std::norm(s.amp(i));
    double p1 = s.norm_sq() - p0;
    return {p0, p1 < 0 ? 0.0 : p1};
}

std::pair<double, PureState> project_qubit(const PureState& state, int qubit,
                                           int basis_bit, int outcome) {
    PureState s = basis_bit ? apply_h(state, qubit) : state;
    double p = 0.0;
    for (int i = 0; i < s.dim(); ++i)
        if (s.bit_of(i, qubit) == outcome) p += std::norm(s.amp(i));
    if (p <= 0.0) throw std::domain_error("projection onto zero-probability outcome");
    double scale = 1.0 / std::sqrt(p);
    for (int i = 0; i < s.dim(); ++i)
        s.set_amp(i, s.bit_of(i, qubit) == outcome ? s.amp(i) * scale : cd(0));
    if (basis_bit) s = apply_h(s, qubit);
    return {p, s};
}

std::pair<int, PureState> measure(const PureState& state, int qubit, int basis_bit,
                                  Rng& rng) {
    auto [p0, p1] = outcome_distribution(state, qubit, basis_bit);
    int outcome = rng.unit() < p0 ? 0 : 1;
    auto [p, post] = project_qubit(state, qubit, basis_bit, outcome);
    (void)p;
    return {outcome, post};
}

PureState make_bell() {
    return PureState(2, {kInvSqrt2, 0, 0, kInvSqrt2});
}

std::pair<double, PureState> project_bell(const PureState& state, int qubit_a,
                                          int qubit_b, const BellOutcome& outcome) {
    int q = state.qubit_count();
    if (q < 2) throw std::invalid_argument("Bell projection needs >= 2 qubits");
    if (qubit_a == qubit_b) throw std::invalid_argument("Bell qubits must differ");
    if (qubit_a < 0 || qubit_a >= q || qubit_b < 0 || qubit_b >= q)
        throw std::out_of_range("qubit index out of range");

    cd b00, b01, b10, b11;
    bell_vector(outcome, b00, b01, b10, b11);
    auto coeff = [&](int x, int y) {
        return x == 0 ? (y == 0 ? b00 : b01) : (y == 0 ? b10 : b11);
    };

    int sa = 1 << (q - 1 - qubit_a);
    int sb = 1 << (q - 1 - qubit_b);

    // Overlap of the pair (a,b) with the Bell vector, per rest-index.
    std::array<cd, 8> out{};
    double p = 0.0;
    for (int base = 0; base < state.dim(); ++base) {
        if (base & (sa | sb)) continue; // enumerate rest configurations once
        cd f = 0.0;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                f += std::conj(coeff(x, y)) * state.amp(base | (x ? sa : 0) | (y ? sb : 0));
        p += std::norm(f);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                out[static_cast<size_t>(base | (x ? sa : 0) | (y ? sb : 0))] =
                    coeff(x, y) * f;
    }
    if (p <= 0.0) throw std::domain_error("projection onto zero-probability outcome");
    double scale = 1.0 / std::sqrt(p);
    for (auto& a : out) a *= scale;
    return {p, PureState(q, out)};
}

std::pair<BellOutcome, PureState> bell_measure(const PureState& state, int qubit_a,
                                               int qubit_b, Rng& rng) {
    const BellOutcome outcomes[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    double probs[4];
    double total = 0.0;
    for (int i = 0; i < 4; ++i) {
        cd b00, b01, b10, b11;
        bell_vector(outcomes[i], b00, b01, b10, b11);
        // Probability only; reuse the projection for the chosen branch.
        int q = state.qubit_count();
        int sa = 1 << (q - 1 - qubit_a);
        int sb = 1 << (q - 1 - qubit_b);
        if (qubit_a == qubit_b) throw std::invalid_argument("Bell qubits must differ");
        double p = 0.0;
        for (int base = 0; base < state.dim(); ++base) {
            if (base & (sa | sb)) continue;
            cd f = std::conj(b00) * state.amp(base) +
                   std::conj(b01) * state.amp(base | sb) +
                   std::conj(b10) * state.amp(base | sa) +
                   std::conj(b11) * state.amp(base | sa | sb);
            p += std::norm(f);
        }
        probs[i] = p;
        total += p;
    }
    double r = rng.unit() * total;
    int pick = 3;
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
        acc += probs[i];
        if (r < acc) {
            pick = i;
            break;
        }
    }
    auto [p, post] = project_bell(state, qubit_a, qubit_b, outcomes[pick]);
    (void)p;
    return {outcomes[pick], post};
}

PureState tensor(const PureState& a, const PureState& b) {
    int q = a.qubit_count() + b.qubit_count();
    if (q > 3) throw std::invalid_argument("register must hold 1-3 qubits");
    std::array<cd, 8> out{};
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            out[static_cast<size_t>(i * b.dim() + j)] = a.amp(i) * b.amp(j);
    return PureState(q, out);
}

PureState extract_single_qubit(const PureState& state, int qubit) {
    if (qubit < 0 || qubit >= state.qubit_count())
        throw std::out_of_range("qubit index out of range");
    if (state.qubit_count() == 1) return state;
    // 2x2 reduced density matrix of `qubit`.
    int stride = 1 << (state.qubit_count() - 1 - qubit);
    double r00 = 0.0, r11 = 0.0;
    cd r01 = 0.0;
    for (int i = 0; i < state.dim(); ++i) {
        if (i & stride) continue;
        cd a0 = state.amp(i);
        cd a1 = state.amp(i | stride);
        r00 += std::norm(a0);
        r11 += std::norm(a1);
        r01 += a0 * std::conj(a1);
    }
    double purity = r00 * r00 + r11 * r11 + 2.0 * std::norm(r01);
    if (std::abs(purity - 1.0) > 1e-9)
        throw std::logic_error("qubit is entangled with the rest of the register");
    if (r00 > r11) {
        double a0 = std::sqrt(r00);
        return PureState::single(a0, std::conj(r01) / a0);
    }
    double a1 = std::sqrt(r11);
    return PureState::single(r01 / a1, a1);
}

std::pair<BellOutcome, PureState> teleport(const PureState& input, Rng& rng) {
    if (input.qubit_count() != 1)
        throw std::invalid_argument("teleport takes a single-qubit state");
    PureState full = tensor(input, make_bell());
    auto [outcome, post] = bell_measure(full, 0, 1, rng);
    return {outcome, extract_single_qubit(post, 2)};
}

PureState teleport_forced(const PureState& input, const BellOutcome& outcome) {
    if (input.qubit_count() != 1)
        throw std::invalid_argument("teleport takes a single-qubit state");
    PureState full = tensor(input, make_bell());
    auto [p, post] = project_bell(full, 0, 1, outcome);
    (void)p;
    return extract_single_qubit(post, 2);
}

PureState apply_correction(const PureState& receiver, const BellOutcome& outcome) {
    PureState s = receiver;
    if (outcome.d0) s = apply_z(s, 0);
    if (outcome.d1) s = apply_x(s, 0);
    return s;
}

PureState apply_x(const PureState& state, int qubit) { return apply_1q(state, qubit, kGateX); }
PureState apply_z(const PureState& state, int qubit) { return apply_1q(state, qubit, kGateZ); }
PureState apply_h(const PureState& state, int qubit) { return apply_1q(state, qubit, kGateH); }

PureState apply_gate_word(const BitVec& word, const PureState& state) {
    check_word(word);
    PureState s = state;
    // Rightmost factor of the product acts first.
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        s = *it ? apply_h(s, 0) : apply_x(s, 0);
    return s;
}

PureState invert_gate_word(const BitVec& word, const PureState& state) {
    check_word(word);
    PureState s = state;
    for (uint8_t b : word) s = b ? apply_h(s, 0) : apply_x(s, 0);
    return s;
}

PureState canonical_form(const PureState& state) {
    constexpr double tol = 1e-9;
    for (int i = 0; i < state.dim(); ++i) {
        cd a = state.amp(i);
        if (std::abs(a) > tol) {
            cd phase = std::conj(a) / std::abs(a);
            PureState out = state;
            for (int j = 0; j < state.dim(); ++j) out.set_amp(j, state.amp(j) * phase);
            return out;
        }
    }
    return state;
}

std::string gate_word_signature(const BitVec& word) {
    check_word(word);
    const Bb84Tag inputs[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::string sig;
    for (const auto& tag : inputs) {
        PureState out = canonical_form(apply_gate_word(word, prepare(tag)));
        for (int i = 0; i < 2; ++i) {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%lld,%lld;",
                          static_cast<long long>(std::llround(out.amp(i).real() * 1e9)),
                          static_cast<long long>(std::llround(out.amp(i).imag() * 1e9)));
            sig += buf;
        }
        sig += '|';
    }
    return sig;
}

double fidelity(const PureState& a, const PureState& b) {
    if (a.qubit_count() != b.qubit_count())
        throw std::invalid_argument("fidelity of mismatched registers");
    cd ip = 0.0;
    for (int i = 0; i < a.dim(); ++i) ip += std::conj(a.amp(i)) * b.amp(i);
    return std::norm(ip);
}

} // namespace zkpt
