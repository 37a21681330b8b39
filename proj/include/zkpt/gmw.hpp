#ifndef ZKPT_GMW_HPP
#define ZKPT_GMW_HPP

#include <iosfwd>
#include <vector>

#include "zkpt/graph.hpp"
#include "zkpt/rng.hpp"

namespace zkpt {

// One graph-isomorphism ZK instance. The prover's secret sigma maps g1 to
// g0: apply_perm(sigma, g1) == g0.
struct GmwInstance {
    Graph g0;
    Graph g1;
    Permutation sigma;
    int n_rounds;
};

GmwInstance make_gmw_instance(int n_nodes, double edge_density, int n_rounds, Rng& rng);

struct RoundRecord {
    Graph h;
    int challenge_bit;
    Permutation xi;
    bool accepted;
};

// Step 1: random lambda with H = lambda(g0).
std::pair<Permutation, Graph> prover_commit(const GmwInstance& inst, Rng& rng);

// Step 3: xi = lambda o sigma^b.
Permutation prover_respond(const GmwInstance& inst, const Permutation& lambda, int b);

// Step 4: xi(G_b) == H, exact labeled equality.
bool verifier_check(const Graph& g0, const Graph& g1, const Graph& h, int b,
                    const Permutation& xi);

// Full honest run; every round accepts, challenge bits drawn uniformly.
std::vector<RoundRecord> run_honest(const GmwInstance& inst, Rng& rng);

struct CheatRun {
    std::vector<RoundRecord> rounds;
    bool accepted_all;
};

// Prover without sigma: guesses the challenge before committing. Succeeds
// per round iff the guess matches, so acceptance decays as 2^-n_rounds when
// g0 and g1 are not isomorphic.
CheatRun run_cheating_prover(const Graph& g0, const Graph& g1, int n_rounds, Rng& rng);

// Line-delimited transcript log: one JSON object per round.
void write_transcript(std::ostream& os, const std::vector<RoundRecord>& rounds);
std::vector<RoundRecord> read_transcript(std::istream& is);

} // namespace zkpt

#endif
