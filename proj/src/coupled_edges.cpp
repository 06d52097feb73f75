#include "bstar/coupled_edges.hpp"

#include "bstar/checker.hpp"

namespace bstar {

Permutation plus(const Permutation& x) {
  if (x.dimension() < 3) throw std::invalid_argument("x^+ requires n >= 3");
  return x.swapped(1, x.dimension());
}

Permutation minus(const Permutation& x) {
  if (x.dimension() < 3) throw std::invalid_argument("x^- requires n >= 3");
  return x.swapped(x.dimension() - 1, x.dimension());
}

std::vector<CoupledPair> coupled_pair_edges(const EdgeRef& e) {
  if (e.u.last() != e.v.last()) {
    throw std::invalid_argument("coupled pair-edges are defined only for edges inside one subgraph");
  }
  const int i = e.u.last();
  std::vector<CoupledPair> out;
  const std::array<Permutation, 2> xs{minus(e.u), plus(e.u)};
  const std::array<Permutation, 2> ys{minus(e.v), plus(e.v)};
  for (const auto& xp : xs) {
    for (const auto& yp : ys) {
      if (xp.last() == yp.last() && xp.last() != i && is_adjacent(xp, yp)) {
        out.push_back(CoupledPair{e.u, e.v, xp, yp});
      }
    }
  }
  return out;
}

namespace {

void check_hamiltonian_in_subgraph(const CycleWitness& h) {
  const int n = h.dimension();
  if (n < 4) throw std::invalid_argument("subgraph Hamiltonian cycles need n >= 4");
  const int k = h.vertices.front().last();
  for (const auto& x : h.vertices) {
    if (x.last() != k) throw std::invalid_argument("cycle leaves BS_n(" + std::to_string(k) + ")");
  }
  if (h.length() != factorial(n - 1)) throw std::invalid_argument("cycle is not Hamiltonian in its subgraph");
  if (const auto bad = validate(h)) throw std::invalid_argument("invalid Hamiltonian cycle: " + bad->detail);
}

// lemma23_select with H already validated and u at index `at`.
Lemma23Selection select_at(const CycleWitness& h, std::size_t at, int m) {
  const int n = h.dimension();
  const std::size_t l = h.length();
  const Permutation& u = h.vertices[at];
  const Permutation& prev = h.vertices[(at + l - 1) % l];
  const Permutation& next = h.vertices[(at + 1) % l];

  const bool prev_ok = prev[n - 1] == m;
  const bool next_ok = next[n - 1] == m;
  Permutation v;
  Permutation v_prime;
  if (prev_ok || next_ok) {
    if (prev_ok && next_ok) {
      v = rank(prev) < rank(next) ? prev : next;
    } else {
      v = prev_ok ? prev : next;
    }
    v_prime = minus(v);
  } else {
    v = u.swapped(1, n - 1);
    if (v != prev && v != next) {
      throw BridgeExhausted("u o (1,n-1) = " + format_perm(v) + " is not an H-neighbor of " + format_perm(u));
    }
    v_prime = plus(v);
  }
  CoupledPair pair{u, v, minus(u), v_prime};
  if (pair.x_prime.last() != m || pair.y_prime.last() != m || !is_adjacent(pair.x_prime, pair.y_prime)) {
    throw BridgeExhausted("selected pair (" + format_perm(pair.x_prime) + ", " + format_perm(pair.y_prime) +
                          ") is not an edge of BS_n(" + std::to_string(m) + ")");
  }
  return Lemma23Selection{v, classify_edge(u, v), pair};
}

}  // namespace

Lemma23Selection lemma23_select(const CycleWitness& hamiltonian, const Permutation& u, SubgraphId m) {
  check_hamiltonian_in_subgraph(hamiltonian);
  const int n = hamiltonian.dimension();
  if (u.dimension() != n) throw std::invalid_argument("lemma23_select: dimension mismatch");
  if (m.i == hamiltonian.vertices.front().last()) {
    throw std::invalid_argument("target subgraph must differ from the cycle's subgraph");
  }
  if (u[n - 1] != m.i) {
    throw std::invalid_argument(format_perm(u) + " does not carry symbol " + std::to_string(m.i) +
                                " at position n-1");
  }
  for (std::size_t at = 0; at < hamiltonian.length(); ++at) {
    if (hamiltonian.vertices[at] == u) return select_at(hamiltonian, at, m.i);
  }
  throw std::invalid_argument(format_perm(u) + " is not on the cycle");
}

Lemma23Selection find_bridge(const CycleWitness& hamiltonian, SubgraphId j, const EdgeSet& forbidden) {
  check_hamiltonian_in_subgraph(hamiltonian);
  const int n = hamiltonian.dimension();
  if (j.i == hamiltonian.vertices.front().last()) {
    throw std::invalid_argument("target subgraph must differ from the cycle's subgraph");
  }
  const CycleWitness h = canonical_form(hamiltonian);
  for (std::size_t at = 0; at < h.length(); ++at) {
    if (h.vertices[at][n - 1] != j.i) continue;
    Lemma23Selection s = select_at(h, at, j.i);
    if (forbidden.count(edge_key(s.e)) == 0) return s;
  }
  throw BridgeExhausted("no admissible bridge into BS_n(" + std::to_string(j.i) + ")");
}

}  // namespace bstar
