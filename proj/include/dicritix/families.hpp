#pragma once

// Generators for the named digraphs and extremal families, membership tests
// for the D_k and D'_3 classes, and the directed Hajos join.

#include <string>
#include <vector>

#include "dicritix/canonical.hpp"
#include "dicritix/digraph.hpp"

namespace dicritix {

Digraph gen_complete(int n);    // K_n with all digons
Digraph gen_dircycle(int n);    // directed cycle, n >= 2
Digraph gen_symcycle(int n);    // symmetric cycle, n >= 2 (n = 2 is the digon)
Digraph gen_dirpath(int n);     // directed path, n >= 1
Digraph gen_sympath(int n);     // symmetric path, n >= 1

// The k-dicritical digraph of order n from the order construction:
// K_2(K_{k-2}, C_{n+2-k}) for n > k, and K_k itself for n = k.
Digraph gen_order_construction(int k, int n);

// D_k member: C_5(K_{k-2}, K_1, K_m, K_{k-1-m}, K_1), k >= 4, 1 <= m <= k-2.
// All members have order 2k-1.
Digraph gen_Dk(int k, int m);
bool is_in_Dk(const Digraph& G, int k);

// Extended wheel: hub x joined to the directed triangle a->b->c->a by three
// symmetric paths of lengths (la, lb, lc), all of the same parity, sharing
// only x.  At most one length may be 0 (then x coincides with that corner
// and the other two lengths must be even).  `reversed` flips the triangle.
Digraph gen_extended_wheel(int la, int lb, int lc, bool reversed = false);

// The five-vertex D'_3 seed digraph with each of its three digons replaced
// by an odd symmetric path (length 1 keeps the digon).  Digon order:
// x-z, z-y, u-w.
Digraph gen_d3prime_fig3(int lxz, int lzy, int luw);

// Membership in D'_3 = extended wheels + fig3 variants, decided by
// generating every member of the same order and comparing canonical forms.
bool is_in_D3prime(const Digraph& G);
std::vector<CanonicalForm> d3prime_members_of_order(int n);

// F_k member: C_5(K_1, K_{a1}, K_{a2}, K_{b2}, K_{b1}) with
// a1+a2 = b1+b2 = a2+b2 = k-1, all parts >= 1.
Digraph gen_Fk(int k, int a1, int a2, int b1, int b2);

// Directed Hajos join of (G1, a1 = (u, v)) and (G2, a2 = (x, y)): delete
// both arcs, identify u with y, add the arc (x, v).  The output has
// |V1|+|V2|-1 vertices and |A1|+|A2|-1 arcs; a violation of those counts is
// reported as an error.
Digraph hajos_join(const Digraph& G1, std::pair<int, int> a1, const Digraph& G2, std::pair<int, int> a2);

// Canonical text syntax for generator specs, e.g. "complete(4)",
// "cycle(5)", "order(k=4,n=6)", "Dk(k=4,n=1)", "wheel(0,2,2)",
// "fig3(1,1,3)", "Fk(k=4,a1=1,a2=2,b1=2,b2=1)",
// "join(complete(1),cycle(3))", "hajos(complete(3),0,1,complete(3),0,1)".
Digraph gen_from_spec(const std::string& spec);

}  // namespace dicritix
