#ifndef OCA_CONSTRUCTIONS_HPP
#define OCA_CONSTRUCTIONS_HPP

#include <vector>

#include "oca/gf.hpp"
#include "oca/ordered_array.hpp"

namespace oca {

// Every construction certifies its own output with verify_oca and throws
// std::runtime_error if the certificate fails.

// OOA(v^t; t, m, t, v) from Reed-Solomon/Hermite evaluation: rows indexed
// by polynomials of degree < t over GF(v); block i evaluates the Taylor
// coefficients of f at the i-th field element (top = order 0); when
// m = v+1 the last block carries the plain coefficients, leading one on
// top. Requires 2 <= m <= v+1.
OrderedArray ooa_rs(const FieldSpec& field, int t, int m);

// OCA(N;t,m,t-1,v) -> OCA(N;t,m,t,v): each block gains a new bottom
// column equal to the top column of the cyclically next block.
OrderedArray chain_extend(const OrderedArray& a);

// Delete the bottom column of every block (s+1 -> s).
OrderedArray chain_project(const OrderedArray& a);

// Pad every block with zero columns at the bottom up to chain length
// new_s. Valid when the claimed strength does not exceed the old chain
// length, so the padding is never selected by a size-t anti-ideal.
OrderedArray chain_pad(const OrderedArray& a, int new_s);

// Delete the last block (m+1 -> m).
OrderedArray block_project(const OrderedArray& a);

// CA(N;2,m,v) -> OCA(N;2,m,2,v): block k pairs CA column k (bottom) with
// CA column (k+1) mod m (top).
OrderedArray strength2_from_ca(const OrderedArray& ca);

// Binary strength-2 CA with the minimal N satisfying
// m <= C(N-1, floor(N/2)-1); columns are incidence vectors of distinct
// floor(N/2)-subsets of the rows, each containing row 1.
OrderedArray kleitman_spencer_ca(int m);

// CA(v^2;2,m,v) for prime power v, m <= v+1, from degree-<2 polynomial
// evaluation.
OrderedArray bush_ca(const FieldSpec& field, int m);

// Alphabet reduction v+1 -> v at the cost of two rows. Rows 0 and 1 are
// the designated pair; per-column symbol permutations send row 0 to the
// top symbol (and row 1 to the next one where they differ) before the
// two symbols are merged.
OrderedArray fuse(const OrderedArray& a);

// Theorem-style alphabet augmentation for s = 3, t = 3:
// ingredients a = OCA(M;3,m,2,v-1), b = CA(M';2,m-1,v-1),
// c = CA(M'';2,m,v-1) over symbols 0..v-2 produce a verified
// OCA(M + m*M' + M'' + m(v-1)^2 + 1; 3, m, 3, v).
OrderedArray augment_alphabet_s3(const OrderedArray& a, const OrderedArray& b,
                                 const OrderedArray& c);

// Derivation on the number of blocks: filter rows on the least-frequent
// symbol of the last column, drop the last block; strength drops by one.
// The chain is projected down to the new strength when it exceeds it.
OrderedArray derive_block(const OrderedArray& a);

// Derivation on the size of the blocks: filter rows on the last column,
// delete the bottom column of blocks 0..m-2 and the top column of the
// last block.
OrderedArray derive_depth(const OrderedArray& a);

// The two-block gadget array T^j over [2.s]: one row per j-tuple whose
// leading half is not the reverse of its trailing half, mirrored into the
// tops of the two blocks, unset positions wildcarded.
OrderedArray build_tj(int v, int s, int j);

// Block augmentation: duplicates the last block of a and appends the
// cartesian products of the strength-(t-j) ingredients with T^j for
// j = 2..min(2s,t). ingredients[j-2] must be an OCA(N_j; t-j, m-1, s, v).
OrderedArray augment_block(const OrderedArray& a,
                           const std::vector<OrderedArray>& ingredients);

// Closed-form value of the prime-power block-augmentation bound
// OCAN(t,v+2,t,v) <= v^t + sum_{j=2}^t v^{t-j} (v^j - v^{ceil(j/2)}).
long long corollary2_bound(int t, int v);

// Strength-1 OCA: the v constant rows.
OrderedArray constant_rows_oca(int v, int m, int s);

// Materializes the corollary2_bound value: augment_block applied to
// ooa_rs(v,t,v+1) with the standard prime-power ingredients.
OrderedArray corollary2_array(int t, int v);

}  // namespace oca

#endif
