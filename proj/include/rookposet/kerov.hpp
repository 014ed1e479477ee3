#pragma once

#include "rookposet/roots.hpp"

namespace rookposet {

// K(D) = {(2i-2, 2j-1) : (i,j) in D}, an orthogonal placement in A_{2n-3}
// (ambient size 2n-2). Accepts n >= 2; throws DomainError otherwise.
RookPlacement kerov_map(const RookPlacement& d);

struct KerovImage {
  RookPlacement source;
  RookPlacement image;
};

KerovImage kerov_image(const RookPlacement& d);

// Rows even, columns odd, ambient 2n-2 for some n >= 2.
bool has_kerov_shape(const RookPlacement& image);

// (D1 <= D2) == (K(D1) <= K(D2)). Throws MismatchError on different n.
bool check_order_preservation(const RookPlacement& d1, const RookPlacement& d2);

// (T in L_R(D)) == (K(T) in L_I(K(D))), both sides computed by the move
// generators. Throws MismatchError on different n.
bool check_cover_preservation(const RookPlacement& t, const RookPlacement& d);

// (l(w_D) + |D|) / 2 for orthogonal D. Throws DomainError if D is not
// orthogonal and ParityError if the numerator is odd.
int rank_orthogonal(const RookPlacement& d);

// rank_orthogonal(K(D)) rewritten with |K(D)| = |D|.
int rank_general(const RookPlacement& d);

}  // namespace rookposet
