#include "rookposet/kerov.hpp"

#include <algorithm>

#include "rookposet/cover_moves.hpp"
#include "rookposet/errors.hpp"
#include "rookposet/order.hpp"

namespace rookposet {

namespace {

void require_same_n(const RookPlacement& a, const RookPlacement& b) {
  if (a.n() != b.n()) {
    throw MismatchError("placements live in n=" + std::to_string(a.n()) + " and n=" +
                        std::to_string(b.n()));
  }
}

int halve(int numerator, const RookPlacement& d) {
  if (numerator % 2 != 0) {
    throw ParityError("rank numerator " + std::to_string(numerator) + " is odd for " +
                      format_placement(d));
  }
  return numerator / 2;
}

}  // namespace

RookPlacement kerov_map(const RookPlacement& d) {
  if (d.n() < 2) throw DomainError("Kerov map needs n >= 2, got n=" + std::to_string(d.n()));
  const int image_n = 2 * d.n() - 2;
  if (image_n > kMaxN) {
    throw RangeError("Kerov image of n=" + std::to_string(d.n()) + " exceeds n=" +
                     std::to_string(kMaxN));
  }
  std::vector<Root> roots;
  roots.reserve(d.size());
  for (const Root& r : d.roots()) roots.push_back(Root{2 * r.row - 2, 2 * r.col - 1});
  return validate_placement(std::move(roots), image_n);
}

KerovImage kerov_image(const RookPlacement& d) { return KerovImage{d, kerov_map(d)}; }

bool has_kerov_shape(const RookPlacement& image) {
  if (image.n() < 2 || image.n() % 2 != 0) return false;
  return std::all_of(image.roots().begin(), image.roots().end(),
                     [](const Root& r) { return r.row % 2 == 0 && r.col % 2 == 1; });
}

bool check_order_preservation(const RookPlacement& d1, const RookPlacement& d2) {
  require_same_n(d1, d2);
  return leq_placement(d1, d2) == leq_placement(kerov_map(d1), kerov_map(d2));
}

bool check_cover_preservation(const RookPlacement& t, const RookPlacement& d) {
  require_same_n(t, d);
  const auto general = predecessors_general(d);
  const bool lhs = std::binary_search(general.begin(), general.end(), t);
  const auto orthogonal = predecessors_orthogonal(kerov_map(d));
  const bool rhs = std::binary_search(orthogonal.begin(), orthogonal.end(), kerov_map(t));
  return lhs == rhs;
}

int rank_orthogonal(const RookPlacement& d) {
  const int length = inversion_length(involution_of(d));
  return halve(length + static_cast<int>(d.size()), d);
}

int rank_general(const RookPlacement& d) {
  const RookPlacement image = kerov_map(d);
  const int length = inversion_length(involution_of(image));
  return halve(length + static_cast<int>(d.size()), d);
}

}  // namespace rookposet
