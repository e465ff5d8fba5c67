#include "compaug/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace compaug {

std::size_t Hop::budget() const {
  std::size_t b = 0;
  for (const auto& pts : interior) b = std::max(b, pts.size());
  return b;
}

std::size_t Chain::total_budget() const {
  std::size_t sum = 0;
  for (const auto& h : hops) sum += h.budget();
  return sum;
}

std::vector<Point2> pad_hop(const Point2& from, const std::vector<Point2>& interior,
                            const Point2& to, std::size_t count) {
  if (count < interior.size()) throw std::invalid_argument("pad_hop: count below hop size");
  const std::size_t extra = count - interior.size();
  const Point2& first = interior.empty() ? to : interior.front();
  std::vector<Point2> out;
  out.reserve(count);
  for (std::size_t t = 1; t <= extra; ++t) {
    Scalar f(mpz_class(static_cast<unsigned long>(t)), mpz_class(static_cast<unsigned long>(extra + 1)));
    f.canonicalize();
    out.push_back(from + f * (first - from));
  }
  out.insert(out.end(), interior.begin(), interior.end());
  return out;
}

}  // namespace compaug
