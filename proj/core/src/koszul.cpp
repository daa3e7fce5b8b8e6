#include "curvedcs/koszul.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccs {

int koszul_sign(std::span<const int> shifted_degrees, std::span<const int> perm) {
  const size_t n = perm.size();
  if (shifted_degrees.size() != n)
    throw std::invalid_argument("koszul_sign: degree/permutation length mismatch");
  // Bubble the image sequence back to the identity; each adjacent swap of two
  // odd-degree letters flips the sign. Adjacent transpositions are
  // self-inverse, so the accumulated sign equals eps(tau).
  std::vector<int> arr(perm.begin(), perm.end());
  int sign = 1;
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = 0; j + 1 < n - i; ++j)
      if (arr[j] > arr[j + 1]) {
        if ((shifted_degrees[arr[j]] & 1) && (shifted_degrees[arr[j + 1]] & 1))
          sign = -sign;
        std::swap(arr[j], arr[j + 1]);
      }
  return sign;
}

std::vector<Perm> unshuffles(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("unshuffles: negative block size");
  const int n = i + j;
  std::vector<Perm> out;
  std::vector<int> pick(i);
  std::iota(pick.begin(), pick.end(), 0);
  auto emit = [&]() {
    Perm p;
    p.reserve(n);
    std::vector<char> used(n, 0);
    for (int v : pick) {
      p.push_back(v);
      used[v] = 1;
    }
    for (int v = 0; v < n; ++v)
      if (!used[v]) p.push_back(v);
    out.push_back(std::move(p));
  };
  if (i == 0) {
    emit();
    return out;
  }
  while (true) {
    emit();
    int t = i - 1;
    while (t >= 0 && pick[t] == n - i + t) --t;
    if (t < 0) break;
    ++pick[t];
    for (int s = t + 1; s < i; ++s) pick[s] = pick[s - 1] + 1;
  }
  return out;
}

std::vector<Perm> all_permutations(int n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t s = 0; s < b.size(); ++s) r[s] = a[b[s]];
  return r;
}

}  // namespace ccs
