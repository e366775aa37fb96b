#pragma once

#include <vector>

#include "ktg/qlaurent.hpp"

namespace ktg {

// Balanced q-integer [n] = (q^n - q^-n)/(q - q^-1); [-n] = -[n], [0] = 0.
QLaurent qint(int n);

// [n]! = [1][2]...[n], [0]! = 1. Pre: n >= 0.
QLaurent qfact(int n);

// [n choose k] = [n]!/([k]![n-k]!); zero outside 0 <= k <= n.
QLaurent qbinom(int n, int k);

// [sum parts]! / prod [part]!; zero if any part is negative.
QLaurent qmultinom(const std::vector<int>& parts);

}  // namespace ktg
