#pragma once

#include <map>
#include <string>
#include <vector>

#include "msdc/dense_matrix.hpp"

// Published closed-form matrices for n = 1..4, transcribed entry by entry as
// coef * h^exp. Used as frozen expected values by the self-test and the
// acceptance suite; never derived from the builders.
namespace msdc::golden {

struct Entry {
  double coef;
  int exp;
};

using Table = std::vector<std::vector<Entry>>;

// clang-format off
inline const std::map<int, std::map<std::string, Table>>& tables() {
  static const std::map<int, std::map<std::string, Table>> kTables = {
    {1, {
      {"B",    {{{1, 0}}}},
      {"A",    {{{1, 1}}}},
      {"Ainv", {{{1, -1}}}},
      {"L",    {{{1, 0}}}},
      {"U",    {{{1, 1}}}},
      {"Linv", {{{1, 0}}}},
      {"Uinv", {{{1, -1}}}},
    }},
    {2, {
      {"B",    {{{0, 0}, {-6, 0}},
                {{2, 0}, {6, 1}}}},
      {"A",    {{{1, 2}, {1, 3}},
                {{2, 1}, {3, 2}}}},
      {"Ainv", {{{3, -2}, {-1, -1}},
                {{-2, -3}, {1, -2}}}},
      {"L",    {{{1, 0}, {0, 0}},
                {{2, -1}, {1, 0}}}},
      {"U",    {{{1, 2}, {1, 3}},
                {{0, 0}, {1, 2}}}},
      {"Linv", {{{1, 0}, {0, 0}},
                {{-2, -1}, {1, 0}}}},
      {"Uinv", {{{1, -2}, {-1, -1}},
                {{0, 0}, {1, -2}}}},
    }},
    {3, {
      {"B",    {{{0, 0}, {0, 0}, {120, 0}},
                {{0, 0}, {-24, 0}, {-120, 1}},
                {{6, 0}, {24, 1}, {60, 2}}}},
      {"A",    {{{1, 3}, {1, 4}, {1, 5}},
                {{3, 2}, {4, 3}, {5, 4}},
                {{6, 1}, {12, 2}, {20, 3}}}},
      {"Ainv", {{{10, -3}, {-4, -2}, {1.0 / 2, -1}},
                {{-15, -4}, {7, -3}, {-1, -2}},
                {{6, -5}, {-3, -4}, {1.0 / 2, -3}}}},
      {"L",    {{{1, 0}, {0, 0}, {0, 0}},
                {{3, -1}, {1, 0}, {0, 0}},
                {{6, -2}, {6, -1}, {1, 0}}}},
      {"U",    {{{1, 3}, {1, 4}, {1, 5}},
                {{0, 0}, {1, 3}, {2, 4}},
                {{0, 0}, {0, 0}, {2, 3}}}},
      {"Linv", {{{1, 0}, {0, 0}, {0, 0}},
                {{-3, -1}, {1, 0}, {0, 0}},
                {{12, -2}, {-6, -1}, {1, 0}}}},
      {"Uinv", {{{1, -3}, {-1, -2}, {1.0 / 2, -1}},
                {{0, 0}, {1, -3}, {-1, -2}},
                {{0, 0}, {0, 0}, {1.0 / 2, -3}}}},
    }},
    {4, {
      {"B",    {{{0, 0}, {0, 0}, {0, 0}, {-5040, 0}},
                {{0, 0}, {0, 0}, {720, 0}, {5040, 1}},
                {{0, 0}, {-120, 0}, {-720, 1}, {-2520, 2}},
                {{24, 0}, {120, 1}, {360, 2}, {840, 3}}}},
      {"A",    {{{1, 4}, {1, 5}, {1, 6}, {1, 7}},
                {{4, 3}, {5, 4}, {6, 5}, {7, 6}},
                {{12, 2}, {20, 3}, {30, 4}, {42, 5}},
                {{24, 1}, {60, 2}, {120, 3}, {210, 4}}}},
      {"Ainv", {{{35, -4}, {-15, -3}, {5.0 / 2, -2}, {-1.0 / 6, -1}},
                {{-84, -5}, {39, -4}, {-7, -3}, {1.0 / 2, -2}},
                {{70, -6}, {-34, -5}, {13.0 / 2, -4}, {-1.0 / 2, -3}},
                {{-20, -7}, {10, -6}, {-2, -5}, {1.0 / 6, -4}}}},
      {"L",    {{{1, 0}, {0, 0}, {0, 0}, {0, 0}},
                {{4, -1}, {1, 0}, {0, 0}, {0, 0}},
                {{12, -2}, {8, -1}, {1, 0}, {0, 0}},
                {{24, -3}, {36, -2}, {12, -1}, {1, 0}}}},
      {"U",    {{{1, 4}, {1, 5}, {1, 6}, {1, 7}},
                {{0, 0}, {1, 4}, {2, 5}, {3, 6}},
                {{0, 0}, {0, 0}, {2, 4}, {6, 5}},
                {{0, 0}, {0, 0}, {0, 0}, {6, 4}}}},
      {"Linv", {{{1, 0}, {0, 0}, {0, 0}, {0, 0}},
                {{-4, -1}, {1, 0}, {0, 0}, {0, 0}},
                {{20, -2}, {-8, -1}, {1, 0}, {0, 0}},
                {{-120, -3}, {60, -2}, {-12, -1}, {1, 0}}}},
      {"Uinv", {{{1, -4}, {-1, -3}, {1.0 / 2, -2}, {-1.0 / 6, -1}},
                {{0, 0}, {1, -4}, {-1, -3}, {1.0 / 2, -2}},
                {{0, 0}, {0, 0}, {1.0 / 2, -4}, {-1.0 / 2, -3}},
                {{0, 0}, {0, 0}, {0, 0}, {1.0 / 6, -4}}}},
    }},
  };
  return kTables;
}
// clang-format on

inline DenseMatrix evaluate(const Table& table, double h) {
  const std::size_t n = table.size();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double p = 1.0;
      const int e = table[i][j].exp;
      for (int k = 0; k < (e < 0 ? -e : e); ++k) p *= h;
      m(i, j) = table[i][j].coef * (e < 0 ? 1.0 / p : p);
    }
  }
  return m;
}

}  // namespace msdc::golden
