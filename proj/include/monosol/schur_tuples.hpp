#pragma once

// Published greedy-palindromic block lengths chi_2 .. chi_8.

#include <cstdint>
#include <map>
#include <vector>

namespace monosol {

inline const std::map<int, std::vector<std::int64_t>>& published_schur_tuples() {
  static const std::map<int, std::vector<std::int64_t>> tuples = {
      {2,
       {
        4, 6, 1
       }},
      {3,
       {
        10, 14, 2, 28, 1, 11, 1
       }},
      {4,
       {
        28, 38, 5, 75, 2, 30, 2, 182, 1, 29, 1, 72, 1, 29, 1
       }},
      {5,
       {
        82, 110, 14, 216, 5, 87, 5, 523, 2, 84, 2, 208, 2, 84, 2, 1428, 1, 83, 1, 207, 1, 83, 1, 520, 1, 83,
        1, 207, 1, 83, 1
       }},
      {6,
       {
        244, 326, 41, 639, 14, 258, 14, 1546, 5, 249, 5, 616, 5, 249, 5, 4220, 2, 246, 2, 613, 2, 246, 2,
        1538, 2, 246, 2, 613, 2, 246, 2, 12202, 1, 245, 1, 612, 1, 245, 1, 1537, 1, 245, 1, 612, 1, 245, 1,
        4217, 1, 245, 1, 612, 1, 245, 1, 1537, 1, 245, 1, 612, 1, 245, 1
       }},
      {7,
       {
        730, 974, 122, 1908, 41, 771, 41, 4615, 14, 744, 14, 1840, 14, 744, 14, 12596, 5, 735, 5, 1831, 5,
        735, 5, 4592, 5, 735, 5, 1831, 5, 735, 5, 36420, 2, 732, 2, 1828, 2, 732, 2, 4589, 2, 732, 2, 1828,
        2, 732, 2, 12588, 2, 732, 2, 1828, 2, 732, 2, 4589, 2, 732, 2, 1828, 2, 732, 2, 107804, 1, 731, 1,
        1827, 1, 731, 1, 4588, 1, 731, 1, 1827, 1, 731, 1, 12587, 1, 731, 1, 1827, 1, 731, 1, 4588, 1, 731,
        1, 1827, 1, 731, 1, 36417, 1, 731, 1, 1827, 1, 731, 1, 4588, 1, 731, 1, 1827, 1, 731, 1, 12587, 1,
        731, 1, 1827, 1, 731, 1, 4588, 1, 731, 1, 1827, 1, 731, 1
       }},
      {8,
       {
        2188, 2918, 365, 5715, 122, 2310, 122, 13822, 41, 2229, 41, 5512, 41, 2229, 41, 37724, 14, 2202, 14,
        5485, 14, 2202, 14, 13754, 14, 2202, 14, 5485, 14, 2202, 14, 109074, 5, 2193, 5, 5476, 5, 2193, 5,
        13745, 5, 2193, 5, 5476, 5, 2193, 5, 37701, 5, 2193, 5, 5476, 5, 2193, 5, 13745, 5, 2193, 5, 5476, 5,
        2193, 5, 322861, 2, 2190, 2, 5473, 2, 2190, 2, 13742, 2, 2190, 2, 5473, 2, 2190, 2, 37698, 2, 2190,
        2, 5473, 2, 2190, 2, 13742, 2, 2190, 2, 5473, 2, 2190, 2, 109066, 2, 2190, 2, 5473, 2, 2190, 2,
        13742, 2, 2190, 2, 5473, 2, 2190, 2, 37698, 2, 2190, 2, 5473, 2, 2190, 2, 13742, 2, 2190, 2, 5473, 2,
        2190, 2, 964038, 1, 2189, 1, 5472, 1, 2189, 1, 13741, 1, 2189, 1, 5472, 1, 2189, 1, 37697, 1, 2189,
        1, 5472, 1, 2189, 1, 13741, 1, 2189, 1, 5472, 1, 2189, 1, 109065, 1, 2189, 1, 5472, 1, 2189, 1,
        13741, 1, 2189, 1, 5472, 1, 2189, 1, 37697, 1, 2189, 1, 5472, 1, 2189, 1, 13741, 1, 2189, 1, 5472, 1,
        2189, 1, 322858, 1, 2189, 1, 5472, 1, 2189, 1, 13741, 1, 2189, 1, 5472, 1, 2189, 1, 37697, 1, 2189,
        1, 5472, 1, 2189, 1, 13741, 1, 2189, 1, 5472, 1, 2189, 1, 109065, 1, 2189, 1, 5472, 1, 2189, 1,
        13741, 1, 2189, 1, 5472, 1, 2189, 1, 37697, 1, 2189, 1, 5472, 1, 2189, 1, 13741, 1, 2189, 1, 5472, 1,
        2189, 1
       }},
  };
  return tuples;
}

}  // namespace monosol
