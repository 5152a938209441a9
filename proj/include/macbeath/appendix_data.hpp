#pragma once

// The eight published Sigma_k^+- lists for the first 400 primes p = +-1 mod 7,
// exactly as printed (including printing slips), plus the corrections.

#include <cstdint>
#include <vector>

namespace macbeath::appendix {

struct SigmaList {
  unsigned k;
  int sign;  // +1 or -1: p mod 7
  unsigned printed_count;
  std::vector<std::uint64_t> primes;  // printed order
};

inline const std::vector<SigmaList>& printed_lists() {
  static const std::vector<SigmaList> lists = {
      {0, +1, 22,
       {239, 379, 491, 547, 1051, 1583, 2143, 3319, 3823, 3907, 4159, 4271, 4523, 4663, 5503, 5867, 5923,
        6427, 6959, 7043, 8443, 9227}},
      {0, -1, 26,
       {167, 251, 1399, 1511, 1931, 1987, 2351, 3023, 3331, 3359, 4003, 4283, 4339, 4759, 4871, 5179, 5683,
        6803, 7307, 8623, 8707, 9043, 9127, 9239, 9491, 9631}},
      {1, +1, 79,
       {29, 113, 197, 281, 337, 421, 449, 617, 673, 757, 953, 1009, 1429, 1597, 1709, 1877, 1933, 2017,
        2129, 2213, 2269, 2297, 2381, 2437, 2633, 2801, 2857, 2969, 3109, 3137, 3221, 3361, 3389, 3529,
        3613, 3697, 4201, 4229, 4621, 4649, 4733, 4817, 4957, 5153, 5209, 5237, 5573, 5657, 5741, 5881,
        6133, 6217, 6301, 6329, 6469, 6553, 6581, 6637, 7001, 7057, 7309, 7393, 7561, 7589, 8093, 8233,
        8317, 8429, 8597, 8681, 8693, 8821, 9157, 9241, 9437, 9521, 9661, 9689, 9829}},
      {1, -1, 75,
       {13, 41, 97, 349, 433, 461, 601, 769, 797, 853, 1021, 1049, 1217, 1301, 1609, 1637, 1693, 1721, 1777,
        1861, 1889, 1973, 2029, 2113, 2141, 2309, 2477, 2617, 2729, 2953, 2897, 3121, 3541, 3821, 3989,
        4073, 4129, 4157, 4409, 4493, 4549, 4801, 4969, 5081, 5333, 5417, 5557, 5641, 5669, 6089, 6173,
        6229, 6397, 6733, 6761, 7013, 7069, 7321, 7349, 7433, 7489, 7517, 7573, 7853, 7993, 8161, 8273,
        8329, 8861, 9001, 9029, 9281, 9337, 9421, 9533}},
      {2, +1, 78,
       {43, 71, 127, 211, 463, 631, 659, 743, 827, 883, 911, 967, 1163, 1303, 1471, 1499, 1667, 1723, 2003,
        2087, 2311, 2339, 2423, 2591, 2647, 2731, 2843, 2927, 3011, 3067, 3347, 3571, 3739, 3767, 3851,
        4019, 4243, 4327, 4691, 4831, 4943, 4999, 5167, 5279, 5419, 5531, 5783, 5839, 6007, 6091, 6203,
        6287, 6343, 6679, 6763, 6791, 7127, 7211, 7351, 7547, 7603, 7687, 7883, 8191, 8219, 8387, 8527,
        8779, 8807, 8863, 9059, 9199, 9283, 9311, 9479, 9619, 9787, 9871}},
      {2, -1, 73,
       {83, 138, 223, 307, 419, 503, 587, 643, 727, 811, 839, 1063, 1091, 1231, 1259, 1427, 1483, 1567,
        1847, 2099, 2239, 2267, 2659, 2687, 2939, 3079, 3163, 3191, 3499, 3527, 3583, 3779, 3863, 3919,
        3947, 4423, 4451, 4507, 4591, 4703, 4787, 5011, 5039, 5347, 5431, 5711, 5851, 5879, 6047, 6131,
        6271, 6299, 6551, 6607, 6691, 6719, 6971, 7027, 7559, 7643, 7699, 7727, 7867, 7951, 8147, 8231,
        8287, 8539, 8819, 9323, 9463, 9547, 9743}},
      {3, +1, 24,
       {701, 1093, 1289, 1373, 2521, 2549, 2689, 3557, 4397, 4481, 4789, 6833, 6917, 7253, 7477, 7673, 7757,
        7481, 8009, 8513, 8737, 8849, 8933, 9857}},
      {3, -1, 23,
       {181, 293, 881, 937, 1553, 2281, 2393, 3037, 3373, 3457, 2709, 3793, 3877, 4241, 4297, 5501, 6257,
        6481, 7237, 7741, 7937, 8581, 8609}},
  };
  return lists;
}

struct Erratum {
  unsigned k;
  int sign;
  std::uint64_t printed;  // 0: missing from this list
  std::uint64_t corrected;  // 0: does not belong in this list
};

/// Differences between the printed lists and a direct classification.
inline const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> table = {
      {2, -1, 138, 139},
      {3, -1, 2709, 3709},
      {3, +1, 7481, 7841},
      {1, +1, 8693, 0},  // 8693 = -1 mod 7
      {1, -1, 0, 8693},
  };
  return table;
}

/// Aggregate counts for k = 0..3 as stated with the lists.
inline constexpr std::uint64_t kAggregate[4] = {48, 154, 151, 47};

}  // namespace macbeath::appendix
