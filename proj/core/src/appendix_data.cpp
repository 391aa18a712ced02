#include "asep2/measure.hpp"

namespace asep2 {

const std::vector<AppendixSector>& appendix_tables() {
  static const std::vector<AppendixSector> tables = {
      {2, {0, 0}, {{0, {"00"}}}},
      {2, {1, 0}, {{-1, {"A0"}}, {1, {"0A"}}}},
      {2, {0, 1}, {{1, {"B0"}}, {-1, {"0B"}}}},
      {2, {2, 0}, {{0, {"AA"}}}},
      {2, {1, 1}, {{-1, {"AB"}}, {1, {"BA"}}}},
      {2, {0, 2}, {{0, {"BB"}}}},

      {3, {0, 0}, {{0, {"000"}}}},
      {3, {1, 0}, {{-2, {"A00"}}, {0, {"0A0"}}, {2, {"00A"}}}},
      {3, {0, 1}, {{-2, {"00B"}}, {0, {"0B0"}}, {2, {"B00"}}}},
      {3, {2, 0}, {{-2, {"AA0"}}, {0, {"A0A"}}, {2, {"0AA"}}}},
      {3, {1, 1}, {{-3, {"A0B"}}, {-1, {"AB0", "0AB"}}, {1, {"BA0", "0BA"}}, {3, {"B0A"}}}},
      {3, {0, 2}, {{-2, {"0BB"}}, {0, {"B0B"}}, {2, {"BB0"}}}},
      {3, {3, 0}, {{0, {"AAA"}}}},
      {3, {2, 1}, {{-2, {"AAB"}}, {0, {"ABA"}}, {2, {"BAA"}}}},
      {3, {1, 2}, {{-2, {"ABB"}}, {0, {"BAB"}}, {2, {"BBA"}}}},
      {3, {0, 3}, {{0, {"BBB"}}}},

      {4, {0, 0}, {{0, {"0000"}}}},
      {4, {1, 0}, {{-3, {"A000"}}, {-1, {"0A00"}}, {1, {"00A0"}}, {3, {"000A"}}}},
      {4, {0, 1}, {{-3, {"000B"}}, {-1, {"00B0"}}, {1, {"0B00"}}, {3, {"B000"}}}},
      {4, {2, 0}, {{-4, {"AA00"}}, {-2, {"A0A0"}}, {0, {"A00A", "0AA0"}}, {2, {"0A0A"}}, {4, {"00AA"}}}},
      {4,
       {1, 1},
       {{-5, {"A00B"}},
        {-3, {"A0B0", "0A0B"}},
        {-1, {"AB00", "0AB0", "00AB"}},
        {1, {"BA00", "0BA0", "00BA"}},
        {3, {"B0A0", "0B0A"}},
        {5, {"B00A"}}}},
      {4, {0, 2}, {{-4, {"00BB"}}, {-2, {"0B0B"}}, {0, {"B00B", "0BB0"}}, {2, {"B0B0"}}, {4, {"BB00"}}}},
      {4, {3, 0}, {{-3, {"AAA0"}}, {-1, {"AA0A"}}, {1, {"A0AA"}}, {3, {"0AAA"}}}},
      {4,
       {2, 1},
       {{-5, {"AA0B"}},
        {-3, {"AAB0", "A0AB"}},
        {-1, {"0AAB", "ABA0", "A0BA"}},
        {1, {"AB0A", "0ABA", "BAA0"}},
        {3, {"BA0A", "0BAA"}},
        {5, {"B0AA"}}}},
      {4,
       {1, 2},
       {{-5, {"A0BB"}},
        {-3, {"AB0B", "0ABB"}},
        {-1, {"BA0B", "0BAB", "ABB0"}},
        {1, {"0BBA", "BAB0", "B0AB"}},
        {3, {"BBA0", "B0BA"}},
        {5, {"BB0A"}}}},
      {4, {0, 3}, {{-3, {"0BBB"}}, {-1, {"B0BB"}}, {1, {"BB0B"}}, {3, {"BBB0"}}}},
      {4, {4, 0}, {{0, {"AAAA"}}}},
      {4, {3, 1}, {{-3, {"AAAB"}}, {-1, {"AABA"}}, {1, {"ABAA"}}, {3, {"BAAA"}}}},
      {4, {2, 2}, {{-4, {"AABB"}}, {-2, {"ABAB"}}, {0, {"ABBA", "BAAB"}}, {2, {"BABA"}}, {4, {"BBAA"}}}},
      {4, {1, 3}, {{-3, {"ABBB"}}, {-1, {"BABB"}}, {1, {"BBAB"}}, {3, {"BBBA"}}}},
      {4, {0, 4}, {{0, {"BBBB"}}}},
  };
  return tables;
}

}  // namespace asep2
