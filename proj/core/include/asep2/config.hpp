// Lattice configurations over {A, 0, B}, their canonical basis index, and the
// occupation functionals built on top of them.  Sites are numbered 1..L.
#ifndef ASEP2_CONFIG_HPP
#define ASEP2_CONFIG_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace asep2 {

/// Local state of a site.  The numeric codes are fixed: A = 0, E = 1, B = 2.
enum class SiteState : std::uint8_t { A = 0, E = 1, B = 2 };

inline int code(SiteState s) { return static_cast<int>(s); }
char to_char(SiteState s);

/// Particle numbers of a configuration class.
struct Sector {
  int N = 0;  // A particles
  int M = 0;  // B particles

  bool valid_for(int L) const { return N >= 0 && M >= 0 && N + M <= L; }
  friend auto operator<=>(const Sector&, const Sector&) = default;
};

struct Occupation {
  int a = 0;
  int v = 0;
  int b = 0;
  friend bool operator==(const Occupation&, const Occupation&) = default;
};

struct Counts {
  int N = 0;
  int M = 0;
  int V = 0;
  friend bool operator==(const Counts&, const Counts&) = default;
};

/// Particle positions, each list strictly increasing and 1-based.
struct PositionRep {
  std::vector<int> x;  // A particles
  std::vector<int> y;  // B particles
  friend bool operator==(const PositionRep&, const PositionRep&) = default;
};

enum class FlipDirection { Plus, Minus };

class Configuration {
 public:
  /// All-empty lattice of L >= 1 sites.
  explicit Configuration(int L);
  explicit Configuration(std::vector<SiteState> sites);

  /// Parses "A0B" style text (site 1 first).  Throws std::invalid_argument.
  static Configuration parse(std::string_view text);
  /// Inverse of index(); throws std::out_of_range for i outside [1, 3^L].
  static Configuration decode(std::uint64_t index, int L);
  static Configuration from_positions(int L, const PositionRep& pos);

  int size() const { return static_cast<int>(sites_.size()); }
  SiteState at(int k) const;  // 1-based
  const std::vector<SiteState>& sites() const { return sites_; }

  /// 1 + sum_k code(site k) * 3^(L-k): site 1 is the most significant digit.
  std::uint64_t index() const;
  /// index() - 1, the row/column used by matrices.
  std::uint64_t offset() const { return index() - 1; }

  Occupation occupations(int k) const;
  Counts counts() const;
  Sector sector() const;
  /// Counts over sites 1..k-1.
  Counts left_counts(int k) const;

  Configuration cyclic_flip(int k, FlipDirection dir) const;
  Configuration swap(int k) const;  // exchanges sites k and k+1
  PositionRep to_positions() const;

  std::string to_string() const;

  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  void check_site(int k) const;
  std::vector<SiteState> sites_;
};

/// 3^L, throws std::invalid_argument when it overflows 32 bits.
std::uint64_t basis_dimension(int L);

/// All configurations of the sector in increasing canonical index.
std::vector<Configuration> enumerate_sector(int L, Sector sector);

/// L! / (N! M! (L-N-M)!), the sector size.
std::uint64_t sector_size(int L, Sector sector);

}  // namespace asep2

#endif  // ASEP2_CONFIG_HPP
