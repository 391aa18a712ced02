#include "asep2/config.hpp"

#include <stdexcept>

namespace asep2 {

char to_char(SiteState s) {
  switch (s) {
    case SiteState::A: return 'A';
    case SiteState::E: return '0';
    case SiteState::B: return 'B';
  }
  return '?';
}

Configuration::Configuration(int L) {
  if (L < 1) throw std::invalid_argument("configuration needs L >= 1");
  sites_.assign(static_cast<std::size_t>(L), SiteState::E);
}

Configuration::Configuration(std::vector<SiteState> sites) : sites_(std::move(sites)) {
  if (sites_.empty()) throw std::invalid_argument("configuration needs L >= 1");
}

Configuration Configuration::parse(std::string_view text) {
  std::vector<SiteState> sites;
  sites.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'A': sites.push_back(SiteState::A); break;
      case '0': sites.push_back(SiteState::E); break;
      case 'B': sites.push_back(SiteState::B); break;
      default: throw std::invalid_argument("bad configuration character '" + std::string(1, c) + "'");
    }
  }
  return Configuration(std::move(sites));
}

std::uint64_t basis_dimension(int L) {
  if (L < 1 || L > 20) throw std::invalid_argument("lattice size out of range");
  std::uint64_t d = 1;
  for (int k = 0; k < L; ++k) d *= 3;
  return d;
}

Configuration Configuration::decode(std::uint64_t index, int L) {
  const std::uint64_t dim = basis_dimension(L);
  if (index < 1 || index > dim) throw std::out_of_range("configuration index out of range");
  std::uint64_t rest = index - 1;
  std::vector<SiteState> sites(static_cast<std::size_t>(L));
  for (int k = L - 1; k >= 0; --k) {
    sites[static_cast<std::size_t>(k)] = static_cast<SiteState>(rest % 3);
    rest /= 3;
  }
  return Configuration(std::move(sites));
}

Configuration Configuration::from_positions(int L, const PositionRep& pos) {
  Configuration c(L);
  auto place = [&](const std::vector<int>& list, SiteState s) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] < 1 || list[i] > L) throw std::invalid_argument("position out of range");
      if (i > 0 && list[i] <= list[i - 1]) throw std::invalid_argument("positions must be strictly increasing");
      auto& site = c.sites_[static_cast<std::size_t>(list[i] - 1)];
      if (site != SiteState::E) throw std::invalid_argument("A and B positions overlap");
      site = s;
    }
  };
  place(pos.x, SiteState::A);
  place(pos.y, SiteState::B);
  return c;
}

void Configuration::check_site(int k) const {
  if (k < 1 || k > size()) throw std::out_of_range("site index out of range");
}

SiteState Configuration::at(int k) const {
  check_site(k);
  return sites_[static_cast<std::size_t>(k - 1)];
}

std::uint64_t Configuration::index() const {
  std::uint64_t i = 0;
  for (SiteState s : sites_) i = 3 * i + static_cast<std::uint64_t>(code(s));
  return i + 1;
}

Occupation Configuration::occupations(int k) const {
  const SiteState s = at(k);
  return {s == SiteState::A ? 1 : 0, s == SiteState::E ? 1 : 0, s == SiteState::B ? 1 : 0};
}

namespace {

Counts count_range(const std::vector<SiteState>& sites, std::size_t end) {
  Counts c;
  for (std::size_t i = 0; i < end; ++i) {
    switch (sites[i]) {
      case SiteState::A: ++c.N; break;
      case SiteState::E: ++c.V; break;
      case SiteState::B: ++c.M; break;
    }
  }
  return c;
}

}  // namespace

Counts Configuration::counts() const { return count_range(sites_, sites_.size()); }

Sector Configuration::sector() const {
  const Counts c = counts();
  return {c.N, c.M};
}

Counts Configuration::left_counts(int k) const {
  check_site(k);
  return count_range(sites_, static_cast<std::size_t>(k - 1));
}

Configuration Configuration::cyclic_flip(int k, FlipDirection dir) const {
  check_site(k);
  Configuration out = *this;
  auto& s = out.sites_[static_cast<std::size_t>(k - 1)];
  const int shift = dir == FlipDirection::Plus ? 1 : 2;
  s = static_cast<SiteState>((code(s) + shift) % 3);
  return out;
}

Configuration Configuration::swap(int k) const {
  if (k < 1 || k >= size()) throw std::out_of_range("bond index out of range");
  Configuration out = *this;
  std::swap(out.sites_[static_cast<std::size_t>(k - 1)], out.sites_[static_cast<std::size_t>(k)]);
  return out;
}

PositionRep Configuration::to_positions() const {
  PositionRep pos;
  for (int k = 1; k <= size(); ++k) {
    const SiteState s = sites_[static_cast<std::size_t>(k - 1)];
    if (s == SiteState::A) pos.x.push_back(k);
    if (s == SiteState::B) pos.y.push_back(k);
  }
  return pos;
}

std::string Configuration::to_string() const {
  std::string out;
  out.reserve(sites_.size());
  for (SiteState s : sites_) out.push_back(to_char(s));
  return out;
}

std::uint64_t sector_size(int L, Sector sector) {
  if (!sector.valid_for(L)) throw std::invalid_argument("invalid sector");
  // Multiply binomials incrementally to stay in integers.
  auto binom = [](int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
  };
  return binom(L, sector.N) * binom(L - sector.N, sector.M);
}

namespace {

void enumerate_into(std::vector<SiteState>& prefix, int remaining_sites, int nA, int nB, int nE,
                    std::vector<Configuration>& out) {
  if (remaining_sites == 0) {
    out.emplace_back(prefix);
    return;
  }
  // Codes in ascending order keep the output sorted by canonical index.
  const int budget[3] = {nA, nE, nB};
  for (int c = 0; c < 3; ++c) {
    if (budget[c] == 0) continue;
    prefix.push_back(static_cast<SiteState>(c));
    enumerate_into(prefix, remaining_sites - 1, nA - (c == 0), nB - (c == 2), nE - (c == 1), out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Configuration> enumerate_sector(int L, Sector sector) {
  if (L < 1 || !sector.valid_for(L)) throw std::invalid_argument("invalid sector");
  std::vector<Configuration> out;
  out.reserve(sector_size(L, sector));
  std::vector<SiteState> prefix;
  prefix.reserve(static_cast<std::size_t>(L));
  enumerate_into(prefix, L, sector.N, sector.M, L - sector.N - sector.M, out);
  return out;
}

}  // namespace asep2
