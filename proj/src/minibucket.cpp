#include "stillife/minibucket.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "stillife/wcsp.hpp"

namespace stillife {

std::vector<Segment> make_segments(int n, int m) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("bad board size");
  if (m < 1 || m > n) throw std::invalid_argument("segment count must be 1..n");
  std::vector<int> len(static_cast<size_t>(m), n / m);
  int extra = n % m;
  int left = 0, right = m - 1;
  while (extra >= 2) {
    ++len[static_cast<size_t>(left++)];
    ++len[static_cast<size_t>(right--)];
    extra -= 2;
  }
  if (extra == 1) ++len[static_cast<size_t>((m - 1) / 2)];

  std::vector<Segment> segs;
  segs.reserve(static_cast<size_t>(m));
  int start = 0;
  for (int i = 0; i < m; ++i) {
    Segment s;
    s.own_start = start;
    s.own_len = len[static_cast<size_t>(i)];
    s.scope_start = std::max(0, s.own_start - 1);
    int scope_end = std::min(n, s.own_start + s.own_len + 1);
    s.scope_len = scope_end - s.scope_start;
    segs.push_back(s);
    start += s.own_len;
  }
  return segs;
}

Cost segment_cost(const Segment& seg, int n, RowKind kind, std::uint32_t a,
                  std::uint32_t b, std::uint32_t c) {
  int s = seg.scope_len;
  std::uint32_t owned = seg.owned_mask();
  std::uint32_t va = kind == RowKind::first ? 0 : a;
  std::uint32_t vc = kind == RowKind::last ? 0 : c;
  if (unstable_cells(va, b, vc, s) & owned) return Cost::inf();
  if (kind == RowKind::interior) {
    // Vertical live triple against a side frame column would breed there.
    std::uint32_t triple = a & b & c;
    if (seg.own_start == 0 && (triple & 1u)) return Cost::inf();
    if (seg.own_start + seg.own_len == n &&
        ((triple >> (s - 1)) & 1u))
      return Cost::inf();
  } else {
    // Horizontal live triple centred on an owned cell breeds into the frame
    // row above (first) or below (last).
    if (b & (b << 1) & (b >> 1) & owned) return Cost::inf();
  }
  return Cost::finite(popcount32(~b & owned));
}

MiniBucketTables::MiniBucketTables(int n, int m, int scope_cap) {
  if (n < 3 || n > kMaxN) throw std::invalid_argument("need 3 <= n <= 32");
  n_ = n;
  m_ = m;
  segs_ = make_segments(n, m);
  for (const Segment& seg : segs_)
    if (seg.scope_len > scope_cap)
      throw std::invalid_argument("segment scope exceeds cap; raise the cap "
                                  "or use more segments");

  int levels = n_ - 1;  // 3 .. n+1
  tables_.resize(segs_.size());
  for (size_t si = 0; si < segs_.size(); ++si) {
    const Segment& seg = segs_[si];
    int s = seg.scope_len;
    std::uint32_t S = 1u << s;
    std::uint32_t owned = seg.owned_mask();
    bool left_edge = seg.own_start == 0;
    bool right_edge = seg.own_start + seg.own_len == n_;

    auto& levels_tab = tables_[si];
    levels_tab.assign(static_cast<size_t>(levels),
                      std::vector<std::uint16_t>(
                          static_cast<size_t>(S) * S, kCellInf));

    std::vector<std::uint16_t>& last_t = levels_tab[static_cast<size_t>(n_ - 2)];
    for (std::uint32_t a = 0; a < S; ++a)
      for (std::uint32_t b = 0; b < S; ++b) {
        Cost v = segment_cost(seg, n_, RowKind::last, a, b, 0);
        if (v.is_finite())
          last_t[a * S + b] = static_cast<std::uint16_t>(v.value());
      }

    // Rows below affect a row's stability, so each level minimizes over the
    // next pattern; walking candidates in next-value order makes the first
    // feasible one optimal because the local charge is constant in c.
    std::vector<std::pair<std::uint16_t, std::uint32_t>> order(S);
    for (int level = n_; level >= 3; --level) {
      const std::vector<std::uint16_t>& next =
          levels_tab[static_cast<size_t>(level - 2)];
      std::vector<std::uint16_t>& cur =
          levels_tab[static_cast<size_t>(level - 3)];
      for (std::uint32_t b = 0; b < S; ++b) {
        for (std::uint32_t c = 0; c < S; ++c)
          order[c] = {next[b * S + c], c};
        std::sort(order.begin(), order.end());
        std::uint16_t dead_b =
            static_cast<std::uint16_t>(popcount32(~b & owned));
        for (std::uint32_t a = 0; a < S; ++a) {
          std::uint16_t best = kCellInf;
          for (const auto& [nv, c] : order) {
            if (nv == kCellInf) break;
            if (unstable_cells(a, b, c, s) & owned) continue;
            std::uint32_t triple = a & b & c;
            if (left_edge && (triple & 1u)) continue;
            if (right_edge && ((triple >> (s - 1)) & 1u)) continue;
            best = static_cast<std::uint16_t>(nv + dead_b);
            break;
          }
          cur[a * S + b] = best;
        }
      }
    }
  }
}

Cost MiniBucketTables::suffix_bound(int k, std::uint32_t r_prev,
                                    std::uint32_t r_k) const {
  if (k < 2 || k > n_) throw std::invalid_argument("prefix length out of range");
  size_t idx = static_cast<size_t>(k + 1 - 3);
  std::int64_t acc = 0;
  for (size_t si = 0; si < segs_.size(); ++si) {
    const Segment& seg = segs_[si];
    std::uint32_t S = 1u << seg.scope_len;
    std::uint16_t v =
        tables_[si][idx][seg.project(r_prev) * S + seg.project(r_k)];
    if (v == kCellInf) return Cost::inf();
    acc += v;
  }
  return Cost::finite(acc);
}

Cost MiniBucketTables::lower_bound(const std::vector<std::uint32_t>& rows) const {
  int k = static_cast<int>(rows.size());
  if (k > n_) throw std::invalid_argument("prefix length out of range");
  Cost pc = partial_cost(rows, n_);
  if (k < 2 || !pc.is_finite()) return pc;
  return pc + suffix_bound(k, rows[static_cast<size_t>(k - 2)],
                           rows[static_cast<size_t>(k - 1)]);
}

namespace {
constexpr std::uint32_t kMagic = 0x4D425431;  // "MBT1"
}

bool MiniBucketTables::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  auto put32 = [&](std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
  };
  put32(kMagic);
  put32(static_cast<std::uint32_t>(n_));
  put32(static_cast<std::uint32_t>(m_));
  for (const auto& seg_tabs : tables_)
    for (const auto& tab : seg_tabs)
      out.write(reinterpret_cast<const char*>(tab.data()),
                static_cast<std::streamsize>(tab.size() * sizeof(std::uint16_t)));
  return static_cast<bool>(out);
}

std::optional<MiniBucketTables> MiniBucketTables::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::uint32_t magic = 0, n = 0, m = 0;
  auto get32 = [&](std::uint32_t& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof v);
  };
  get32(magic);
  get32(n);
  get32(m);
  if (!in || magic != kMagic || n < 3 || n > static_cast<std::uint32_t>(kMaxN) ||
      m < 1 || m > n)
    return std::nullopt;

  MiniBucketTables t;
  t.n_ = static_cast<int>(n);
  t.m_ = static_cast<int>(m);
  try {
    t.segs_ = make_segments(t.n_, t.m_);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  int levels = t.n_ - 1;
  t.tables_.resize(t.segs_.size());
  for (size_t si = 0; si < t.segs_.size(); ++si) {
    std::uint32_t S = 1u << t.segs_[si].scope_len;
    t.tables_[si].assign(static_cast<size_t>(levels),
                         std::vector<std::uint16_t>(
                             static_cast<size_t>(S) * S, kCellInf));
    for (auto& tab : t.tables_[si]) {
      in.read(reinterpret_cast<char*>(tab.data()),
              static_cast<std::streamsize>(tab.size() * sizeof(std::uint16_t)));
      if (!in) return std::nullopt;
    }
  }
  in.peek();
  if (!in.eof()) return std::nullopt;  // trailing bytes: not our file
  return t;
}

std::string MiniBucketTables::cache_name(int n, int m) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "mb_n%d_m%d.tbl", n, m);
  return buf;
}

}  // namespace stillife
