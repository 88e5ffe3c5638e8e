#include "ljmod/segcomb.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ljmod/errors.hpp"

namespace ljmod::segcomb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("partition must be nonempty");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

int Partition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool dominance_leq(const Partition& lhs, const Partition& rhs) {
  if (lhs.total() != rhs.total())
    throw DomainError("dominance order needs partitions of the same total");
  const std::size_t n = std::max(lhs.size(), rhs.size());
  int sl = 0, sr = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sl += i < lhs.size() ? lhs[i] : 0;
    sr += i < rhs.size() ? rhs[i] : 0;
    if (sl > sr) return false;
  }
  return true;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
  for (int part : p.parts())
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  return Partition(std::move(out));
}

Multisegment::Multisegment(int period, std::vector<Segment> segments)
    : period_(period), segments_(std::move(segments)) {
  if (period_ < 1) throw DomainError("multisegment period must be positive");
  if (segments_.empty()) throw DomainError("multisegment must be nonempty");
  for (auto& s : segments_) {
    if (s.length < 1 || s.weight < 1)
      throw DomainError("segment length and weight must be positive");
    s.start = ((s.start % period_) + period_) % period_;
  }
  std::sort(segments_.begin(), segments_.end());
}

int Multisegment::degree() const {
  int d = 0;
  for (const auto& s : segments_) d += s.weight * s.length;
  return d;
}

std::vector<int> Multisegment::content() const {
  std::vector<int> c(static_cast<std::size_t>(period_), 0);
  for (const auto& s : segments_)
    for (int j = 0; j < s.length; ++j)
      c[static_cast<std::size_t>((s.start + j) % period_)] += s.weight;
  return c;
}

bool Multisegment::all_weight_one() const {
  return std::all_of(segments_.begin(), segments_.end(),
                     [](const Segment& s) { return s.weight == 1; });
}

std::string Multisegment::id() const {
  std::string out = "{\"period\":" + std::to_string(period_) + ",\"segments\":[";
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    if (i) out += ',';
    out += "{\"start\":" + std::to_string(s.start) + ",\"len\":" +
           std::to_string(s.length) + ",\"weight\":" + std::to_string(s.weight) +
           "}";
  }
  out += "]}";
  return out;
}

bool basis_less(const Multisegment& lhs, const Multisegment& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() > rhs.size();
  return lhs.segments() < rhs.segments();
}

Partition whittaker_partition(const Multisegment& a) {
  // Segment (d', r) contributes the constant partition (d')^r.
  std::vector<int> sum;
  for (const auto& s : a.segments()) {
    if (sum.size() < static_cast<std::size_t>(s.length))
      sum.resize(static_cast<std::size_t>(s.length), 0);
    for (int i = 0; i < s.length; ++i) sum[static_cast<std::size_t>(i)] += s.weight;
  }
  return Partition(std::move(sum));
}

CyclicCoverIndex::CyclicCoverIndex(int d, std::set<int> starts)
    : d_(d), starts_(std::move(starts)) {
  if (d_ < 1) throw DomainError("cover period must be positive");
  if (d_ > 63) throw DomainError("cover period too large for a bitmask");
  if (starts_.empty()) throw DomainError("cover index needs a nonempty subset");
  for (int s : starts_)
    if (s < 0 || s >= d_) throw DomainError("cover start outside Z/dZ");
}

std::uint64_t CyclicCoverIndex::mask() const {
  std::uint64_t m = 0;
  for (int s : starts_) m |= std::uint64_t{1} << s;
  return m;
}

CyclicCoverIndex CyclicCoverIndex::from_mask(int d, std::uint64_t mask) {
  std::set<int> s;
  for (int i = 0; i < d; ++i)
    if (mask >> i & 1U) s.insert(i);
  return CyclicCoverIndex(d, std::move(s));
}

Multisegment cover_from_subset(const CyclicCoverIndex& idx) {
  const int d = idx.d();
  std::vector<int> starts(idx.starts().begin(), idx.starts().end());
  std::vector<Segment> segs;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const int next = k + 1 < starts.size() ? starts[k + 1] : starts[0] + d;
    segs.push_back({starts[k], next - starts[k], 1});
  }
  return Multisegment(d, std::move(segs));
}

CyclicCoverIndex subset_from_cover(const Multisegment& a) {
  if (!a.all_weight_one()) throw DomainError("cyclic cover must have weight one");
  const auto c = a.content();
  if (std::any_of(c.begin(), c.end(), [](int v) { return v != 1; }))
    throw DomainError("multisegment does not tile Z/dZ exactly once");
  std::set<int> starts;
  for (const auto& s : a.segments()) starts.insert(s.start);
  return CyclicCoverIndex(a.period(), std::move(starts));
}

std::vector<Multisegment> enumerate_block(int e, const std::vector<int>& dims) {
  if (e < 1) throw DomainError("block period must be positive");
  if (dims.size() != static_cast<std::size_t>(e))
    throw DomainError("dimension vector length must equal the period");
  int total = 0;
  for (int v : dims) {
    if (v < 0) throw DomainError("dimension vector entries must be nonnegative");
    total += v;
  }
  if (total == 0) throw DomainError("dimension vector must not be zero");

  std::vector<Multisegment> out;
  std::vector<int> remaining = dims;
  std::vector<Segment> current;
  // Segments are chosen in nondecreasing (start, length) order so each
  // multiset is produced once.
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.emplace_back(e, current);
      return;
    }
    const Segment lo = current.empty() ? Segment{0, 1, 1} : current.back();
    for (int s = lo.start; s < e; ++s) {
      if (remaining[static_cast<std::size_t>(s)] == 0) continue;
      const int min_len = s == lo.start ? lo.length : 1;
      // Extend greedily; stop once a residue runs out.
      int len = 0;
      for (; len < left; ++len) {
        auto& slot = remaining[static_cast<std::size_t>((s + len) % e)];
        if (slot == 0) break;
        --slot;
      }
      for (int l = len; l >= 1; --l) {
        if (l >= min_len) {
          current.push_back({s, l, 1});
          rec(left - l);
          current.pop_back();
        }
        ++remaining[static_cast<std::size_t>((s + l - 1) % e)];
      }
    }
  };
  rec(total);
  std::sort(out.begin(), out.end(), basis_less);
  return out;
}

}  // namespace ljmod::segcomb
