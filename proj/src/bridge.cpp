#include "ljmod/bridge.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "json.hpp"
#include "ljmod/errors.hpp"

namespace ljmod::bridge {

using affine_kl::AffinePermutation;
using segcomb::Multisegment;

OrbitBridge::OrbitBridge(quiver::OrbitPoset poset, int epsilon, std::vector<AffinePermutation> images)
    : poset_(std::move(poset)), epsilon_(epsilon), images_(std::move(images)) {
  const std::size_t n = poset_.size();
  if (images_.size() != n) throw ConsistencyError("bridge must map every orbit");
  for (std::size_t a = 0; a < n; ++a) {
    if (images_[a].rank() != rank()) throw ConsistencyError("bridge image has the wrong rank");
    if (images_[a].level() != images_[0].level())
      throw ConsistencyError("bridge images lie in different rotation components");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && images_[a] == images_[b]) throw ConsistencyError("bridge is not injective");
      if ((poset_.leq[b][a] != 0) != affine_kl::bruhat_leq(images_[b], images_[a]))
        throw ConsistencyError("bridge is not an order isomorphism");
    }
}

int OrbitBridge::rank() const {
  int total = 0;
  for (int v : poset_.dims) total += v;
  return total;
}

const AffinePermutation& OrbitBridge::image(const Multisegment& a) const {
  for (std::size_t k = 0; k < poset_.size(); ++k)
    if (poset_.nodes[k] == a) return images_[k];
  throw DomainError("multisegment " + a.id() + " is not an orbit of this bridge");
}

std::string OrbitBridge::to_json() const {
  nlohmann::ordered_json j;
  j["e"] = poset_.e;
  j["dims"] = poset_.dims;
  j["epsilon"] = epsilon_;
  j["map"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < poset_.size(); ++k)
    j["map"].push_back({{"id", poset_.nodes[k].id()}, {"window", images_[k].window()}});
  return j.dump();
}

OrbitBridge OrbitBridge::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& ex) {
    throw DomainError(std::string("bridge JSON: ") + ex.what());
  }
  auto poset = quiver::orbit_poset(j.at("e").get<int>(), j.at("dims").get<std::vector<int>>());
  std::vector<std::optional<AffinePermutation>> images(poset.size());
  for (const auto& entry : j.at("map")) {
    const auto id = entry.at("id").is_string() ? nlohmann::json::parse(entry.at("id").get<std::string>())
                                               : entry.at("id");
    std::vector<segcomb::Segment> segs;
    for (const auto& s : id.at("segments"))
      segs.push_back({s.at("start").get<int>(), s.at("len").get<int>(), s.value("weight", 1)});
    Multisegment a(id.at("period").get<int>(), std::move(segs));
    bool placed = false;
    for (std::size_t k = 0; k < poset.size(); ++k)
      if (poset.nodes[k] == a) {
        images[k] = AffinePermutation(entry.at("window").get<std::vector<long long>>());
        placed = true;
      }
    if (!placed) throw ConsistencyError("bridge entry " + a.id() + " is not an orbit of the block");
  }
  std::vector<AffinePermutation> out;
  for (auto& im : images) {
    if (!im) throw ConsistencyError("bridge leaves an orbit unmapped");
    out.push_back(*im);
  }
  return OrbitBridge(std::move(poset), j.value("epsilon", j.at("e").get<int>()), std::move(out));
}

std::vector<OrbitBridge> find_bridges(const quiver::OrbitPoset& poset, int epsilon,
                                      std::size_t max_results) {
  int d = 0;
  for (int v : poset.dims) d += v;
  if (d < 1) throw DomainError("empty orbit poset");
  const std::size_t n = poset.size();
  const int max_height = n ? *std::max_element(poset.height.begin(), poset.height.end()) : 0;

  const auto j = affine_kl::parabolic_generators(d, epsilon);
  const int base = affine_kl::length(affine_kl::max_in_double_coset(AffinePermutation::identity(d), j));
  std::vector<AffinePermutation> pool;
  for (auto& r : affine_kl::max_double_coset_reps(d, epsilon, base + max_height))
    if (r.length <= base + max_height) pool.push_back(r.element);
  std::vector<int> pool_len;
  for (const auto& w : pool) pool_len.push_back(affine_kl::length(w));
  const std::size_t m = pool.size();
  std::vector<std::vector<char>> below(m, std::vector<char>(m, 0));  // below[x][y]: pool[x] <= pool[y]
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) below[x][y] = affine_kl::bruhat_leq(pool[x], pool[y]) ? 1 : 0;

  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return poset.height[x] < poset.height[y]; });

  std::vector<std::size_t> assign(n, m);
  std::vector<char> used(m, 0);
  std::vector<OrbitBridge> found;
  std::function<void(std::size_t)> rec = [&](std::size_t step) {
    if (found.size() >= max_results) return;
    if (step == n) {
      // Ideal: anything in the pool below an image is an image.
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < m; ++x)
          if (below[x][assign[k]] && !used[x]) return;
      std::vector<AffinePermutation> images;
      for (std::size_t k = 0; k < n; ++k) images.push_back(pool[assign[k]]);
      found.emplace_back(poset, epsilon, std::move(images));
      return;
    }
    const std::size_t node = order[step];
    for (std::size_t x = 0; x < m; ++x) {
      if (used[x] || pool_len[x] != base + poset.height[node]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < step && ok; ++prev) {
        const std::size_t other = order[prev];
        const std::size_t y = assign[other];
        ok = (poset.leq[other][node] != 0) == (below[y][x] != 0) &&
             (poset.leq[node][other] != 0) == (below[x][y] != 0);
      }
      if (!ok) continue;
      assign[node] = x;
      used[x] = 1;
      rec(step + 1);
      used[x] = 0;
      assign[node] = m;
    }
  };
  rec(0);
  return found;
}

OrbitBridge shipped_bridge(int d) {
  if (d < 1 || d > kMaxShippedBridgeDegree)
    throw CapabilityError("no verified orbit bridge for d = " + std::to_string(d) +
                          " (shipped for epsilon = d <= " + std::to_string(kMaxShippedBridgeDegree) + ")");
  auto found = find_bridges(quiver::orbit_poset(d, std::vector<int>(static_cast<std::size_t>(d), 1)), d, 1);
  if (found.empty()) throw InvariantViolation("bridge search found nothing for d = " + std::to_string(d));
  return std::move(found.front());
}

long long multiplicity_via_kl(const OrbitBridge& bridge, affine_kl::KLContext& ctx, const Multisegment& b,
                              const Multisegment& a) {
  const auto& wb = bridge.image(b);
  const auto& wa = bridge.image(a);
  const quiver::GradedOrbit ob(b), oa(a);
  if (quiver::closure_leq(oa, ob) != affine_kl::bruhat_leq(wa, wb) ||
      quiver::closure_leq(ob, oa) != affine_kl::bruhat_leq(wb, wa))
    throw ConsistencyError("bridge does not preserve the closure order on these orbits");
  return ctx.kl_polynomial(wa, wb).at_one();
}

groth::DecompositionMatrix kl_decomposition_matrix(int d) {
  const OrbitBridge br = shipped_bridge(d);
  auto basis = groth::BlockBasis::superunipotent(d, d);
  affine_kl::KLContext ctx(d);
  groth::IntMatrix m(basis->size());
  for (std::size_t b = 0; b < basis->size(); ++b)
    for (std::size_t a = 0; a < basis->size(); ++a)
      m(b, a) = multiplicity_via_kl(br, ctx, (*basis)[b], (*basis)[a]);
  return {std::move(basis), std::move(m)};
}

}  // namespace ljmod::bridge
