#include "ljmod/quiver_orbits.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "ljmod/errors.hpp"

namespace ljmod::quiver {

using segcomb::Multisegment;

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// #{ j in [lo, hi] : j = i mod e }
long long count_congruent(long long lo, long long hi, long long i, long long e) {
  if (hi < lo) return 0;
  return floor_div(hi - i, e) - floor_div(lo - 1 - i, e);
}

}  // namespace

GradedOrbit::GradedOrbit(Multisegment shape) : shape_(std::move(shape)), dims_(shape_.content()) {}

int rank_invariant(const Multisegment& a, int i, int l) {
  if (l < 1) throw DomainError("rank invariant needs l >= 1");
  const int e = a.period();
  const int res = ((i % e) + e) % e;
  long long total = 0;
  for (const auto& s : a.segments())
    total += s.weight * count_congruent(s.start, s.start + s.length - 1 - l, res, e);
  return static_cast<int>(total);
}

RankTable rank_table(const Multisegment& a, int max_l) {
  RankTable t(static_cast<std::size_t>(a.period()), std::vector<int>(static_cast<std::size_t>(std::max(max_l, 0))));
  for (int i = 0; i < a.period(); ++i)
    for (int l = 1; l <= max_l; ++l)
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(l - 1)] = rank_invariant(a, i, l);
  return t;
}

bool closure_leq(const GradedOrbit& b, const GradedOrbit& a) {
  if (b.period() != a.period() || b.dims() != a.dims())
    throw DomainError("orbits belong to different blocks");
  const int total = a.shape().degree();
  for (int i = 0; i < a.period(); ++i)
    for (int l = 1; l < total; ++l)
      if (rank_invariant(b.shape(), i, l) > rank_invariant(a.shape(), i, l)) return false;
  return true;
}

namespace {

struct BasisVector {
  int grade;
  std::size_t segment;
  int position;
};

std::vector<BasisVector> graded_basis(const Multisegment& a) {
  std::vector<BasisVector> basis;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& s = a.segments()[k];
    for (int copy = 0; copy < s.weight; ++copy)
      for (int p = 0; p < s.length; ++p)
        basis.push_back({(s.start + p) % a.period(), k * 1000 + static_cast<std::size_t>(copy), p});
  }
  std::stable_sort(basis.begin(), basis.end(), [](const BasisVector& x, const BasisVector& y) {
    if (x.grade != y.grade) return x.grade < y.grade;
    if (x.segment != y.segment) return x.segment < y.segment;
    return x.position < y.position;
  });
  return basis;
}

}  // namespace

std::vector<int> basis_grades(const Multisegment& a) {
  std::vector<int> g;
  for (const auto& v : graded_basis(a)) g.push_back(v.grade);
  return g;
}

FieldMatrix build_nilpotent_matrix(const Multisegment& a, FieldPtr field,
                                   const std::vector<FieldElem>& edge_scalars) {
  const auto basis = graded_basis(a);
  const std::size_t n = basis.size();
  auto position_of = [&](std::size_t seg, int pos) {
    for (std::size_t k = 0; k < n; ++k)
      if (basis[k].segment == seg && basis[k].position == pos) return k;
    throw InvariantViolation("basis vector not found");
  };
  FieldMatrix m(field, n, n);
  std::size_t edge = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& s = a.segments()[k];
    for (int copy = 0; copy < s.weight; ++copy)
      for (int p = 0; p + 1 < s.length; ++p, ++edge) {
        const std::size_t seg = k * 1000 + static_cast<std::size_t>(copy);
        FieldElem c = 1;
        if (!edge_scalars.empty()) {
          if (edge >= edge_scalars.size()) throw DomainError("not enough edge scalars");
          c = edge_scalars[edge];
          if (c == 0) throw DomainError("edge scalars must be nonzero");
        }
        m(position_of(seg, p + 1), position_of(seg, p)) = c;
      }
  }
  return m;
}

int composite_rank(const FieldMatrix& n, const std::vector<int>& grades, int i, int l) {
  if (grades.size() != n.rows()) throw DomainError("grade list does not match the matrix");
  std::vector<std::size_t> cols;
  for (std::size_t k = 0; k < grades.size(); ++k)
    if (grades[k] == i) cols.push_back(k);
  if (cols.empty()) return 0;
  const FieldMatrix power = n.pow(static_cast<unsigned long long>(l));
  FieldMatrix restricted(n.field(), n.rows(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < n.rows(); ++r) restricted(r, c) = power(r, cols[c]);
  return static_cast<int>(restricted.rank());
}

std::size_t OrbitPoset::cover_count() const {
  std::size_t c = 0;
  for (const auto& v : lower_covers) c += v.size();
  return c;
}

std::string OrbitPoset::to_json() const {
  nlohmann::ordered_json j;
  j["e"] = e;
  j["dims"] = dims;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& a : nodes) j["nodes"].push_back(a.id());
  nlohmann::ordered_json covers = nlohmann::ordered_json::object();
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    auto list = nlohmann::ordered_json::array();
    for (auto b : lower_covers[a]) list.push_back(nodes[b].id());
    covers[nodes[a].id()] = list;
  }
  j["covers"] = covers;
  return j.dump();
}

std::string OrbitPoset::to_dot() const {
  std::ostringstream os;
  os << "digraph orbits {\n  rankdir=BT;\n";
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    std::string label;
    for (const auto& s : nodes[a].segments())
      label += "[" + std::to_string(s.start) + "," + std::to_string(s.length) + "]";
    os << "  n" << a << " [label=\"" << label << "\"];\n";
  }
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (auto b : lower_covers[a]) os << "  n" << b << " -> n" << a << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

void finish(OrbitPoset& p) {
  const std::size_t n = p.size();
  p.lower_covers.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !p.leq[b][a]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && p.leq[b][c] && p.leq[c][a]) cover = false;
      if (cover) p.lower_covers[a].push_back(b);
    }
  // Heights in order of increasing number of elements below.
  std::vector<std::size_t> order(n), below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) below[a] += p.leq[b][a] ? 1 : 0;
  for (std::size_t a = 0; a < n; ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return below[x] < below[y]; });
  p.height.assign(n, 0);
  for (auto a : order)
    for (auto b : p.lower_covers[a]) p.height[a] = std::max(p.height[a], p.height[b] + 1);
}

OrbitPoset start(int e, const std::vector<int>& dims) {
  OrbitPoset p;
  p.e = e;
  p.dims = dims;
  p.nodes = segcomb::enumerate_block(e, dims);
  p.leq.assign(p.nodes.size(), std::vector<char>(p.nodes.size(), 0));
  return p;
}

}  // namespace

OrbitPoset orbit_poset(int e, const std::vector<int>& dims) {
  OrbitPoset p = start(e, dims);
  const auto n = static_cast<std::ptrdiff_t>(p.size());
  int total = 0;
  for (int v : dims) total += v;
  std::vector<RankTable> tables(p.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t a = 0; a < n; ++a)
    tables[static_cast<std::size_t>(a)] = rank_table(p.nodes[static_cast<std::size_t>(a)], total - 1);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t b = 0; b < n; ++b)
    for (std::ptrdiff_t a = 0; a < n; ++a) {
      const auto& tb = tables[static_cast<std::size_t>(b)];
      const auto& ta = tables[static_cast<std::size_t>(a)];
      bool ok = true;
      for (std::size_t i = 0; i < tb.size() && ok; ++i)
        for (std::size_t l = 0; l < tb[i].size() && ok; ++l) ok = tb[i][l] <= ta[i][l];
      p.leq[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = ok ? 1 : 0;
    }
  finish(p);
  return p;
}

OrbitPoset orbit_poset_serial(int e, const std::vector<int>& dims) {
  OrbitPoset p = start(e, dims);
  std::vector<GradedOrbit> orbits;
  for (const auto& a : p.nodes) orbits.emplace_back(a);
  for (std::size_t b = 0; b < p.size(); ++b)
    for (std::size_t a = 0; a < p.size(); ++a) p.leq[b][a] = closure_leq(orbits[b], orbits[a]) ? 1 : 0;
  finish(p);
  return p;
}

}  // namespace ljmod::quiver
